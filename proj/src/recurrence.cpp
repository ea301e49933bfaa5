#include "repdiff/recurrence.hpp"

#include <stdexcept>

namespace repdiff {

// split disc = s^2 * d with d square-free (trial division; discriminants
// here are small)
static void split_square(const mpz_class& disc, mpz_class& s, unsigned long& d) {
    s = 1;
    mpz_class rest = disc;
    for (mpz_class f = 2; f * f <= rest; ++f) {
        while (rest % (f * f) == 0) {
            rest /= f * f;
            s *= f;
        }
    }
    if (!rest.fits_ulong_p()) throw std::domain_error("recurrence: discriminant too large");
    d = rest.get_ui();
}

QuadElement BinaryRecurrence::dominant_root() const {
    mpz_class disc = c1 * c1 + 4 * c0;
    if (disc <= 0) throw std::domain_error("recurrence: no distinct real roots");
    mpz_class s;
    unsigned long d = 0;
    split_square(disc, s, d);
    if (d < 2) throw std::domain_error("recurrence: rational roots are out of scope");
    // (c1 + s*sqrt(d)) / 2
    return QuadElement(mpq_class(c1, 2), mpq_class(s, 2), d);
}

QuadElement BinaryRecurrence::secondary_root() const { return dominant_root().conj(); }

mpz_class term(const BinaryRecurrence& rec, long k) {
    if (k < 0) throw std::invalid_argument("term: negative index");
    if (k == 0) return rec.u0;
    if (k == 1) return rec.u1;
    mpz_class prev = rec.u0, cur = rec.u1, next;
    for (long i = 2; i <= k; ++i) {
        next = rec.c1 * cur + rec.c0 * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// Binet coefficients: U_k = A*alpha^k + B*beta^k with
// A = (u1 - u0*beta)/(alpha-beta), B = (u0*alpha - u1)/(alpha-beta)
static void binet_coefficients(const BinaryRecurrence& rec, QuadElement& A, QuadElement& B) {
    QuadElement alpha = rec.dominant_root();
    QuadElement beta = alpha.conj();
    QuadElement diff = alpha - beta;
    QuadElement u0q = QuadElement::rational(mpq_class(rec.u0), alpha.radicand());
    QuadElement u1q = QuadElement::rational(mpq_class(rec.u1), alpha.radicand());
    A = (u1q - u0q * beta) / diff;
    B = (u0q * alpha - u1q) / diff;
}

PrecReal binet_approx(const BinaryRecurrence& rec, long k, mpfr_prec_t prec) {
    if (k < 0) throw std::invalid_argument("binet_approx: negative index");
    if (prec < 64) throw std::invalid_argument("binet_approx: prec must be >= 64");
    QuadElement A, B;
    binet_coefficients(rec, A, B);
    QuadElement alpha = rec.dominant_root();
    // exact in the field; only the final conversion rounds
    QuadElement value = A * alpha.pow_ui(static_cast<unsigned long>(k)) +
                        B * alpha.conj().pow_ui(static_cast<unsigned long>(k));
    mpfr_prec_t internal = prec + static_cast<mpfr_prec_t>(1.3 * static_cast<double>(k)) + 64;
    return value.to_precreal(internal);
}

mpz_class binet_round(const BinaryRecurrence& rec, long k, mpfr_prec_t prec) {
    PrecReal v = binet_approx(rec, k, prec);
    bool ok = false;
    mpz_class f = (v + PrecReal::from_rational(mpq_class(1, 2), v.precision())).floor_certified(ok);
    if (!ok) throw precision_exhausted("binet_round: certified error reaches 1/2");
    return f;
}

bool growth_envelope_check(const BinaryRecurrence& rec, long k) {
    if (k < rec.env_k_min) throw std::invalid_argument("growth_envelope_check: index below validity");
    QuadElement alpha = rec.dominant_root();
    mpz_class u = term(rec, k);
    QuadElement uq = QuadElement::rational(mpq_class(u), alpha.radicand());
    // negative exponents handled by exact division
    auto alpha_pow = [&](long e) {
        if (e >= 0) return alpha.pow_ui(static_cast<unsigned long>(e));
        return QuadElement::rational(1, alpha.radicand()) / alpha.pow_ui(static_cast<unsigned long>(-e));
    };
    QuadElement lo = alpha_pow(k + rec.env_lo_off);
    QuadElement hi = alpha_pow(k + rec.env_hi_off);
    return (uq - lo).sign() >= 0 && (hi - uq).sign() >= 0;
}

}  // namespace repdiff
