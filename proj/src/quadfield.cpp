#include "repdiff/quadfield.hpp"

#include <sstream>
#include <stdexcept>

namespace repdiff {

QuadElement::QuadElement(mpq_class a, mpq_class b, unsigned long d)
    : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (d_ < 2) throw std::invalid_argument("QuadElement: radicand must be >= 2");
    a_.canonicalize();
    b_.canonicalize();
}

void QuadElement::check_compatible(const QuadElement& o) const {
    if (d_ != o.d_) throw std::invalid_argument("QuadElement: mixed radicands");
}

QuadElement QuadElement::operator+(const QuadElement& o) const {
    check_compatible(o);
    return QuadElement(a_ + o.a_, b_ + o.b_, d_);
}

QuadElement QuadElement::operator-(const QuadElement& o) const {
    check_compatible(o);
    return QuadElement(a_ - o.a_, b_ - o.b_, d_);
}

QuadElement QuadElement::operator*(const QuadElement& o) const {
    check_compatible(o);
    mpq_class d(static_cast<long>(d_));
    return QuadElement(a_ * o.a_ + d * b_ * o.b_, a_ * o.b_ + b_ * o.a_, d_);
}

QuadElement QuadElement::operator/(const QuadElement& o) const {
    check_compatible(o);
    mpq_class n = o.norm();
    if (n == 0) throw std::domain_error("QuadElement: division by zero");
    QuadElement num = *this * o.conj();
    return QuadElement(num.a_ / n, num.b_ / n, d_);
}

QuadElement QuadElement::pow_ui(unsigned long e) const {
    QuadElement result = rational(1, d_);
    QuadElement base = *this;
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

int QuadElement::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // opposite signs: compare a^2 against d*b^2
    mpq_class lhs = a_ * a_;
    mpq_class rhs = mpq_class(static_cast<long>(d_)) * b_ * b_;
    int c = cmp(lhs, rhs);
    if (c == 0) return 0;  // only possible if d were a perfect square
    // |a| dominates -> sign of a, else sign of b
    return c > 0 ? sa : sb;
}

PrecReal QuadElement::to_precreal(mpfr_prec_t prec) const {
    PrecReal a = PrecReal::from_rational(a_, prec);
    if (b_ == 0) return a;
    PrecReal root = PrecReal::sqrt_ui(d_, prec);
    return a + PrecReal::from_rational(b_, prec) * root;
}

std::array<mpz_class, 3> QuadElement::min_poly() const {
    if (is_rational()) {
        mpq_class a = a_;
        a.canonicalize();
        return {mpz_class(0), a.get_den(), mpz_class(-a.get_num())};
    }
    // x = a + b sqrt(d) satisfies x^2 - 2a x + (a^2 - d b^2) = 0
    mpq_class c1 = -2 * a_;
    mpq_class c0 = norm();
    mpz_class den = lcm(c1.get_den(), c0.get_den());
    mpz_class i2 = den;
    mpz_class i1 = mpz_class(c1.get_num() * (den / c1.get_den()));
    mpz_class i0 = mpz_class(c0.get_num() * (den / c0.get_den()));
    mpz_class g = gcd(gcd(i2, i1), i0);
    i2 /= g;
    i1 /= g;
    i0 /= g;
    if (i2 < 0) {
        i2 = -i2;
        i1 = -i1;
        i0 = -i0;
    }
    return {i2, i1, i0};
}

std::string QuadElement::to_string() const {
    std::ostringstream os;
    os << a_.get_str();
    if (b_ != 0) {
        os << (b_ > 0 ? "+" : "") << b_.get_str() << "*sqrt(" << d_ << ")";
    }
    return os.str();
}

PrecReal eval_log(const QuadElement& x, mpfr_prec_t prec) {
    if (x.sign() <= 0) throw std::domain_error("eval_log: argument must be positive");
    if (x.compare(1) == 0) return PrecReal::exact_long(0, prec);
    mpfr_t tol;
    mpfr_init2(tol, 64);
    mpfr_set_ui_2exp(tol, 1, 1 - prec, MPFR_RNDN);
    for (mpfr_prec_t p = prec + 16;; p *= 2) {
        PrecReal v = x.to_precreal(p).log();
        mpfr_t width;
        mpfr_init2(width, 64);
        mpfr_sub(width, v.upper(), v.lower(), MPFR_RNDU);
        bool tight = mpfr_cmp(width, tol) <= 0;
        mpfr_clear(width);
        if (tight) {
            mpfr_clear(tol);
            return v;
        }
        if (p > 64 * prec + (1 << 20)) {
            mpfr_clear(tol);
            throw precision_exhausted("eval_log: cannot reach the requested error bound");
        }
    }
}

PrecReal eval_log(const mpq_class& x, mpfr_prec_t prec) {
    return eval_log(QuadElement::rational(x), prec);
}

}  // namespace repdiff
