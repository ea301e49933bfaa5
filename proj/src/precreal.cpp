#include "repdiff/precreal.hpp"

#include <algorithm>
#include <cstdio>
#include <vector>

namespace repdiff {

PrecReal::PrecReal(mpfr_prec_t prec) : prec_(std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN)) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set_zero(lo_, 1);
    mpfr_set_zero(hi_, 1);
}

PrecReal::PrecReal(const PrecReal& o) : prec_(o.prec_) {
    mpfr_init2(lo_, prec_);
    mpfr_init2(hi_, prec_);
    mpfr_set(lo_, o.lo_, MPFR_RNDD);
    mpfr_set(hi_, o.hi_, MPFR_RNDU);
}

PrecReal::PrecReal(PrecReal&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(lo_, MPFR_PREC_MIN);
    mpfr_init2(hi_, MPFR_PREC_MIN);
    mpfr_swap(lo_, o.lo_);
    mpfr_swap(hi_, o.hi_);
}

PrecReal& PrecReal::operator=(PrecReal o) {
    swap(*this, o);
    return *this;
}

PrecReal::~PrecReal() {
    mpfr_clear(lo_);
    mpfr_clear(hi_);
}

void swap(PrecReal& a, PrecReal& b) noexcept {
    mpfr_swap(a.lo_, b.lo_);
    mpfr_swap(a.hi_, b.hi_);
    std::swap(a.prec_, b.prec_);
}

void PrecReal::check_valid() const {
    if (mpfr_nan_p(lo_) || mpfr_nan_p(hi_) || mpfr_cmp(lo_, hi_) > 0)
        throw std::logic_error("PrecReal: invalid enclosure");
}

PrecReal PrecReal::exact_long(long v, mpfr_prec_t prec) {
    PrecReal r(std::max<mpfr_prec_t>(prec, 64));
    mpfr_set_si(r.lo_, v, MPFR_RNDD);
    mpfr_set_si(r.hi_, v, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::exact_int(const mpz_class& v, mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_set_z(r.lo_, v.get_mpz_t(), MPFR_RNDD);
    mpfr_set_z(r.hi_, v.get_mpz_t(), MPFR_RNDU);
    return r;
}

PrecReal PrecReal::from_rational(const mpq_class& v, mpfr_prec_t prec) {
    mpq_class c = v;
    c.canonicalize();
    PrecReal r(prec);
    mpfr_set_q(r.lo_, c.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_, c.get_mpq_t(), MPFR_RNDU);
    return r;
}

PrecReal PrecReal::sqrt_ui(unsigned long d, mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_sqrt_ui(r.lo_, d, MPFR_RNDD);
    mpfr_sqrt_ui(r.hi_, d, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec) {
    PrecReal r(prec);
    mpfr_set(r.lo_, lo, MPFR_RNDD);
    mpfr_set(r.hi_, hi, MPFR_RNDU);
    r.check_valid();
    return r;
}

double PrecReal::value_d() const {
    mpfr_t mid;
    mpfr_init2(mid, 64);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    double v = mpfr_get_d(mid, MPFR_RNDN);
    mpfr_clear(mid);
    return v;
}

double PrecReal::err_d() const {
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(w, w, 1, MPFR_RNDU);
    double v = mpfr_get_d(w, MPFR_RNDU);
    mpfr_clear(w);
    return v;
}

PrecReal PrecReal::midpoint() const {
    PrecReal r(prec_);
    mpfr_add(r.lo_, lo_, hi_, MPFR_RNDD);
    mpfr_div_2ui(r.lo_, r.lo_, 1, MPFR_RNDD);
    mpfr_add(r.hi_, lo_, hi_, MPFR_RNDU);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::radius() const {
    PrecReal r(prec_);
    mpfr_sub(r.hi_, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(r.hi_, r.hi_, 1, MPFR_RNDU);
    mpfr_set_zero(r.lo_, 1);
    mpfr_set(r.lo_, r.hi_, MPFR_RNDD);
    return r;
}

bool PrecReal::certainly_le(const mpz_class& n) const {
    return mpfr_cmp_z(hi_, n.get_mpz_t()) <= 0;
}

bool PrecReal::certainly_ge(const mpz_class& n) const {
    return mpfr_cmp_z(lo_, n.get_mpz_t()) >= 0;
}

PrecReal PrecReal::operator-() const {
    PrecReal r(prec_);
    mpfr_neg(r.lo_, hi_, MPFR_RNDD);
    mpfr_neg(r.hi_, lo_, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::abs() const {
    if (!contains_zero()) return is_negative() ? -*this : *this;
    PrecReal r(prec_);
    mpfr_set_zero(r.lo_, 1);
    mpfr_t na;
    mpfr_init2(na, prec_);
    mpfr_neg(na, lo_, MPFR_RNDU);
    if (mpfr_cmp(na, hi_) > 0)
        mpfr_set(r.hi_, na, MPFR_RNDU);
    else
        mpfr_set(r.hi_, hi_, MPFR_RNDU);
    mpfr_clear(na);
    return r;
}

PrecReal operator+(const PrecReal& a, const PrecReal& b) {
    PrecReal r(std::max(a.prec_, b.prec_));
    mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
    mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
    return r;
}

PrecReal operator-(const PrecReal& a, const PrecReal& b) {
    PrecReal r(std::max(a.prec_, b.prec_));
    mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
    mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
    return r;
}

PrecReal operator*(const PrecReal& a, const PrecReal& b) {
    PrecReal r(std::max(a.prec_, b.prec_));
    // fast path for certainly nonnegative operands (the common case here)
    if (mpfr_sgn(a.lo_) >= 0 && mpfr_sgn(b.lo_) >= 0) {
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    mpfr_t c[4];
    for (auto& x : c) mpfr_init2(x, r.prec_);
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDD);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDD);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDD);
    mpfr_set(r.lo_, c[0], MPFR_RNDD);
    for (int i = 1; i < 4; ++i)
        if (mpfr_cmp(c[i], r.lo_) < 0) mpfr_set(r.lo_, c[i], MPFR_RNDD);
    mpfr_mul(c[0], a.lo_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[1], a.lo_, b.hi_, MPFR_RNDU);
    mpfr_mul(c[2], a.hi_, b.lo_, MPFR_RNDU);
    mpfr_mul(c[3], a.hi_, b.hi_, MPFR_RNDU);
    mpfr_set(r.hi_, c[0], MPFR_RNDU);
    for (int i = 1; i < 4; ++i)
        if (mpfr_cmp(c[i], r.hi_) > 0) mpfr_set(r.hi_, c[i], MPFR_RNDU);
    for (auto& x : c) mpfr_clear(x);
    return r;
}

PrecReal PrecReal::recip() const {
    if (contains_zero()) throw std::domain_error("PrecReal: reciprocal of enclosure containing 0");
    PrecReal r(prec_);
    mpfr_ui_div(r.lo_, 1, hi_, MPFR_RNDD);
    mpfr_ui_div(r.hi_, 1, lo_, MPFR_RNDU);
    return r;
}

PrecReal operator/(const PrecReal& a, const PrecReal& b) { return a * b.recip(); }

PrecReal PrecReal::add_long(long v) const {
    PrecReal r(prec_);
    mpfr_add_si(r.lo_, lo_, v, MPFR_RNDD);
    mpfr_add_si(r.hi_, hi_, v, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::mul_long(long v) const { return *this * exact_long(v, prec_); }

PrecReal PrecReal::mul_int(const mpz_class& v) const { return *this * exact_int(v, prec_); }

PrecReal PrecReal::log() const {
    if (!is_positive()) throw std::domain_error("PrecReal: log of non-positive enclosure");
    PrecReal r(prec_);
    mpfr_log(r.lo_, lo_, MPFR_RNDD);
    mpfr_log(r.hi_, hi_, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::exp() const {
    PrecReal r(prec_);
    mpfr_exp(r.lo_, lo_, MPFR_RNDD);
    mpfr_exp(r.hi_, hi_, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::pow_ui(unsigned long e) const {
    if (mpfr_sgn(lo_) < 0) throw std::domain_error("PrecReal: pow_ui needs nonnegative base");
    PrecReal r(prec_);
    mpfr_pow_ui(r.lo_, lo_, e, MPFR_RNDD);
    mpfr_pow_ui(r.hi_, hi_, e, MPFR_RNDU);
    return r;
}

PrecReal PrecReal::one_plus_log() const { return log().add_long(1); }

mpz_class PrecReal::floor_certified(bool& ok) const {
    mpz_class flo, fhi;
    mpfr_get_z(flo.get_mpz_t(), lo_, MPFR_RNDD);
    mpfr_get_z(fhi.get_mpz_t(), hi_, MPFR_RNDD);
    ok = (flo == fhi);
    return flo;
}

mpz_class PrecReal::round_mid() const {
    mpfr_t mid;
    mpfr_init2(mid, prec_);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpz_class n;
    mpfr_get_z(n.get_mpz_t(), mid, MPFR_RNDN);
    mpfr_clear(mid);
    return n;
}

PrecReal PrecReal::nearest_int_distance() const {
    // the enclosure must pin the quantity down to less than 1/4
    mpfr_t w;
    mpfr_init2(w, 64);
    mpfr_sub(w, hi_, lo_, MPFR_RNDU);
    bool too_wide = mpfr_cmp_d(w, 0.5) >= 0;  // radius >= 1/4
    mpfr_clear(w);
    if (too_wide)
        throw precision_exhausted("nearest_int_distance: enclosure radius is not below 1/4");

    mpz_class nlo, nhi;
    mpfr_get_z(nlo.get_mpz_t(), lo_, MPFR_RNDN);
    mpfr_get_z(nhi.get_mpz_t(), hi_, MPFR_RNDN);

    // |endpoint - its nearest integer| with the requested rounding direction
    auto endpoint_dist = [&](const mpfr_t v, const mpz_class& n, mpfr_rnd_t rnd, mpfr_t out) {
        mpfr_rnd_t inner = (rnd == MPFR_RNDU) ? MPFR_RNDD : MPFR_RNDU;
        // pre-abs rounding direction flips when the difference is negative;
        // compute both and take the directed extreme to stay safe
        mpfr_t t;
        mpfr_init2(t, prec_);
        mpfr_sub_z(out, v, n.get_mpz_t(), rnd);
        mpfr_abs(out, out, rnd);
        mpfr_sub_z(t, v, n.get_mpz_t(), inner);
        mpfr_abs(t, t, rnd);
        if ((rnd == MPFR_RNDU && mpfr_cmp(t, out) > 0) || (rnd == MPFR_RNDD && mpfr_cmp(t, out) < 0))
            mpfr_set(out, t, rnd);
        mpfr_clear(t);
    };

    PrecReal r(prec_);
    mpfr_t a, b;
    mpfr_init2(a, prec_);
    mpfr_init2(b, prec_);
    if (nlo == nhi) {
        // triangle wave is V-shaped or monotone over the interval
        bool crosses = (mpfr_cmp_z(lo_, nlo.get_mpz_t()) <= 0 && mpfr_cmp_z(hi_, nlo.get_mpz_t()) >= 0);
        if (crosses) {
            mpfr_set_zero(r.lo_, 1);
        } else {
            endpoint_dist(lo_, nlo, MPFR_RNDD, a);
            endpoint_dist(hi_, nlo, MPFR_RNDD, b);
            mpfr_set(r.lo_, mpfr_cmp(a, b) < 0 ? a : b, MPFR_RNDD);
        }
        endpoint_dist(lo_, nlo, MPFR_RNDU, a);
        endpoint_dist(hi_, nlo, MPFR_RNDU, b);
        mpfr_set(r.hi_, mpfr_cmp(a, b) > 0 ? a : b, MPFR_RNDU);
    } else {
        // interval straddles a half-integer: max distance is exactly 1/2
        endpoint_dist(lo_, nlo, MPFR_RNDD, a);
        endpoint_dist(hi_, nhi, MPFR_RNDD, b);
        mpfr_set(r.lo_, mpfr_cmp(a, b) < 0 ? a : b, MPFR_RNDD);
        mpfr_set_d(r.hi_, 0.5, MPFR_RNDU);
    }
    mpfr_clear(a);
    mpfr_clear(b);
    r.check_valid();
    return r;
}

mpz_class PrecReal::floor_upper() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDD);
    return z;
}

mpz_class PrecReal::ceil_upper() const {
    mpz_class z;
    mpfr_get_z(z.get_mpz_t(), hi_, MPFR_RNDU);
    return z;
}

static mpq_class mpfr_to_rational(const mpfr_t v) {
    if (mpfr_zero_p(v)) return mpq_class(0);
    if (!mpfr_number_p(v)) throw std::domain_error("PrecReal: endpoint is not finite");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v);
    mpq_class q(m);
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        q *= p;
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        q /= p;
    }
    q.canonicalize();
    return q;
}

mpq_class PrecReal::upper_rational() const { return mpfr_to_rational(hi_); }
mpq_class PrecReal::lower_rational() const { return mpfr_to_rational(lo_); }

PrecReal PrecReal::max(const PrecReal& a, const PrecReal& b) {
    PrecReal r(std::max(a.prec_, b.prec_));
    mpfr_set(r.lo_, mpfr_cmp(a.lo_, b.lo_) >= 0 ? a.lo_ : b.lo_, MPFR_RNDD);
    mpfr_set(r.hi_, mpfr_cmp(a.hi_, b.hi_) >= 0 ? a.hi_ : b.hi_, MPFR_RNDU);
    return r;
}

static std::string mpfr_decimal(const mpfr_t v, int digits, mpfr_rnd_t rnd) {
    char buf[512];
    mpfr_snprintf(buf, sizeof buf, "%.*R*g", digits, rnd, v);
    return std::string(buf);
}

std::string PrecReal::to_string(int digits) const {
    mpfr_t mid, rad;
    mpfr_init2(mid, prec_);
    mpfr_init2(rad, 64);
    mpfr_add(mid, lo_, hi_, MPFR_RNDN);
    mpfr_div_2ui(mid, mid, 1, MPFR_RNDN);
    mpfr_sub(rad, hi_, lo_, MPFR_RNDU);
    mpfr_div_2ui(rad, rad, 1, MPFR_RNDU);
    std::string s = mpfr_decimal(mid, digits, MPFR_RNDN);
    if (mpfr_zero_p(rad)) {
        s += "(exact)";
    } else {
        long e2 = mpfr_get_exp(rad);  // rad < 2^e2
        s += "(±2^" + std::to_string(e2) + ")";
    }
    mpfr_clear(mid);
    mpfr_clear(rad);
    return s;
}

std::string PrecReal::lower_string(int digits) const { return mpfr_decimal(lo_, digits, MPFR_RNDD); }
std::string PrecReal::upper_string(int digits) const { return mpfr_decimal(hi_, digits, MPFR_RNDU); }

PrecReal nearest_int_distance(const PrecReal& x) { return x.nearest_int_distance(); }

}  // namespace repdiff
