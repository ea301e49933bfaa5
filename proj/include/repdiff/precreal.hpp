#pragma once

// Certified-enclosure real arithmetic on top of MPFR.
//
// A PrecReal is an interval [lo, hi] whose endpoints are MPFR values at a
// common working precision, maintained with directed rounding so that the
// true quantity is always contained.  value() is the midpoint, err() the
// radius, so |value - true| <= err holds by construction.

#include <gmpxx.h>
#include <mpfr.h>

#include <stdexcept>
#include <string>
#include <utility>

namespace repdiff {

struct precision_exhausted : std::runtime_error {
    explicit precision_exhausted(const std::string& what) : std::runtime_error(what) {}
};

// Working-precision policy shared by the high-level operations: start at
// `floor` bits, double on demand up to `cap` bits before failing.
struct PrecPolicy {
    mpfr_prec_t floor = 256;
    mpfr_prec_t cap = 8192;
};

class PrecReal {
  public:
    PrecReal() : PrecReal(64) {}
    explicit PrecReal(mpfr_prec_t prec);
    PrecReal(const PrecReal& o);
    PrecReal(PrecReal&& o) noexcept;
    PrecReal& operator=(PrecReal o);
    ~PrecReal();

    static PrecReal exact_long(long v, mpfr_prec_t prec = 64);
    static PrecReal exact_int(const mpz_class& v, mpfr_prec_t prec);
    static PrecReal from_rational(const mpq_class& v, mpfr_prec_t prec);
    // square root of a nonnegative integer, enclosure at `prec`
    static PrecReal sqrt_ui(unsigned long d, mpfr_prec_t prec);
    static PrecReal from_endpoints(const mpfr_t lo, const mpfr_t hi, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& lower() const { return lo_; }
    const mpfr_t& upper() const { return hi_; }

    double value_d() const;
    double err_d() const;
    // midpoint and radius at full precision
    PrecReal midpoint() const;
    PrecReal radius() const;

    bool is_positive() const { return mpfr_sgn(lo_) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_) < 0; }
    bool contains_zero() const { return mpfr_sgn(lo_) <= 0 && mpfr_sgn(hi_) >= 0; }
    bool is_exact_zero() const { return mpfr_zero_p(lo_) && mpfr_zero_p(hi_); }

    // certified order tests (false means "not certainly", not "certainly not")
    bool certainly_less(const PrecReal& o) const { return mpfr_cmp(hi_, o.lo_) < 0; }
    bool certainly_le(const mpz_class& n) const;
    bool certainly_ge(const mpz_class& n) const;

    PrecReal operator-() const;
    PrecReal abs() const;

    friend PrecReal operator+(const PrecReal& a, const PrecReal& b);
    friend PrecReal operator-(const PrecReal& a, const PrecReal& b);
    friend PrecReal operator*(const PrecReal& a, const PrecReal& b);
    friend PrecReal operator/(const PrecReal& a, const PrecReal& b);

    PrecReal add_long(long v) const;
    PrecReal mul_long(long v) const;
    PrecReal mul_int(const mpz_class& v) const;

    // natural log; requires a certainly positive enclosure
    PrecReal log() const;
    PrecReal exp() const;
    PrecReal pow_ui(unsigned long e) const;
    PrecReal recip() const;

    // (1 + log(*this)), the recurring Matveev factor
    PrecReal one_plus_log() const;

    // certified floor: both endpoints must agree; ok=false otherwise
    mpz_class floor_certified(bool& ok) const;
    // nearest integer to the midpoint (used where certification is separate)
    mpz_class round_mid() const;
    // directed floors/ceilings of single endpoints
    mpz_class floor_upper() const;
    mpz_class ceil_upper() const;

    // exact binary-rational value of an endpoint
    mpq_class upper_rational() const;
    mpq_class lower_rational() const;

    // endpoint-wise max/min (a valid enclosure of max/min of the quantities)
    static PrecReal max(const PrecReal& a, const PrecReal& b);

    // distance to the nearest integer, as a certified enclosure;
    // requires err < 1/4
    PrecReal nearest_int_distance() const;

    // decimal rendering of the midpoint with explicit error bound,
    // e.g. "0.8813735870(±2^-120)"; digits = significant digits of midpoint
    std::string to_string(int digits = 20) const;
    // decimal of the lower/upper endpoint alone (for bound reporting)
    std::string lower_string(int digits = 20) const;
    std::string upper_string(int digits = 20) const;

  private:
    mpfr_t lo_, hi_;
    mpfr_prec_t prec_;

    void check_valid() const;
    friend void swap(PrecReal& a, PrecReal& b) noexcept;
};

void swap(PrecReal& a, PrecReal& b) noexcept;

// free-function spelling used by the operation contracts
PrecReal nearest_int_distance(const PrecReal& x);

}  // namespace repdiff
