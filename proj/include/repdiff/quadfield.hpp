#pragma once

// Exact arithmetic in Q(sqrt(d)) for a square-free radicand d.
// Elements are a + b*sqrt(d) with rational a, b; all ring and field
// operations, conjugation and sign tests are exact.

#include <gmpxx.h>

#include <array>
#include <string>

#include "repdiff/precreal.hpp"

namespace repdiff {

class QuadElement {
  public:
    QuadElement() : a_(0), b_(0), d_(2) {}
    QuadElement(mpq_class a, mpq_class b, unsigned long d = 2);
    static QuadElement rational(const mpq_class& a, unsigned long d = 2) {
        return QuadElement(a, 0, d);
    }
    static QuadElement root(unsigned long d) { return QuadElement(0, 1, d); }

    // alpha = 1 + sqrt(2), beta = 1 - sqrt(2): the Pell characteristic roots
    static QuadElement alpha() { return QuadElement(1, 1, 2); }
    static QuadElement beta() { return QuadElement(1, -1, 2); }

    const mpq_class& rational_part() const { return a_; }
    const mpq_class& root_part() const { return b_; }
    unsigned long radicand() const { return d_; }
    bool is_rational() const { return b_ == 0; }
    bool is_zero() const { return a_ == 0 && b_ == 0; }

    QuadElement conj() const { return QuadElement(a_, -b_, d_); }
    QuadElement operator-() const { return QuadElement(-a_, -b_, d_); }
    mpq_class norm() const { return a_ * a_ - mpq_class(static_cast<long>(d_)) * b_ * b_; }
    mpq_class trace() const { return 2 * a_; }

    QuadElement operator+(const QuadElement& o) const;
    QuadElement operator-(const QuadElement& o) const;
    QuadElement operator*(const QuadElement& o) const;
    QuadElement operator/(const QuadElement& o) const;
    bool operator==(const QuadElement& o) const = default;

    QuadElement pow_ui(unsigned long e) const;

    // exact sign of a + b*sqrt(d): -1, 0, +1
    int sign() const;
    bool operator<(const QuadElement& o) const { return (*this - o).sign() < 0; }

    // exact comparison against a rational
    int compare(const mpq_class& q) const { return (*this - rational(q, d_)).sign(); }

    // certified enclosure at the given precision
    PrecReal to_precreal(mpfr_prec_t prec) const;

    // primitive minimal polynomial over Z.  Rational x: (den, -num) degree 1,
    // returned as {0, den, -num}.  Quadratic: {c2, c1, c0} with c2 > 0,
    // gcd(c2,c1,c0) = 1 and c2*x^2 + c1*x + c0 = 0.
    std::array<mpz_class, 3> min_poly() const;

    std::string to_string() const;

  private:
    mpq_class a_, b_;
    unsigned long d_;
    void check_compatible(const QuadElement& o) const;
};

// natural log of a positive argument with certified error at most 2^(1-prec)
PrecReal eval_log(const QuadElement& x, mpfr_prec_t prec);
PrecReal eval_log(const mpq_class& x, mpfr_prec_t prec);

}  // namespace repdiff
