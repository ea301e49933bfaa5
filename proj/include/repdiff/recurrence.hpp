#pragma once

// Binary recurrences U_{n+2} = c1 U_{n+1} + c0 U_n with exact evaluation,
// Binet-form approximation through the exact root field, and the power
// growth envelopes used by the size arguments.

#include <gmpxx.h>

#include "repdiff/precreal.hpp"
#include "repdiff/quadfield.hpp"

namespace repdiff {

struct BinaryRecurrence {
    mpz_class c1, c0;  // U_{n+2} = c1*U_{n+1} + c0*U_n
    mpz_class u0, u1;
    // growth envelope alpha^(k+lo_off) <= U_k <= alpha^(k+hi_off),
    // valid for k >= env_k_min
    int env_lo_off = 0, env_hi_off = 0;
    long env_k_min = 0;

    static BinaryRecurrence pell() { return {2, 1, 0, 1, -2, -1, 2}; }
    static BinaryRecurrence pell_lucas() { return {2, 1, 2, 2, -1, 1, 1}; }

    // dominant root as an exact quadratic element (requires distinct real
    // roots with square-free-reducible discriminant)
    QuadElement dominant_root() const;
    QuadElement secondary_root() const;
};

// U_k by exact iteration
mpz_class term(const BinaryRecurrence& rec, long k);

// Binet-form value as a certified enclosure.  The enclosure is computed
// through exact powers of the roots, so its radius is at most 2^(-prec/2)
// (far smaller in practice) and rounding recovers term(rec, k) whenever
// prec >= 1.3k + 64.
PrecReal binet_approx(const BinaryRecurrence& rec, long k, mpfr_prec_t prec);

// binet_approx rounded to the nearest integer; throws precision_exhausted
// if the certified error reaches 1/2
mpz_class binet_round(const BinaryRecurrence& rec, long k, mpfr_prec_t prec);

// alpha^(k+lo_off) <= U_k <= alpha^(k+hi_off), decided exactly
bool growth_envelope_check(const BinaryRecurrence& rec, long k);

}  // namespace repdiff
