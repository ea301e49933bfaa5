#pragma once

// Turns the monotone transcendental inequalities produced by the linear-form
// bounds into explicit integer ceilings: the least K such that the
// inequality fails for every k >= K, found by upward fixed-point iteration
// and verified by direct substitution at K and K-1.

#include <gmpxx.h>

#include <variant>

#include "repdiff/precreal.hpp"

namespace repdiff {

// s*k - d < c*(1+log(k+shift))*(e1 + e2*w)   jointly with
// w*log10 < cp*(1+log(k+shift)) + dp
struct CombinedShape {
    PrecReal s, d, c, e1, e2, cp, dp;
    long shift = 0;
};

// k < c*(1 + log(k + shift))^power + d, power in {1, 2}
struct PowerLogShape {
    PrecReal c;
    long shift = 0;
    int power = 2;
    PrecReal d;
};

// k < bound
struct ConstShape {
    PrecReal bound;
};

using KCeilingShape = std::variant<CombinedShape, PowerLogShape, ConstShape>;

struct KCeilingResult {
    mpz_class K;
    int iterations;
};

KCeilingResult solve_k_ceiling(const KCeilingShape& shape, mpfr_prec_t prec = 256);

}  // namespace repdiff
