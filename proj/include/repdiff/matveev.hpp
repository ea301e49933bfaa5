#pragma once

// Lower bounds for linear forms in logarithms: assembly of the
// 1.4*30^(t+3)*t^4.5*D^2*(1+log D)*(1+log B)*A_1...A_t constant, with every
// factor rounded up, and the two log/exp comparison factors used to convert
// |e^z - 1| bounds into |z| bounds.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "repdiff/precreal.hpp"

namespace repdiff {

struct MatveevInstance {
    int t = 1;  // number of logarithms
    int D = 1;  // field degree
    // exponent bound; absent when the caller wants the per-(1+log B)
    // coefficient to combine with a symbolic B
    std::optional<mpq_class> B;
    std::vector<PrecReal> A;  // certified upper bounds, one per logarithm
};

// the full constant c with log|Lambda| > -c (requires B); upper endpoint is
// the bound to use
PrecReal matveev_exponent(const MatveevInstance& inst, mpfr_prec_t prec);

// the constant without its (1+log B) factor, for symbolic exponent bounds
PrecReal matveev_coefficient(const MatveevInstance& inst, mpfr_prec_t prec);

// |log(x+1)| < weber_log_factor(a) * |x|   whenever |x| < a
PrecReal weber_log_factor(const mpq_class& a, mpfr_prec_t prec);
// |x| < weber_exp_factor(a) * |e^x - 1|    whenever |x| < a
PrecReal weber_exp_factor(const mpq_class& a, mpfr_prec_t prec);

}  // namespace repdiff
