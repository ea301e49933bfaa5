#pragma once

// Logarithmic (Weil) heights of rationals and quadratic elements, computed
// exactly from the primitive minimal polynomial, plus the additive
// combination rules used to assemble height upper bounds.
//
// Heights are returned as certified enclosures whose upper endpoint is the
// bound to use: the linear-form machinery needs over-estimates.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "repdiff/precreal.hpp"
#include "repdiff/quadfield.hpp"

namespace repdiff {

// h(p/q) = log max(|p|, q) for p/q in lowest terms
PrecReal log_height(const mpq_class& x, mpfr_prec_t prec);

// degree-2 case: (1/2)(log a0 + sum_i log max(|x_i|, 1)) over both conjugates,
// a0 the leading coefficient of the primitive minimal polynomial
PrecReal log_height(const QuadElement& x, mpfr_prec_t prec);

// sum of multiplicity-weighted heights: the subadditive bound for products,
// powers (|s| h) and sums (callers add a log-2 part per +/- combination)
PrecReal height_bound_combination(const std::vector<std::pair<PrecReal, long>>& parts);

}  // namespace repdiff
