#pragma once

// Re-evaluable quantity descriptors: a named real number that can be asked
// for a certified enclosure at any working precision.  Exactly-rational
// quantities carry their value so continued fractions can run Euclid.

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <string>

#include "repdiff/precreal.hpp"
#include "repdiff/quadfield.hpp"

namespace repdiff {

struct Quantity {
    std::string name;
    std::function<PrecReal(mpfr_prec_t)> eval;
    std::optional<mpq_class> exact;  // set iff the quantity is rational

    PrecReal operator()(mpfr_prec_t prec) const { return eval(prec); }
};

Quantity quantity_rational(const mpq_class& v, std::string name);
Quantity quantity_algebraic(const QuadElement& v, std::string name);
// log(num) / log(base); both arguments must be positive
Quantity quantity_log_ratio(const QuadElement& num, const QuadElement& base, std::string name);

// named constants accepted by the command line (pell-gamma, pell-gamma-inv,
// pell-mu-a1-D, pl-mu-a1-D); also parses plain decimal literals exactly
Quantity named_quantity(const std::string& spec);

// decimal literal ("2.5", "-0.37") to an exact rational
mpq_class parse_decimal(const std::string& text);

}  // namespace repdiff
