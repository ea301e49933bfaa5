#include "repdiff/matveev.hpp"

#include <stdexcept>

namespace repdiff {

static void validate(const MatveevInstance& inst) {
    if (inst.t < 1 || inst.D < 1) throw std::invalid_argument("matveev: t and D must be >= 1");
    if (static_cast<int>(inst.A.size()) != inst.t)
        throw std::invalid_argument("matveev: need exactly t height parameters");
    mpq_class min_a(16, 100);
    for (const auto& a : inst.A) {
        PrecReal diff = a - PrecReal::from_rational(min_a, a.precision());
        if (diff.is_negative()) throw std::invalid_argument("matveev: A_i below 0.16");
    }
    if (inst.B && *inst.B < 1) throw std::invalid_argument("matveev: B must be >= 1");
}

PrecReal matveev_coefficient(const MatveevInstance& inst, mpfr_prec_t prec) {
    validate(inst);
    PrecReal c = PrecReal::from_rational(mpq_class(14, 10), prec);
    c = c * PrecReal::exact_long(30, prec).pow_ui(static_cast<unsigned long>(inst.t) + 3);
    // t^4.5 = t^4 * sqrt(t)
    PrecReal t = PrecReal::exact_long(inst.t, prec);
    PrecReal sqrt_t = PrecReal::sqrt_ui(static_cast<unsigned long>(inst.t), prec);
    c = c * t.pow_ui(4) * sqrt_t;
    PrecReal d = PrecReal::exact_long(inst.D, prec);
    c = c * d * d * d.one_plus_log();
    for (const auto& a : inst.A) c = c * a;
    return c;
}

PrecReal matveev_exponent(const MatveevInstance& inst, mpfr_prec_t prec) {
    if (!inst.B) throw std::invalid_argument("matveev_exponent: numeric B required");
    PrecReal c = matveev_coefficient(inst, prec);
    PrecReal b = PrecReal::from_rational(*inst.B, prec);
    return c * b.one_plus_log();
}

PrecReal weber_log_factor(const mpq_class& a, mpfr_prec_t prec) {
    if (a <= 0 || a >= 1) throw std::domain_error("weber_log_factor: a must be in (0,1)");
    PrecReal av = PrecReal::from_rational(a, prec);
    PrecReal one_minus = PrecReal::exact_long(1, prec) - av;
    return (-one_minus.log()) / av;
}

PrecReal weber_exp_factor(const mpq_class& a, mpfr_prec_t prec) {
    if (a <= 0 || a >= 1) throw std::domain_error("weber_exp_factor: a must be in (0,1)");
    PrecReal av = PrecReal::from_rational(a, prec);
    PrecReal denom = PrecReal::exact_long(1, prec) - (-av).exp();
    return av / denom;
}

}  // namespace repdiff
