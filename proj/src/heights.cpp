#include "repdiff/heights.hpp"

#include <stdexcept>

namespace repdiff {

PrecReal log_height(const mpq_class& x, mpfr_prec_t prec) {
    if (x == 0) throw std::domain_error("log_height: zero argument");
    mpq_class c = x;
    c.canonicalize();
    mpz_class p = abs(mpz_class(c.get_num()));
    mpz_class q = c.get_den();
    mpz_class m = p > q ? p : q;
    if (m == 1) return PrecReal::exact_long(0, prec);
    return PrecReal::exact_int(m, prec).log();
}

PrecReal log_height(const QuadElement& x, mpfr_prec_t prec) {
    if (x.is_zero()) throw std::domain_error("log_height: zero argument");
    if (x.is_rational()) return log_height(x.rational_part(), prec);

    auto mp = x.min_poly();
    const mpz_class& a0 = mp[0];
    PrecReal acc = PrecReal::exact_int(a0, prec).log();
    for (const QuadElement& c : {x, x.conj()}) {
        PrecReal av = c.to_precreal(prec).abs();
        // log max(|c|, 1): 0 when |c| <= 1 certainly; enclosure straddling 1
        // is widened to [0, log hi]
        if (av.certainly_le(1)) continue;
        if (av.certainly_ge(1)) {
            acc = acc + av.log();
        } else {
            PrecReal one = PrecReal::exact_long(1, prec);
            PrecReal widened = PrecReal::from_endpoints(one.lower(), av.upper(), prec);
            acc = acc + widened.log();
        }
    }
    PrecReal half = PrecReal::from_rational(mpq_class(1, 2), prec);
    return acc * half;
}

PrecReal height_bound_combination(const std::vector<std::pair<PrecReal, long>>& parts) {
    PrecReal total = PrecReal::exact_long(0);
    for (const auto& [h, mult] : parts) {
        if (h.is_negative()) throw std::invalid_argument("height_bound_combination: negative height");
        long m = mult < 0 ? -mult : mult;
        total = total + h.mul_long(m);
    }
    return total;
}

}  // namespace repdiff
