#include "repdiff/quantity.hpp"

#include <cctype>
#include <stdexcept>

namespace repdiff {

Quantity quantity_rational(const mpq_class& v, std::string name) {
    mpq_class c = v;
    c.canonicalize();
    return Quantity{
        std::move(name),
        [c](mpfr_prec_t prec) { return PrecReal::from_rational(c, prec); },
        c,
    };
}

Quantity quantity_algebraic(const QuadElement& v, std::string name) {
    std::optional<mpq_class> exact;
    if (v.is_rational()) exact = v.rational_part();
    return Quantity{
        std::move(name),
        [v](mpfr_prec_t prec) { return v.to_precreal(prec); },
        exact,
    };
}

Quantity quantity_log_ratio(const QuadElement& num, const QuadElement& base, std::string name) {
    if (num.sign() <= 0 || base.sign() <= 0)
        throw std::domain_error("quantity_log_ratio: arguments must be positive");
    return Quantity{
        std::move(name),
        [num, base](mpfr_prec_t prec) {
            return num.to_precreal(prec).log() / base.to_precreal(prec).log();
        },
        std::nullopt,
    };
}

mpq_class parse_decimal(const std::string& text) {
    std::string s = text;
    bool neg = false;
    if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string digits = s;
    long frac_len = 0;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        frac_len = static_cast<long>(s.size() - dot - 1);
    }
    if (digits.empty()) throw std::invalid_argument("parse_decimal: empty number: " + text);
    for (char c : digits)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument("parse_decimal: malformed number: " + text);
    mpz_class num(digits, 10);
    mpz_class den = 1;
    for (long i = 0; i < frac_len; ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    return neg ? mpq_class(-q) : q;
}

Quantity named_quantity(const std::string& spec) {
    const QuadElement alpha = QuadElement::alpha();
    const QuadElement ten = QuadElement::rational(10);
    if (spec == "pell-gamma") return quantity_log_ratio(alpha, ten, "pell-gamma");
    if (spec == "pell-gamma-inv") return quantity_log_ratio(ten, alpha, "pell-gamma-inv");
    if (spec == "alpha") return quantity_algebraic(alpha, "alpha");

    auto digit_suffix = [&](const std::string& prefix) -> int {
        if (spec.rfind(prefix, 0) != 0) return 0;
        std::string rest = spec.substr(prefix.size());
        if (rest.size() == 1 && rest[0] >= '1' && rest[0] <= '9') return rest[0] - '0';
        throw std::invalid_argument("named_quantity: digit out of range in " + spec);
    };
    // mu of the first Pell reduction round: log(9/(a1*2*sqrt(2))) / log 10
    if (int a1 = digit_suffix("pell-mu-a1-"); a1 != 0) {
        QuadElement arg = QuadElement::rational(9) / (QuadElement::root(2) * QuadElement::rational(2 * a1));
        return quantity_log_ratio(arg, ten, spec);
    }
    // mu of the companion-sequence round: log(9/a1) / log 10
    if (int a1 = digit_suffix("pl-mu-a1-"); a1 != 0) {
        QuadElement arg = QuadElement::rational(mpq_class(9, a1));
        if (arg.compare(1) == 0)
            throw std::domain_error("named_quantity: " + spec + " is 0 (homogeneous case)");
        return quantity_log_ratio(arg, ten, spec);
    }

    // otherwise a decimal literal
    return quantity_rational(parse_decimal(spec), spec);
}

}  // namespace repdiff
