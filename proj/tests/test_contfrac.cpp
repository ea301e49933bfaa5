#include <doctest.h>

#include <vector>

#include "repdiff/contfrac.hpp"

using namespace repdiff;

namespace {

// first 45 quotients of log(1+sqrt2)/log(10), certified by two independent
// arbitrary-precision evaluations (400 and 800 digits)
const std::vector<long> kGammaCf = {0, 2, 1, 1, 1, 1, 2, 1, 1, 1, 1,  39, 1, 5, 1,
                                    8, 1, 1, 7, 5, 1, 4, 1, 1, 52, 1,  4, 2, 2, 4,
                                    1, 28, 1, 1, 2, 1, 2, 1, 2, 2, 1,  2, 1, 21, 2};

}  // namespace

TEST_CASE("rational expansion terminates with exact convergents") {
    Quantity x = quantity_rational(mpq_class(5, 2), "2.5");
    ContinuedFraction cf = expand_cf(x, 10);
    CHECK(cf.terminated);
    REQUIRE(cf.size() == 2);
    CHECK(cf.quotients[0] == 2);
    CHECK(cf.quotients[1] == 2);
    CHECK(cf.p[0] == 2);
    CHECK(cf.q[0] == 1);
    CHECK(cf.p[1] == 5);
    CHECK(cf.q[1] == 2);
}

TEST_CASE("quotients of log(alpha)/log(10) match the independent evaluation") {
    Quantity g = named_quantity("pell-gamma");
    ContinuedFraction cf = expand_cf(g, kGammaCf.size());
    CHECK_FALSE(cf.terminated);
    REQUIRE(cf.size() == kGammaCf.size());
    for (std::size_t i = 0; i < kGammaCf.size(); ++i) CHECK(cf.quotients[i] == kGammaCf[i]);
}

TEST_CASE("the reciprocal constant is the shifted expansion") {
    Quantity gi = named_quantity("pell-gamma-inv");
    ContinuedFraction cf = expand_cf(gi, 20);
    CHECK(cf.quotients[0] == 2);
    for (std::size_t i = 0; i + 1 < 20; ++i) CHECK(cf.quotients[i] == kGammaCf[i + 1]);
}

TEST_CASE("determinant identity and approximation quality for both constants") {
    mpz_class target("10000000000000000000000000000000");  // 1e31
    for (const char* name : {"pell-gamma", "pell-gamma-inv"}) {
        Quantity x = named_quantity(name);
        ContinuedFraction cf = expand_until_q_exceeds(x, target, 2);
        REQUIRE(cf.size() >= 3);

        // p_i q_{i-1} - p_{i-1} q_i = (-1)^(i-1), exactly, for all computed i
        for (std::size_t i = 1; i < cf.size(); ++i) {
            mpz_class det = cf.p[i] * cf.q[i - 1] - cf.p[i - 1] * cf.q[i];
            CHECK(det == ((i - 1) % 2 == 0 ? 1 : -1));
        }

        // |x - p_i/q_i| < 1/(q_i q_{i+1}) < 1/q_i^2, certified at elevated
        // precision
        PrecReal xv = x.eval(2 * cf.prec_used + 64);
        for (std::size_t i = 0; i + 1 < cf.size(); ++i) {
            PrecReal diff = (xv - PrecReal::from_rational(mpq_class(cf.p[i], cf.q[i]), 512)).abs();
            mpq_class lim1(1, cf.q[i] * cf.q[i + 1]);
            mpq_class lim2(1, cf.q[i] * cf.q[i]);
            CHECK(mpfr_cmp_q(diff.upper(), lim1.get_mpq_t()) < 0);
            CHECK(mpfr_cmp_q(diff.upper(), lim2.get_mpq_t()) < 0);
        }

        // certified past the requested magnitude
        CHECK(cf.q[cf.first_q_above(target)] > target);
    }
}

TEST_CASE("expansion of an algebraic quantity certifies by agreement") {
    Quantity r2 = quantity_algebraic(QuadElement::root(2), "sqrt2");
    ContinuedFraction cf = expand_cf(r2, 30);
    CHECK(cf.quotients[0] == 1);
    for (std::size_t i = 1; i < cf.size(); ++i) CHECK(cf.quotients[i] == 2);
    CHECK(cf.prec_used >= 256);
}

TEST_CASE("a too-low precision cap is reported as exhaustion") {
    Quantity g = named_quantity("pell-gamma");
    PrecPolicy tiny{64, 64};
    CHECK_THROWS_AS(expand_cf(g, 40, tiny), precision_exhausted);
}

TEST_CASE("golden ratio expansion is all ones") {
    Quantity phi = quantity_algebraic(QuadElement(mpq_class(1, 2), mpq_class(1, 2), 5), "golden");
    ContinuedFraction cf = expand_cf(phi, 25);
    for (const auto& a : cf.quotients) CHECK(a == 1);
    // Fibonacci denominators
    CHECK(cf.q[10] == 89);
}
