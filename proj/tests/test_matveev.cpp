#include <doctest.h>

#include <random>

#include "repdiff/kceiling.hpp"
#include "repdiff/matveev.hpp"

using namespace repdiff;

namespace {

PrecReal rat(const char* s, mpfr_prec_t prec = 192) {
    mpq_class q(s);
    return PrecReal::from_rational(q, prec);
}

}  // namespace

TEST_CASE("three-log degree-2 coefficient matches the published 4.29e13") {
    MatveevInstance inst{3, 2, std::nullopt, {rat("882/1000"), rat("46/10"), rat("109/10")}};
    PrecReal c = matveev_coefficient(inst, 192);
    CHECK(c.value_d() == doctest::Approx(4.29e13).epsilon(0.03));
    // independently evaluated: 4.288533709e13
    CHECK(c.value_d() == doctest::Approx(4.288533709e13).epsilon(1e-8));
}

TEST_CASE("second-form coefficient per unit A3 is near the published 4.1e12") {
    MatveevInstance inst{3, 2, std::nullopt, {rat("9/10"), rat("46/10"), rat("1")}};
    PrecReal c = matveev_coefficient(inst, 192);
    CHECK(c.value_d() == doctest::Approx(4.014729179e12).epsilon(1e-8));
}

TEST_CASE("single-log exponent by direct substitution") {
    // 1.4 * 30^4 * (1+log 3) * 0.16 = 380772.2136..., rounded up
    MatveevInstance inst{1, 1, mpq_class(3), {rat("16/100")}};
    PrecReal c = matveev_exponent(inst, 192);
    CHECK(c.value_d() == doctest::Approx(380772.21365594).epsilon(1e-10));
    CHECK(c.ceil_upper() == 380773);
}

TEST_CASE("exponent is monotone in every parameter") {
    std::mt19937_64 rng(7u);
    std::uniform_int_distribution<int> dt(1, 4), dD(1, 3);
    std::uniform_int_distribution<long> da(16, 4000);  // hundredths
    for (int i = 0; i < 50; ++i) {
        int t = dt(rng), D = dD(rng);
        std::vector<PrecReal> A;
        std::vector<long> araw;
        for (int j = 0; j < t; ++j) {
            araw.push_back(da(rng));
            A.push_back(PrecReal::from_rational(mpq_class(araw.back(), 100), 128));
        }
        mpq_class B(da(rng), 10);
        if (B < 3) B = 3;
        MatveevInstance base{t, D, B, A};
        double c0 = matveev_exponent(base, 128).value_d();

        MatveevInstance bigger_t{t + 1, D, B, A};
        bigger_t.A.push_back(rat("16/100", 128));
        CHECK(matveev_exponent(bigger_t, 128).value_d() >= c0);

        MatveevInstance bigger_D{t, D + 1, B, A};
        CHECK(matveev_exponent(bigger_D, 128).value_d() >= c0);

        MatveevInstance bigger_B{t, D, B + 1, A};
        CHECK(matveev_exponent(bigger_B, 128).value_d() >= c0);

        MatveevInstance bigger_A = base;
        bigger_A.A[0] = PrecReal::from_rational(mpq_class(araw[0] + 7, 100), 128);
        CHECK(matveev_exponent(bigger_A, 128).value_d() >= c0);
    }
}

TEST_CASE("invalid instances are rejected") {
    CHECK_THROWS_AS(matveev_coefficient({0, 1, std::nullopt, {}}, 64), std::invalid_argument);
    CHECK_THROWS_AS(matveev_coefficient({1, 1, std::nullopt, {rat("1/10")}}, 64),
                    std::invalid_argument);
    CHECK_THROWS_AS(matveev_exponent({1, 1, std::nullopt, {rat("1")}}, 64), std::invalid_argument);
}

TEST_CASE("log and exp comparison factors") {
    mpfr_prec_t prec = 128;
    PrecReal fl = weber_log_factor(mpq_class(1, 10), prec);
    CHECK(fl.value_d() == doctest::Approx(1.05360515657826).epsilon(1e-12));
    PrecReal fe = weber_exp_factor(mpq_class(1, 10), prec);
    CHECK(fe.value_d() == doctest::Approx(1.0508331944775050).epsilon(1e-12));
    CHECK_THROWS_AS(weber_log_factor(mpq_class(2), prec), std::domain_error);
    CHECK_THROWS_AS(weber_exp_factor(mpq_class(0), prec), std::domain_error);
}

TEST_CASE("comparison factors bound 10^4 random samples") {
    mpfr_prec_t prec = 128;
    std::mt19937_64 rng(99u);
    for (mpq_class a : {mpq_class(1, 10), mpq_class(21, 100), mpq_class(982, 1000)}) {
        PrecReal fl = weber_log_factor(a, prec);
        PrecReal fe = weber_exp_factor(a, prec);
        std::uniform_int_distribution<long> d(-999999, 999999);
        int checked = 0;
        while (checked < 3400) {
            mpq_class x(d(rng), 1000000);
            x.canonicalize();
            if (x == 0 || abs(x) >= a) continue;
            ++checked;
            PrecReal xv = PrecReal::from_rational(x, prec);
            PrecReal ax = xv.abs();
            // |log(1+x)| <= fl * |x|
            PrecReal lhs = (PrecReal::exact_long(1, prec) + xv).log().abs();
            PrecReal rhs = fl * ax;
            CHECK_FALSE(rhs.certainly_less(lhs));
            // |x| <= fe * |e^x - 1|
            PrecReal ex = (xv.exp() - PrecReal::exact_long(1, prec)).abs();
            PrecReal rhs2 = fe * ex;
            CHECK_FALSE(rhs2.certainly_less(ax));
        }
    }
}

TEST_CASE("constant-shape ceiling") {
    ConstShape c{PrecReal::exact_long(10, 64)};
    auto res = solve_k_ceiling(c, 64);
    CHECK(res.K == 10);
}

TEST_CASE("power-log shape reproduces the published 9e30 ceiling") {
    // k < 1.7e27 * (1 + log(k+2))^2
    mpq_class c17("1700000000000000000000000000");
    PowerLogShape s{PrecReal::from_rational(c17, 192), 2, 2, PrecReal::exact_long(0, 192)};
    auto res = solve_k_ceiling(s, 192);
    mpz_class nine_e30("9000000000000000000000000000000");
    CHECK(res.K <= nine_e30);
    // independently: fixed point is about 8.877e30
    mpz_class lo("8800000000000000000000000000000");
    CHECK(res.K > lo);
}

TEST_CASE("combined shape solves the published-style system") {
    mpfr_prec_t prec = 256;
    PrecReal lnalpha = (PrecReal::exact_long(1, prec) + PrecReal::sqrt_ui(2, prec)).log();
    PrecReal ln10 = PrecReal::exact_long(10, prec).log();
    CombinedShape shape{
        lnalpha,
        PrecReal::exact_long(4, prec).log(),
        rat("4100000000000", prec),   // 4.1e12
        rat("1666/100", prec),
        ln10.mul_long(2),
        rat("42900000000000", prec),  // 4.29e13
        PrecReal::from_rational(mpq_class(981, 100), prec).log(),
    };
    auto res = solve_k_ceiling(shape, prec);
    // independently evaluated fixed point: about 1.9555e30 (the published
    // 1.25e29 is not derivable from this system)
    mpz_class lo("1900000000000000000000000000000"), hi("2000000000000000000000000000000");
    CHECK(res.K > lo);
    CHECK(res.K < hi);
}
