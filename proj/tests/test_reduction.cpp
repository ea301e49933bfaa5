#include <doctest.h>

#include <random>

#include "repdiff/reduction.hpp"

using namespace repdiff;

namespace {

Quantity quad(const QuadElement& e, const char* name) { return quantity_algebraic(e, name); }

// exhaustive soundness oracle: the largest integer w admitting a solution
// 0 < |u tau - v + mu| < A B^(-w) with 1 <= u <= M (v the nearest integer)
long brute_force_max_w(const Quantity& tau, const Quantity& mu, long M, const mpq_class& A,
                       const mpq_class& B) {
    mpfr_prec_t prec = 320;
    PrecReal tv = tau.eval(prec), mv = mu.eval(prec);
    PrecReal logB = PrecReal::from_rational(B, prec).log();
    long best = -1;
    for (long u = 1; u <= M; ++u) {
        PrecReal r = (tv.mul_long(u) + mv).nearest_int_distance();
        if (r.contains_zero()) continue;
        // a solution at w needs w < log(A/r)/log B; floor of the upper
        // endpoint over-estimates the largest admissible w
        PrecReal w = (PrecReal::from_rational(A, prec) / r).log() / logB;
        long cand = mpfr_get_si(w.upper(), MPFR_RNDD);
        if (cand > best) best = cand;
    }
    return best;
}

struct Synthetic {
    const char* label;
    Quantity tau;
    Quantity mu;
    long M;
    mpq_class A;
    mpq_class B;
};

std::vector<Synthetic> synthetic_instances() {
    return {
        {"sqrt2/sqrt3-1/M=1000", quad(QuadElement::root(2), "sqrt2"),
         quad(QuadElement(-1, 1, 3), "sqrt3-1"), 1000, mpq_class(1), mpq_class(2)},
        {"sqrt3/sqrt2-1/M=600", quad(QuadElement::root(3), "sqrt3"),
         quad(QuadElement(-1, 1, 2), "sqrt2-1"), 600, mpq_class(2), mpq_class(3)},
        // note: the shift must not lie in Z*tau + Z, or eps <= 0 for every
        // convergent (e.g. sqrt5 - 2 = 2*golden - 3 degenerates)
        {"golden/sqrt3-1/M=2000", quad(QuadElement(mpq_class(1, 2), mpq_class(1, 2), 5), "golden"),
         quad(QuadElement(-1, 1, 3), "sqrt3-1"), 2000, mpq_class(3, 2), mpq_class(2)},
    };
}

}  // namespace

TEST_CASE("reduction bound dominates exhaustive search on synthetic instances") {
    for (const auto& inst : synthetic_instances()) {
        CAPTURE(inst.label);
        ReductionInstance ri{inst.tau, inst.mu, inst.M, inst.A,
                             quantity_rational(inst.B, "B")};
        auto out = dujella_petho_reduce(ri);
        CHECK(out.q_used > 6 * inst.M);
        CHECK(out.eps_lower_d > 0);
        long brute = brute_force_max_w(inst.tau, inst.mu, inst.M, inst.A, inst.B);
        // no violating (u, v, w) with w >= w_bound + 1 may exist
        CHECK(mpz_class(brute) <= out.w_bound);
    }
}

TEST_CASE("first synthetic instance reproduces the independently computed outcome") {
    auto insts = synthetic_instances();
    ReductionInstance ri{insts[0].tau, insts[0].mu, insts[0].M, insts[0].A,
                         quantity_rational(insts[0].B, "B")};
    auto out = dujella_petho_reduce(ri);
    // q = 13860 is the first sqrt(2) convergent denominator above 6000
    CHECK(out.q_used == 13860);
    CHECK(out.eps_lower_d == doctest::Approx(0.198684).epsilon(1e-4));
    CHECK(out.w_bound == 16);
}

TEST_CASE("eps lower bound is stable under precision doubling") {
    auto insts = synthetic_instances();
    for (const auto& inst : insts) {
        ReductionInstance ri{inst.tau, inst.mu, inst.M, inst.A, quantity_rational(inst.B, "B")};
        PrecPolicy lo{256, 8192}, hi{512, 8192};
        auto a = dujella_petho_reduce(ri, lo);
        auto b = dujella_petho_reduce(ri, hi);
        CHECK(b.eps_lower_d > 0);
        // tighter precision can only raise a certified lower bound
        CHECK(b.eps_lower_d >= a.eps_lower_d - 1e-15);
        CHECK(b.w_bound <= a.w_bound);
    }
}

TEST_CASE("w_bound grows with A and shrinks with eps") {
    auto insts = synthetic_instances();
    ReductionInstance ri{insts[0].tau, insts[0].mu, insts[0].M, insts[0].A,
                         quantity_rational(insts[0].B, "B")};
    auto base = dujella_petho_reduce(ri);
    ReductionInstance bigger = ri;
    bigger.A = ri.A * 64;
    auto out = dujella_petho_reduce(bigger);
    CHECK(out.w_bound >= base.w_bound);
}

TEST_CASE("homogeneous shift is rejected") {
    ReductionInstance ri{quad(QuadElement::root(2), "sqrt2"), quantity_rational(mpq_class(0), "0"),
                         100, mpq_class(1), quantity_rational(mpq_class(10), "10")};
    CHECK_THROWS_AS(dujella_petho_reduce(ri), std::domain_error);
}

TEST_CASE("case table matches individual reductions and both exec policies agree") {
    Quantity tau = named_quantity("pell-gamma");
    mpz_class M("125000000000000000000000000000");  // 1.25e29
    ContinuedFraction cf = expand_until_q_exceeds(tau, 6 * M, 14);
    std::vector<ReductionInstance> family;
    for (int a1 = 1; a1 <= 9; ++a1)
        family.push_back(ReductionInstance{tau, named_quantity("pell-mu-a1-" + std::to_string(a1)),
                                           M, mpq_class(47, 10),
                                           quantity_rational(mpq_class(10), "10")});
    auto par = reduce_case_table(family, cf, {}, ExecPolicy::openmp);
    auto ser = reduce_case_table(family, cf, {}, ExecPolicy::serial);
    REQUIRE(par.cases.size() == ser.cases.size());
    for (std::size_t i = 0; i < par.cases.size(); ++i) {
        CHECK(par.cases[i].q_used == ser.cases[i].q_used);
        CHECK(par.cases[i].eps_lower == ser.cases[i].eps_lower);
        CHECK(par.cases[i].w_bound == ser.cases[i].w_bound);
    }
    CHECK(par.min_eps == ser.min_eps);
    CHECK(par.max_w_bound == ser.max_w_bound);

    // the published instance: all nine digit cases certify with
    // eps >= 0.05 and bound n-m <= 32
    CHECK(par.min_eps_d >= 0.05);
    CHECK(par.max_w_bound == 32);
}

TEST_CASE("legendre bound: golden ratio") {
    Quantity phi = quad(QuadElement(mpq_class(1, 2), mpq_class(1, 2), 5), "golden");
    auto lb = legendre_lower_bound(phi, 100);
    CHECK(lb.a_max == 1);
    // Fibonacci denominators: first above 100 is 144 at index 11
    CHECK(lb.N_used == 11);
}

TEST_CASE("legendre bound holds for random k up to 1e5") {
    mpfr_prec_t prec = 256;
    std::mt19937_64 rng(5u);
    std::uniform_int_distribution<long> dk(1, 100000);
    for (const char* name : {"pell-gamma", "golden"}) {
        Quantity tau = name == std::string("golden")
                           ? quad(QuadElement(mpq_class(1, 2), mpq_class(1, 2), 5), "golden")
                           : named_quantity(name);
        auto lb = legendre_lower_bound(tau, 100000);
        PrecReal tv = tau.eval(prec);
        mpz_class amax2 = lb.a_max + 2;
        for (int i = 0; i < 400; ++i) {
            long k = dk(rng);
            PrecReal dist = tv.mul_long(k).nearest_int_distance();
            PrecReal limit = PrecReal::exact_int(amax2 * k, prec).recip();
            // dist > 1/((a_max+2) k), certified
            CHECK(limit.certainly_less(dist));
        }
    }
}
