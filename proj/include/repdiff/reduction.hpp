#pragma once

// One-dimensional reduction of tiny inhomogeneous linear forms.
//
// dujella_petho_reduce: given irrational tau, shift mu, bound M on u and
// constants A > 0, B > 1, pick the first convergent denominator q of tau
// with q > 6M, certify eps = ||mu q|| - M ||tau q|| > 0 (advancing through
// up to 10 convergents when eps <= 0), and conclude that
// 0 < |u tau - v + mu| < A B^(-w) has no solution with u <= M and
// w > w_bound = floor(log(A q / eps) / log B).
//
// legendre_lower_bound: for the homogeneous case, |k tau - n| >
// 1/((a_max + 2) k) for all 1 <= k <= k_max, with a_max the largest partial
// quotient up to the first convergent denominator beyond k_max.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "repdiff/contfrac.hpp"
#include "repdiff/repdigit.hpp"

namespace repdiff {

struct ReductionInstance {
    Quantity tau;
    Quantity mu;
    mpz_class M;
    mpq_class A;  // > 0
    Quantity B;   // > 1
};

struct ReductionOutcome {
    std::size_t cf_index = 0;  // index of the convergent actually used
    mpz_class q_used;
    std::string eps_lower;     // certified lower bound on eps, decimal
    double eps_lower_d = 0.0;
    mpz_class w_bound;
    int attempts = 0;          // convergents tried (>= 1)
    mpfr_prec_t precision = 0;
};

// cf must be an expansion of inst.tau reaching beyond 6M with some margin
ReductionOutcome dujella_petho_reduce(const ReductionInstance& inst, const ContinuedFraction& cf,
                                      const PrecPolicy& policy = {});

// convenience overload that expands tau itself
ReductionOutcome dujella_petho_reduce(const ReductionInstance& inst, const PrecPolicy& policy = {});

// a family of mu's sharing tau/M/A/B, reduced independently (OpenMP kernel
// with a serial reference); results are case-ordered and deterministic
struct ReductionTable {
    std::vector<ReductionOutcome> cases;
    std::string min_eps;    // smallest certified lower bound across cases
    double min_eps_d = 0.0;
    mpz_class max_w_bound;
};

ReductionTable reduce_case_table(const std::vector<ReductionInstance>& family,
                                 const ContinuedFraction& cf, const PrecPolicy& policy = {},
                                 ExecPolicy exec = ExecPolicy::openmp);

struct LegendreBound {
    mpz_class a_max;
    std::size_t N_used;
};

LegendreBound legendre_lower_bound(const Quantity& tau, const mpz_class& k_max,
                                   const PrecPolicy& policy = {});
LegendreBound legendre_lower_bound(const ContinuedFraction& cf, const mpz_class& k_max);

}  // namespace repdiff
