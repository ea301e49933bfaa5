#include "repdiff/reduction.hpp"

#include <omp.h>

#include <stdexcept>

namespace repdiff {

namespace {

// certified ||x * q|| as an enclosure, re-evaluating x until the enclosure
// of x*q is narrow enough to certify a distance
PrecReal norm_dist_of_multiple(const Quantity& x, const mpz_class& q, const PrecPolicy& policy,
                               mpfr_prec_t& used) {
    for (mpfr_prec_t prec = policy.floor; prec <= policy.cap; prec *= 2) {
        PrecReal prod = x.eval(prec).mul_int(q);
        mpfr_t w;
        mpfr_init2(w, 64);
        mpfr_sub(w, prod.upper(), prod.lower(), MPFR_RNDU);
        bool narrow = mpfr_cmp_d(w, 0.4) < 0;
        mpfr_clear(w);
        if (!narrow) continue;
        used = prec;
        return prod.nearest_int_distance();
    }
    throw precision_exhausted("reduction: ||" + x.name + " * q|| uncertifiable at precision cap");
}

}  // namespace

ReductionOutcome dujella_petho_reduce(const ReductionInstance& inst, const ContinuedFraction& cf,
                                      const PrecPolicy& policy) {
    if (inst.M < 1) throw std::invalid_argument("reduction: M must be >= 1");
    if (inst.A <= 0) throw std::invalid_argument("reduction: A must be > 0");
    if (inst.mu.exact && *inst.mu.exact == 0)
        throw std::domain_error("reduction: mu is identically 0 (homogeneous case)");

    const std::size_t start = cf.first_q_above(6 * inst.M);
    const int max_attempts = 10;

    ReductionOutcome out;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::size_t idx = start + attempt;
        if (idx >= cf.q.size())
            throw std::out_of_range("reduction: continued fraction too short for advancement");
        const mpz_class& q = cf.q[idx];

        mpfr_prec_t used_mu = 0, used_tau = 0;
        PrecReal dmu = norm_dist_of_multiple(inst.mu, q, policy, used_mu);
        PrecReal dtau = norm_dist_of_multiple(inst.tau, q, policy, used_tau);
        PrecReal eps = dmu - dtau.mul_int(inst.M);

        // sign must certify; widen precision if the enclosure straddles 0
        mpfr_prec_t prec = std::max(used_mu, used_tau);
        while (eps.contains_zero() && !eps.is_exact_zero() && prec < policy.cap) {
            prec *= 2;
            PrecReal dmu2 = inst.mu.eval(prec).mul_int(q).nearest_int_distance();
            PrecReal dtau2 = inst.tau.eval(prec).mul_int(q).nearest_int_distance();
            eps = dmu2 - dtau2.mul_int(inst.M);
        }
        if (eps.contains_zero())
            throw precision_exhausted("reduction: sign of eps uncertifiable at precision cap");

        if (eps.is_negative()) continue;  // advance to the next convergent

        // w_bound = floor(log(A q / eps_lower) / log(B)), rounded towards a
        // safe over-estimate (upper endpoint of the quotient)
        PrecReal aq = PrecReal::from_rational(inst.A, prec).mul_int(q);
        PrecReal eps_low = PrecReal::from_endpoints(eps.lower(), eps.lower(), prec);
        PrecReal logb = inst.B.eval(prec).log();
        if (!logb.is_positive()) throw std::invalid_argument("reduction: B must be > 1");
        PrecReal ratio = (aq / eps_low).log() / logb;
        mpfr_t f;
        mpfr_init2(f, prec);
        mpfr_set(f, ratio.upper(), MPFR_RNDU);
        mpfr_floor(f, f);
        mpz_class w;
        mpfr_get_z(w.get_mpz_t(), f, MPFR_RNDN);
        mpfr_clear(f);

        out.cf_index = idx;
        out.q_used = q;
        out.eps_lower = eps_low.lower_string(10);
        out.eps_lower_d = eps.value_d() - eps.err_d();
        out.w_bound = w;
        out.attempts = attempt + 1;
        out.precision = prec;
        return out;
    }
    throw std::runtime_error("reduction: eps <= 0 for all " + std::to_string(max_attempts) +
                             " attempted convergents");
}

ReductionOutcome dujella_petho_reduce(const ReductionInstance& inst, const PrecPolicy& policy) {
    ContinuedFraction cf = expand_until_q_exceeds(inst.tau, 6 * inst.M, 12, policy);
    return dujella_petho_reduce(inst, cf, policy);
}

ReductionTable reduce_case_table(const std::vector<ReductionInstance>& family,
                                 const ContinuedFraction& cf, const PrecPolicy& policy,
                                 ExecPolicy exec) {
    ReductionTable table;
    table.cases.resize(family.size());

    if (exec == ExecPolicy::openmp) {
        std::exception_ptr err;
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < static_cast<long>(family.size()); ++i) {
            try {
                table.cases[static_cast<std::size_t>(i)] =
                    dujella_petho_reduce(family[static_cast<std::size_t>(i)], cf, policy);
            } catch (...) {
#pragma omp critical
                if (!err) err = std::current_exception();
            }
        }
        if (err) std::rethrow_exception(err);
    } else {
        for (std::size_t i = 0; i < family.size(); ++i)
            table.cases[i] = dujella_petho_reduce(family[i], cf, policy);
    }

    table.min_eps_d = table.cases.front().eps_lower_d;
    table.min_eps = table.cases.front().eps_lower;
    table.max_w_bound = table.cases.front().w_bound;
    for (const auto& c : table.cases) {
        if (c.eps_lower_d < table.min_eps_d) {
            table.min_eps_d = c.eps_lower_d;
            table.min_eps = c.eps_lower;
        }
        if (c.w_bound > table.max_w_bound) table.max_w_bound = c.w_bound;
    }
    return table;
}

LegendreBound legendre_lower_bound(const ContinuedFraction& cf, const mpz_class& k_max) {
    if (k_max < 1) throw std::invalid_argument("legendre_lower_bound: k_max must be >= 1");
    std::size_t N = cf.first_q_above(k_max);
    return LegendreBound{cf.max_quotient_upto(N), N};
}

LegendreBound legendre_lower_bound(const Quantity& tau, const mpz_class& k_max,
                                   const PrecPolicy& policy) {
    ContinuedFraction cf = expand_until_q_exceeds(tau, k_max, 4, policy);
    return legendre_lower_bound(cf, k_max);
}

}  // namespace repdiff
