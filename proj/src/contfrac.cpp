#include "repdiff/contfrac.hpp"

#include <stdexcept>

namespace repdiff {

std::size_t ContinuedFraction::first_q_above(const mpz_class& bound) const {
    for (std::size_t i = 0; i < q.size(); ++i)
        if (q[i] > bound) return i;
    throw std::out_of_range("ContinuedFraction: no convergent denominator above bound");
}

mpz_class ContinuedFraction::max_quotient_upto(std::size_t n) const {
    if (n >= quotients.size()) throw std::out_of_range("ContinuedFraction: index out of range");
    mpz_class m = quotients[0];
    for (std::size_t i = 1; i <= n; ++i)
        if (quotients[i] > m) m = quotients[i];
    return m;
}

static void attach_convergents(ContinuedFraction& cf) {
    mpz_class pm1 = 1, pm2 = 0, qm1 = 0, qm2 = 1;
    cf.p.clear();
    cf.q.clear();
    cf.p.reserve(cf.quotients.size());
    cf.q.reserve(cf.quotients.size());
    for (const mpz_class& a : cf.quotients) {
        mpz_class pi = a * pm1 + pm2;
        mpz_class qi = a * qm1 + qm2;
        cf.p.push_back(pi);
        cf.q.push_back(qi);
        pm2 = pm1;
        pm1 = pi;
        qm2 = qm1;
        qm1 = qi;
    }
}

static std::vector<mpz_class> euclid_expand(const mpq_class& x, std::size_t count) {
    std::vector<mpz_class> qs;
    mpz_class num = x.get_num(), den = x.get_den();
    while (den != 0 && qs.size() < count) {
        mpz_class a, r;
        mpz_fdiv_qr(a.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        qs.push_back(a);
        num = den;
        den = r;
    }
    return qs;
}

// one pass at fixed precision; returns as many certified quotients as the
// enclosure supports (possibly fewer than requested)
static std::vector<mpz_class> interval_expand(const Quantity& x, std::size_t count,
                                              mpfr_prec_t prec) {
    std::vector<mpz_class> qs;
    PrecReal cur = x.eval(prec);
    while (qs.size() < count) {
        bool ok = false;
        mpz_class a = cur.floor_certified(ok);
        if (!ok) break;
        qs.push_back(a);
        PrecReal rem = cur - PrecReal::exact_int(a, prec);
        if (rem.contains_zero()) break;  // cannot certify the next step
        cur = rem.recip();
    }
    return qs;
}

ContinuedFraction expand_cf(const Quantity& x, std::size_t count, const PrecPolicy& policy) {
    if (count == 0) throw std::invalid_argument("expand_cf: count must be positive");
    ContinuedFraction cf;
    cf.x = x;

    if (x.exact) {
        cf.quotients = euclid_expand(*x.exact, count);
        cf.terminated = cf.quotients.size() < count ||
                        euclid_expand(*x.exact, count + 1).size() == cf.quotients.size();
        cf.prec_used = 0;
        attach_convergents(cf);
        return cf;
    }

    std::vector<mpz_class> prev;
    for (mpfr_prec_t prec = policy.floor; prec <= policy.cap; prec *= 2) {
        std::vector<mpz_class> cur = interval_expand(x, count, prec);
        if (cur.size() >= count && prev.size() >= count &&
            std::equal(cur.begin(), cur.begin() + count, prev.begin())) {
            cf.quotients.assign(cur.begin(), cur.begin() + count);
            cf.prec_used = prec;
            attach_convergents(cf);
            return cf;
        }
        prev = std::move(cur);
    }
    throw precision_exhausted("expand_cf: quotients of " + x.name + " unstable at precision cap (" +
                              std::to_string(policy.cap) + " bits); rational input?");
}

ContinuedFraction expand_until_q_exceeds(const Quantity& x, const mpz_class& bound,
                                         std::size_t extra, const PrecPolicy& policy) {
    std::size_t count = 24;
    for (;;) {
        ContinuedFraction cf = expand_cf(x, count, policy);
        for (const mpz_class& q : cf.q)
            if (q > bound) {
                // grow until the requested margin beyond the bound exists too
                if (cf.size() >= cf.first_q_above(bound) + extra + 1) return cf;
                break;
            }
        if (cf.terminated)
            throw std::domain_error("expand_until_q_exceeds: rational input " + x.name);
        count += count / 2 + 8;
        if (count > 100000) throw precision_exhausted("expand_until_q_exceeds: runaway expansion");
    }
}

}  // namespace repdiff
