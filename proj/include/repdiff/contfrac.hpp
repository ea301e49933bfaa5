#pragma once

// Continued-fraction expansion with exact convergents.
//
// Quotients of irrational quantities are produced from certified enclosures
// (a quotient is only emitted when both interval endpoints share a floor) and
// then re-derived at doubled precision until two consecutive runs agree on
// every quotient.  Rational inputs expand exactly by Euclid and terminate.

#include <gmpxx.h>

#include <vector>

#include "repdiff/quantity.hpp"

namespace repdiff {

struct ContinuedFraction {
    Quantity x;
    std::vector<mpz_class> quotients;     // a_0, a_1, ...
    std::vector<mpz_class> p;             // convergent numerators
    std::vector<mpz_class> q;             // convergent denominators
    bool terminated = false;              // rational input: expansion is complete
    mpfr_prec_t prec_used = 0;

    std::size_t size() const { return quotients.size(); }

    // index of the first convergent with q > bound
    std::size_t first_q_above(const mpz_class& bound) const;
    mpz_class max_quotient_upto(std::size_t n) const;
};

ContinuedFraction expand_cf(const Quantity& x, std::size_t count, const PrecPolicy& policy = {});

// expand until some convergent denominator exceeds `bound` (plus `extra`
// further terms so neighbouring convergents are available)
ContinuedFraction expand_until_q_exceeds(const Quantity& x, const mpz_class& bound,
                                         std::size_t extra = 12, const PrecPolicy& policy = {});

}  // namespace repdiff
