#pragma once

// Repdigit construction/recognition and the exhaustive search for sequence
// terms expressible as a difference of two repdigits.
//
// The search kernel is data-parallel over the index k; an OpenMP variant and
// a serial reference are both kept, producing identical ordered results.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "repdiff/recurrence.hpp"

namespace repdiff {

enum class ExecPolicy { serial, openmp };

struct RepdigitRep {
    int digit;    // 1..9
    long length;  // >= 1
    bool operator==(const RepdigitRep&) const = default;
};

// a * (10^m - 1)/9
mpz_class repdigit_value(const RepdigitRep& rep);
mpz_class repunit(long m);

// the unique (digit, length) with that value, if N is a repdigit
std::optional<RepdigitRep> recognize_repdigit(const mpz_class& N);

struct SolutionRecord {
    long k;
    mpz_class value;  // = term(rec, k) = a1*repunit(n) - a2*repunit(m)
    int a1;
    long n;
    int a2;
    long m;
    bool operator==(const SolutionRecord&) const = default;
};

// All solutions of U_k = a1*(10^n-1)/9 - a2*(10^m-1)/9 with k_min <= k <=
// k_max, n >= 2, n >= m >= 1, digits 1..9.  Completeness: the difference is
// >= 10^(n-2) for n > m, and n = m forces a repdigit value, so n is bounded
// by digits(U_k) + 1.  Results ordered by (k, n, a1, m, a2).
std::vector<SolutionRecord> search_difference_solutions(const BinaryRecurrence& rec, long k_min,
                                                        long k_max,
                                                        ExecPolicy policy = ExecPolicy::openmp);

// terms of the sequence in 0..k_max that are themselves repdigits
std::vector<std::pair<long, mpz_class>> repdigit_members(const BinaryRecurrence& rec, long k_max);

// sanity scan (not part of any proof): solutions with n - m = 1 for
// k in [k_min, k_max]
std::vector<SolutionRecord> scan_adjacent_length_solutions(const BinaryRecurrence& rec, long k_min,
                                                           long k_max);

}  // namespace repdiff
