#include "repdiff/repdigit.hpp"

#include <omp.h>

#include <stdexcept>
#include <string>

namespace repdiff {

mpz_class repunit(long m) {
    if (m < 1) throw std::invalid_argument("repunit: length must be >= 1");
    mpz_class t;
    mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(m));
    return (t - 1) / 9;
}

mpz_class repdigit_value(const RepdigitRep& rep) {
    if (rep.digit < 1 || rep.digit > 9) throw std::invalid_argument("repdigit_value: digit out of range");
    return rep.digit * repunit(rep.length);
}

std::optional<RepdigitRep> recognize_repdigit(const mpz_class& N) {
    if (N < 1) throw std::invalid_argument("recognize_repdigit: argument must be >= 1");
    std::string s = N.get_str();
    char c = s[0];
    for (char d : s)
        if (d != c) return std::nullopt;
    return RepdigitRep{c - '0', static_cast<long>(s.size())};
}

// all representations of one term; ordered by (n, a1, m, a2)
static void search_one_term(long k, const mpz_class& T, std::vector<SolutionRecord>& out) {
    if (T < 1) return;
    long digits = static_cast<long>(T.get_str().size());
    for (long n = 2; n <= digits + 1; ++n) {
        mpz_class rn = repunit(n);
        for (int a1 = 1; a1 <= 9; ++a1) {
            mpz_class rest = a1 * rn - T;
            if (rest < 1) continue;
            auto rep = recognize_repdigit(rest);
            if (!rep) continue;
            if (rep->length > n) continue;  // rest < a1*repunit(n) < 10^n forces m <= n
            out.push_back(SolutionRecord{k, T, a1, n, rep->digit, rep->length});
        }
    }
}

std::vector<SolutionRecord> search_difference_solutions(const BinaryRecurrence& rec, long k_min,
                                                        long k_max, ExecPolicy policy) {
    if (k_min > k_max) throw std::invalid_argument("search: k_min > k_max");
    if (k_min < 0) throw std::invalid_argument("search: negative k_min");
    if (k_max > 200) throw std::invalid_argument("search: k_max above the 200 runtime guard");

    long count = k_max - k_min + 1;
    std::vector<std::vector<SolutionRecord>> per_k(static_cast<std::size_t>(count));

    if (policy == ExecPolicy::openmp) {
        // terms come from one cheap serial pass; the per-k searches are
        // independent and carry the actual work
        std::vector<mpz_class> terms(static_cast<std::size_t>(count));
        mpz_class a = term(rec, k_min);
        mpz_class b = term(rec, k_min + 1);
        for (long i = 0; i < count; ++i) {
            terms[static_cast<std::size_t>(i)] = a;
            mpz_class next = rec.c1 * b + rec.c0 * a;
            a = b;
            b = next;
        }
#pragma omp parallel for schedule(dynamic, 4)
        for (long i = 0; i < count; ++i) {
            long k = k_min + i;
            search_one_term(k, terms[static_cast<std::size_t>(i)], per_k[static_cast<std::size_t>(i)]);
        }
    } else {
        // serial reference: single pass holding (U_k, U_{k+1})
        mpz_class a = term(rec, k_min);
        mpz_class b = term(rec, k_min + 1);
        for (long i = 0; i < count; ++i) {
            search_one_term(k_min + i, a, per_k[static_cast<std::size_t>(i)]);
            mpz_class next = rec.c1 * b + rec.c0 * a;
            a = b;
            b = next;
        }
    }

    std::vector<SolutionRecord> merged;
    for (auto& v : per_k)
        for (auto& s : v) merged.push_back(std::move(s));
    return merged;
}

std::vector<std::pair<long, mpz_class>> repdigit_members(const BinaryRecurrence& rec, long k_max) {
    std::vector<std::pair<long, mpz_class>> out;
    for (long k = 0; k <= k_max; ++k) {
        mpz_class v = term(rec, k);
        if (v >= 1 && recognize_repdigit(v)) out.emplace_back(k, v);
    }
    return out;
}

std::vector<SolutionRecord> scan_adjacent_length_solutions(const BinaryRecurrence& rec, long k_min,
                                                           long k_max) {
    std::vector<SolutionRecord> out;
    for (long k = k_min; k <= k_max; ++k) {
        mpz_class T = term(rec, k);
        if (T < 1) continue;
        long digits = static_cast<long>(T.get_str().size());
        for (long n = 2; n <= digits + 1; ++n) {
            mpz_class rn = repunit(n);
            for (int a1 = 1; a1 <= 9; ++a1) {
                mpz_class rest = a1 * rn - T;
                if (rest < 1) continue;
                auto rep = recognize_repdigit(rest);
                if (rep && rep->length == n - 1)
                    out.push_back(SolutionRecord{k, T, a1, n, rep->digit, rep->length});
            }
        }
    }
    return out;
}

}  // namespace repdiff
