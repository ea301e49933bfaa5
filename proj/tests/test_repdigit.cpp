#include <doctest.h>

#include <set>

#include "repdiff/repdigit.hpp"

using namespace repdiff;

namespace {

std::set<mpz_class> value_set(const std::vector<SolutionRecord>& sols) {
    std::set<mpz_class> vs;
    for (const auto& s : sols) vs.insert(s.value);
    return vs;
}

// independent completeness oracle: enumerate every repdigit pair with the
// wider bound n <= digits + 2 and compare
std::vector<SolutionRecord> oracle_search(const BinaryRecurrence& rec, long kmin, long kmax) {
    std::vector<SolutionRecord> out;
    for (long k = kmin; k <= kmax; ++k) {
        mpz_class T = term(rec, k);
        if (T < 1) continue;
        long digits = static_cast<long>(T.get_str().size());
        for (long n = 2; n <= digits + 2; ++n)
            for (int a1 = 1; a1 <= 9; ++a1)
                for (long m = 1; m <= n; ++m)
                    for (int a2 = 1; a2 <= 9; ++a2)
                        if (a1 * repunit(n) - a2 * repunit(m) == T)
                            out.push_back({k, T, a1, n, a2, m});
    }
    return out;
}

}  // namespace

TEST_CASE("repdigit construction") {
    CHECK(repdigit_value({7, 2}) == 77);
    CHECK(repdigit_value({1, 1}) == 1);
    CHECK(repdigit_value({5, 3}) == 555);
    CHECK_THROWS_AS(repdigit_value({0, 1}), std::invalid_argument);
}

TEST_CASE("repdigit recognition") {
    auto r = recognize_repdigit(99);
    REQUIRE(r.has_value());
    CHECK(r->digit == 9);
    CHECK(r->length == 2);
    CHECK_FALSE(recognize_repdigit(478).has_value());
    auto s = recognize_repdigit(5);
    REQUIRE(s.has_value());
    CHECK(*s == RepdigitRep{5, 1});
    CHECK_THROWS_AS(recognize_repdigit(0), std::invalid_argument);
}

TEST_CASE("recognition inverts construction for all 81 pairs up to length 9") {
    for (int a = 1; a <= 9; ++a)
        for (long m = 1; m <= 9; ++m) {
            auto rep = recognize_repdigit(repdigit_value({a, m}));
            REQUIRE(rep.has_value());
            CHECK(*rep == RepdigitRep{a, m});
        }
}

TEST_CASE("Pell search finds exactly the five classified values") {
    auto sols = search_difference_solutions(BinaryRecurrence::pell(), 1, 149);
    CHECK(value_set(sols) == std::set<mpz_class>{2, 5, 12, 29, 70});
    // and the expected representations
    std::vector<SolutionRecord> expected = {
        {2, 2, 1, 2, 9, 1}, {3, 5, 1, 2, 6, 1}, {4, 12, 1, 3, 9, 2},
        {5, 29, 3, 2, 4, 1}, {6, 70, 7, 2, 7, 1}};
    CHECK(sols == expected);
}

TEST_CASE("no Pell solutions beyond index 6") {
    auto sols = search_difference_solutions(BinaryRecurrence::pell(), 7, 149);
    CHECK(sols.empty());
}

TEST_CASE("companion search finds exactly the six classified values") {
    auto sols = search_difference_solutions(BinaryRecurrence::pell_lucas(), 0, 149);
    // note: 2 appears twice (indices 0 and 1 share the value)
    CHECK(value_set(sols) == std::set<mpz_class>{2, 6, 14, 34, 82, 478});
    bool has_478 = false;
    for (const auto& s : sols)
        if (s.value == 478) {
            has_478 = true;
            CHECK(s.a1 == 5);
            CHECK(s.n == 3);
            CHECK(s.a2 == 7);
            CHECK(s.m == 2);
        }
    CHECK(has_478);
}

TEST_CASE("every record satisfies its defining equation exactly") {
    for (auto rec : {BinaryRecurrence::pell(), BinaryRecurrence::pell_lucas()}) {
        for (const auto& s : search_difference_solutions(rec, 0, 149)) {
            CHECK(s.value == term(rec, s.k));
            CHECK(s.value == s.a1 * repunit(s.n) - s.a2 * repunit(s.m));
            CHECK(s.n >= 2);
            CHECK(s.n >= s.m);
        }
    }
}

TEST_CASE("search agrees with the wider-bound completeness oracle") {
    for (auto rec : {BinaryRecurrence::pell(), BinaryRecurrence::pell_lucas()}) {
        auto got = search_difference_solutions(rec, 0, 60);
        auto want = oracle_search(rec, 0, 60);
        CHECK(value_set(got) == value_set(want));
        CHECK(got.size() == want.size());
    }
}

TEST_CASE("parallel and serial kernels produce identical results") {
    for (auto rec : {BinaryRecurrence::pell(), BinaryRecurrence::pell_lucas()}) {
        auto par = search_difference_solutions(rec, 0, 149, ExecPolicy::openmp);
        auto ser = search_difference_solutions(rec, 0, 149, ExecPolicy::serial);
        CHECK(par == ser);
    }
}

TEST_CASE("runtime guard rejects oversized ranges") {
    CHECK_THROWS_AS(search_difference_solutions(BinaryRecurrence::pell(), 0, 201),
                    std::invalid_argument);
    CHECK_THROWS_AS(search_difference_solutions(BinaryRecurrence::pell(), 5, 4),
                    std::invalid_argument);
}

TEST_CASE("repdigit members of both sequences") {
    auto pm = repdigit_members(BinaryRecurrence::pell(), 149);
    REQUIRE(pm.size() == 3);
    CHECK(pm.back().second == 5);
    auto qm = repdigit_members(BinaryRecurrence::pell_lucas(), 149);
    REQUIRE(qm.size() == 3);
    CHECK(qm.back().second == 6);
}

TEST_CASE("adjacent-length scan above the threshold is empty") {
    auto hits = scan_adjacent_length_solutions(BinaryRecurrence::pell_lucas(), 150, 300);
    CHECK(hits.empty());
}
