// Benchmark comparing the serial reference kernels with their OpenMP
// variants: the exhaustive index search and the reduction case table.
// Usage: repdiff_bench [repeats]

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "repdiff/contfrac.hpp"
#include "repdiff/reduction.hpp"
#include "repdiff/repdigit.hpp"

using namespace repdiff;

namespace {

double time_of(const std::function<void()>& fn, int repeats) {
    double best = 1e100;
    for (int i = 0; i < repeats; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

void row(const char* name, double serial, double parallel) {
    std::printf("%-28s %10.4f ms %10.4f ms   x%.2f\n", name, serial * 1e3, parallel * 1e3,
                serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
    int repeats = argc > 1 ? std::atoi(argv[1]) : 5;
    std::printf("threads: %d, repeats: %d (best-of)\n", omp_get_max_threads(), repeats);
    std::printf("%-28s %13s %13s %7s\n", "kernel", "serial", "openmp", "speedup");

    // exhaustive searches over both sequences, full guarded range
    {
        auto rec_p = BinaryRecurrence::pell();
        auto rec_q = BinaryRecurrence::pell_lucas();
        std::vector<SolutionRecord> sink;
        auto serial = time_of(
            [&] {
                sink = search_difference_solutions(rec_p, 0, 200, ExecPolicy::serial);
                sink = search_difference_solutions(rec_q, 0, 200, ExecPolicy::serial);
            },
            repeats);
        auto parallel = time_of(
            [&] {
                sink = search_difference_solutions(rec_p, 0, 200, ExecPolicy::openmp);
                sink = search_difference_solutions(rec_q, 0, 200, ExecPolicy::openmp);
            },
            repeats);
        row("search k<=200 (both)", serial, parallel);
    }

    // reduction case table at the published second-round instance
    {
        Quantity tau = named_quantity("pell-gamma-inv");
        mpz_class M("13200000000000000");
        ContinuedFraction cf = expand_until_q_exceeds(tau, 6 * M, 14);
        QuadElement denom = QuadElement::root(2) * QuadElement::rational(18);
        std::vector<ReductionInstance> family;
        for (int a1 = 1; a1 <= 9; ++a1)
            for (int a2 = 1; a2 <= 9; ++a2)
                for (long w = 2; w <= 32; ++w) {
                    mpz_class tp;
                    mpz_ui_pow_ui(tp.get_mpz_t(), 10, static_cast<unsigned long>(w));
                    mpq_class num = mpq_class(a1) - mpq_class(mpz_class(a2), tp);
                    family.push_back(ReductionInstance{
                        tau,
                        quantity_log_ratio(QuadElement::rational(num) / denom,
                                           QuadElement::alpha(), "mu"),
                        M, mpq_class(48, 10), quantity_rational(mpq_class(10), "10")});
                }
        ReductionTable sink;
        auto serial =
            time_of([&] { sink = reduce_case_table(family, cf, {}, ExecPolicy::serial); }, repeats);
        auto parallel =
            time_of([&] { sink = reduce_case_table(family, cf, {}, ExecPolicy::openmp); }, repeats);
        std::printf("(table: %zu cases, min_eps=%s)\n", sink.cases.size(), sink.min_eps.c_str());
        row("reduction table 2511 cases", serial, parallel);
    }
    return 0;
}
