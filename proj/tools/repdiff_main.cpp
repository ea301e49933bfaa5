// repdiff: classifies which Pell and Pell-Lucas numbers are a difference of
// two base-10 repdigits, with machine-checkable certificates.
//
// Subcommands: prove, search, reduce, cf, matveev, verify.  Exit codes:
// 0 success, 1 proof/verification failure (including precision exhaustion),
// 2 usage error.

#include <CLI11.hpp>
#include <omp.h>

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>

#include "repdiff/contfrac.hpp"
#include "repdiff/matveev.hpp"
#include "repdiff/prover.hpp"
#include "repdiff/quantity.hpp"
#include "repdiff/reduction.hpp"

using namespace repdiff;

namespace {

long env_long(const char* name, long fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stol(v);
    } catch (...) {
        return fallback;
    }
}

struct GlobalOpts {
    long prec_floor = env_long("REPDIFF_PRECISION_FLOOR", 256);
    long prec_cap = env_long("REPDIFF_PRECISION_CAP", 8192);
    int threads = 0;
    std::string output_path;

    PrecPolicy policy() const {
        PrecPolicy p;
        p.floor = prec_floor;
        p.cap = prec_cap;
        if (p.floor > p.cap) throw CLI::ValidationError("precision floor exceeds cap");
        return p;
    }
};

BinaryRecurrence sequence_by_name(const std::string& name) {
    if (name == "pell") return BinaryRecurrence::pell();
    if (name == "pell-lucas") return BinaryRecurrence::pell_lucas();
    throw CLI::ValidationError("unknown sequence: " + name);
}

int run_prove(const GlobalOpts& g, const std::string& theorem) {
    if (theorem != "pell" && theorem != "pell-lucas")
        throw CLI::ValidationError("theorem must be pell or pell-lucas");
    ProverConfig cfg;
    cfg.prec = g.policy();
    Certificate cert = theorem == "pell" ? prove_pell(cfg) : prove_pell_lucas(cfg);
    for (const auto& s : cert.steps) {
        std::cout << to_string(s.kind) << " " << s.anchor;
        if (s.outputs.contains("K")) std::cout << "  K=" << s.outputs["K"].get<std::string>();
        if (s.outputs.contains("max_w_bound"))
            std::cout << "  bound=" << s.outputs["max_w_bound"].get<std::string>();
        if (s.outputs.contains("min_eps"))
            std::cout << "  eps>=" << s.outputs["min_eps"].get<std::string>();
        if (s.outputs.contains("n_minus_m_bound"))
            std::cout << "  n-m<=" << s.outputs["n_minus_m_bound"].get<std::string>();
        std::cout << "\n";
    }
    std::cout << "status " << to_string(cert.status) << "\n";
    std::cout << "values";
    {
        std::set<mpz_class> values;
        for (const auto& s : cert.solution_set) values.insert(s.value);
        for (const auto& v : values) std::cout << " " << v.get_str();
    }
    std::cout << "\n";
    if (!g.output_path.empty()) {
        cert.save(g.output_path);
        std::cout << "certificate written to " << g.output_path << "\n";
    }
    return cert.status == ProofStatus::failed ? 1 : 0;
}

int run_search(const GlobalOpts& g, const std::string& seq, long kmin, long kmax) {
    (void)g;
    auto rec = sequence_by_name(seq);
    auto sols = search_difference_solutions(rec, kmin, kmax);
    for (const auto& s : sols) {
        std::cout << "k=" << s.k << " " << s.value.get_str() << " = "
                  << repdigit_value({s.a1, s.n}).get_str() << " - "
                  << repdigit_value({s.a2, s.m}).get_str() << " (a1=" << s.a1 << ",n=" << s.n
                  << ",a2=" << s.a2 << ",m=" << s.m << ")\n";
    }
    std::cout << "total " << sols.size() << "\n";
    return 0;
}

int run_reduce(const GlobalOpts& g, const std::string& tau, const std::string& mu,
               const std::string& M, const std::string& A, const std::string& B) {
    ReductionInstance inst;
    inst.tau = named_quantity(tau);
    inst.mu = named_quantity(mu);
    inst.M = mpz_class(M);
    inst.A = parse_decimal(A);
    inst.B = named_quantity(B);
    auto out = dujella_petho_reduce(inst, g.policy());
    std::cout << "q=" << out.q_used.get_str() << " cf_index=" << out.cf_index
              << " eps>=" << out.eps_lower << " w_bound=" << out.w_bound.get_str()
              << " attempts=" << out.attempts << " precision_bits=" << out.precision << "\n";
    return 0;
}

int run_cf(const GlobalOpts& g, const std::string& constant, long terms) {
    Quantity x = named_quantity(constant);
    ContinuedFraction cf = expand_cf(x, static_cast<std::size_t>(terms), g.policy());
    for (std::size_t i = 0; i < cf.size(); ++i)
        std::cout << i << " " << cf.quotients[i].get_str() << " " << cf.p[i].get_str() << " "
                  << cf.q[i].get_str() << "\n";
    if (cf.terminated) std::cout << "# expansion terminates (rational input)\n";
    return 0;
}

int run_matveev(const GlobalOpts& g, int t, int D, const std::string& B,
                const std::vector<std::string>& As) {
    MatveevInstance inst;
    inst.t = t;
    inst.D = D;
    inst.B = parse_decimal(B);
    mpfr_prec_t prec = g.policy().floor;
    for (const auto& a : As) inst.A.push_back(PrecReal::from_rational(parse_decimal(a), prec));
    PrecReal c = matveev_exponent(inst, prec);
    std::cout << "exponent<=" << c.upper_string(20) << " ceil=" << c.ceil_upper().get_str() << "\n";
    if (*inst.B < 3) std::cout << "note: B below 3, so 1+log(B) <= 2\n";
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& path) {
    (void)g;
    try {
        Certificate cert = Certificate::load(path);
        VerifyReport rep = verify_certificate(cert);
        if (rep.ok) {
            std::cout << "verified: " << cert.theorem << " " << to_string(cert.status) << "\n";
            return 0;
        }
        std::cout << "verification FAILED:\n";
        for (const auto& issue : rep.issues) std::cout << "  - " << issue << "\n";
    } catch (const std::exception& e) {
        std::cout << "verification FAILED: malformed certificate: " << e.what() << "\n";
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"classification of Pell and Pell-Lucas numbers as differences of two repdigits"};
    app.require_subcommand(1);
    app.fallthrough();
    GlobalOpts g;
    app.add_option("--prec-floor", g.prec_floor, "working precision floor in bits");
    app.add_option("--prec-cap", g.prec_cap, "working precision cap in bits");
    app.add_option("--threads", g.threads, "worker threads (default: all)");
    app.add_option("--out", g.output_path, "write the certificate to this path");

    auto* prove = app.add_subcommand("prove", "run a full proof and emit its certificate");
    std::string theorem;
    prove->add_option("theorem", theorem, "pell | pell-lucas")->required();

    auto* search = app.add_subcommand("search", "exhaustive small-index search");
    std::string seq;
    long kmin = 0, kmax = 0;
    search->add_option("--seq", seq, "pell | pell-lucas")->required();
    search->add_option("--kmin", kmin)->required();
    search->add_option("--kmax", kmax)->required();

    auto* reduce = app.add_subcommand("reduce", "one reduction instance");
    std::string tau, mu, M, A = "1.0", B = "10";
    reduce->add_option("--tau", tau, "named constant or decimal")->required();
    reduce->add_option("--mu", mu, "named constant or decimal")->required();
    reduce->add_option("--M", M)->required();
    reduce->add_option("--A", A);
    reduce->add_option("--B", B);

    auto* cf = app.add_subcommand("cf", "continued fraction of a named constant");
    std::string constant;
    long terms = 20;
    cf->add_option("--const", constant, "pell-gamma | pell-gamma-inv | decimal")->required();
    cf->add_option("--terms", terms);

    auto* matveev = app.add_subcommand("matveev", "linear-form exponent constant");
    int t = 1, D = 1;
    std::string Bs;
    std::vector<std::string> As;
    matveev->add_option("--t", t)->required();
    matveev->add_option("--D", D)->required();
    matveev->add_option("--B", Bs)->required();
    matveev->add_option("--A", As, "comma separated heights")->required()->delimiter(',');

    auto* verify = app.add_subcommand("verify", "re-check a stored certificate");
    std::string cert_path;
    verify->add_option("--cert", cert_path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits 0, any usage problem exits 2
    }

    if (g.threads > 0) omp_set_num_threads(g.threads);

    try {
        if (*prove) return run_prove(g, theorem);
        if (*search) return run_search(g, seq, kmin, kmax);
        if (*reduce) return run_reduce(g, tau, mu, M, A, B);
        if (*cf) return run_cf(g, constant, terms);
        if (*matveev) return run_matveev(g, t, D, Bs, As);
        if (*verify) return run_verify(g, cert_path);
    } catch (const precision_exhausted& e) {
        std::cerr << "precision exhausted: " << e.what() << "\n";
        return 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
