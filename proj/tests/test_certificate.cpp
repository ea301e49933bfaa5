#include <doctest.h>

#include <cstdio>
#include <set>

#include "repdiff/prover.hpp"

using namespace repdiff;

namespace {

// proofs are cheap (fractions of a second) but shared across cases here
const Certificate& pell_cert() {
    static Certificate c = prove_pell({});
    return c;
}

const Certificate& pl_cert() {
    static Certificate c = prove_pell_lucas({});
    return c;
}

std::set<std::string> value_set_of(const Certificate& c) {
    std::set<std::string> vs;
    for (const auto& s : c.solution_set) vs.insert(s.value.get_str());
    return vs;
}

mpz_class output_int(const Certificate& c, const char* anchor, const char* key) {
    const Step* s = c.find_step(anchor);
    REQUIRE(s != nullptr);
    return mpz_class(s->outputs.at(key).get<std::string>());
}

}  // namespace

TEST_CASE("pell certificate closes with status PROVED") {
    const Certificate& c = pell_cert();
    CHECK(c.status == ProofStatus::proved);
    CHECK(c.external_lemma_count() == 0);
    CHECK(value_set_of(c) == std::set<std::string>{"2", "5", "12", "29", "70"});
    CHECK(output_int(c, "reduction-round-2", "max_w_bound") < 150);
    // intermediate ceilings stay within a factor 10 of the published chain
    mpz_class K1 = output_int(c, "combined-ceiling", "K");
    CHECK(K1 <= mpz_class("1250000000000000000000000000000"));  // 10 * 1.25e29
    mpz_class W1 = output_int(c, "reduction-round-1", "max_w_bound");
    CHECK(W1 <= 40);  // published 32; recomputation may differ by convergent choice
    mpz_class K2 = output_int(c, "resolved-ceiling", "K");
    CHECK(K2 <= mpz_class("132000000000000000"));  // 10 * 1.32e16
}

TEST_CASE("companion certificate closes conditionally with one external lemma") {
    const Certificate& c = pl_cert();
    CHECK(c.status == ProofStatus::proved_conditional);
    CHECK(c.external_lemma_count() == 1);
    CHECK(value_set_of(c) == std::set<std::string>{"2", "6", "14", "34", "82", "478"});
    CHECK(output_int(c, "reduction-final", "max_w_bound") < 150);
    CHECK(output_int(c, "combined-ceiling", "K") <=
          mpz_class("90000000000000000000000000000000"));  // 10 * 9e30
}

TEST_CASE("solution sets equal the searcher output exactly") {
    auto sp = search_difference_solutions(BinaryRecurrence::pell(), 1, 149);
    CHECK(pell_cert().solution_set == sp);
    auto sq = search_difference_solutions(BinaryRecurrence::pell_lucas(), 0, 149);
    CHECK(pl_cert().solution_set == sq);
}

TEST_CASE("two runs serialize byte-identically") {
    Certificate again = prove_pell({});
    CHECK(again.serialize() == pell_cert().serialize());
    Certificate again2 = prove_pell_lucas({});
    CHECK(again2.serialize() == pl_cert().serialize());
}

TEST_CASE("serialization round-trips through a file") {
    std::string path = "cert_roundtrip_test.json";
    pell_cert().save(path);
    Certificate loaded = Certificate::load(path);
    CHECK(loaded.serialize() == pell_cert().serialize());
    std::remove(path.c_str());
}

TEST_CASE("verification accepts fresh certificates") {
    auto rep = verify_certificate(pell_cert());
    for (const auto& i : rep.issues) MESSAGE(i);
    CHECK(rep.ok);
    auto rep2 = verify_certificate(pl_cert());
    for (const auto& i : rep2.issues) MESSAGE(i);
    CHECK(rep2.ok);
}

TEST_CASE("verification rejects a tampered ceiling") {
    Certificate mutant = pell_cert();
    for (auto& s : mutant.steps)
        if (s.anchor == "reduction-round-2") s.outputs["max_w_bound"] = "1000000";
    auto rep = verify_certificate(mutant);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("verification rejects a tampered solution value") {
    Certificate mutant = pl_cert();
    REQUIRE_FALSE(mutant.solution_set.empty());
    mutant.solution_set[0].value += 1;
    auto rep = verify_certificate(mutant);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("verification rejects a mismatched status") {
    Certificate mutant = pl_cert();
    mutant.status = ProofStatus::proved;  // despite the external lemma
    auto rep = verify_certificate(mutant);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("every reduction step stores its per-case table") {
    for (const Certificate* c : {&pell_cert(), &pl_cert()}) {
        int reductions = 0;
        for (const auto& s : c->steps) {
            if (s.kind != StepKind::reduction) continue;
            ++reductions;
            REQUIRE(s.outputs.contains("table"));
            CHECK(s.outputs.at("table").size() ==
                  static_cast<std::size_t>(s.inputs.at("cases").get<long>()));
        }
        CHECK(reductions == 2);
    }
}

TEST_CASE("step chain wiring: reduction bounds feed the following ceilings") {
    const Certificate& c = pell_cert();
    mpz_class K1 = output_int(c, "combined-ceiling", "K");
    const Step* r1 = c.find_step("reduction-round-1");
    REQUIRE(r1 != nullptr);
    CHECK(mpz_class(r1->inputs.at("M").get<std::string>()) == K1);
    mpz_class K2 = output_int(c, "resolved-ceiling", "K");
    const Step* r2 = c.find_step("reduction-round-2");
    REQUIRE(r2 != nullptr);
    CHECK(mpz_class(r2->inputs.at("M").get<std::string>()) == K2);
}

TEST_CASE("ceilings never increase when recomputed at quadrupled precision") {
    ProverConfig cfg;
    cfg.prec.floor = 1024;  // 4 x default
    Certificate hi = prove_pell(cfg);
    const Certificate& lo = pell_cert();
    REQUIRE(hi.steps.size() == lo.steps.size());
    for (const char* anchor : {"combined-ceiling", "resolved-ceiling"})
        CHECK(output_int(hi, anchor, "K") <= output_int(lo, anchor, "K"));
    for (const char* anchor : {"reduction-round-1", "reduction-round-2"})
        CHECK(output_int(hi, anchor, "max_w_bound") <= output_int(lo, anchor, "max_w_bound"));
}
