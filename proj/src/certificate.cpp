#include "repdiff/certificate.hpp"

#include <fstream>
#include <stdexcept>

namespace repdiff {

std::string to_string(StepKind k) {
    switch (k) {
        case StepKind::brute_force: return "brute-force";
        case StepKind::size_bound: return "size-bound";
        case StepKind::matveev: return "matveev";
        case StepKind::weber: return "weber";
        case StepKind::reduction: return "reduction";
        case StepKind::legendre: return "legendre";
        case StepKind::external_lemma: return "external-lemma";
        case StepKind::conclusion: return "conclusion";
    }
    throw std::logic_error("unknown step kind");
}

StepKind step_kind_from_string(const std::string& s) {
    if (s == "brute-force") return StepKind::brute_force;
    if (s == "size-bound") return StepKind::size_bound;
    if (s == "matveev") return StepKind::matveev;
    if (s == "weber") return StepKind::weber;
    if (s == "reduction") return StepKind::reduction;
    if (s == "legendre") return StepKind::legendre;
    if (s == "external-lemma") return StepKind::external_lemma;
    if (s == "conclusion") return StepKind::conclusion;
    throw std::invalid_argument("unknown step kind: " + s);
}

std::string to_string(ProofStatus s) {
    switch (s) {
        case ProofStatus::proved: return "PROVED";
        case ProofStatus::proved_conditional: return "PROVED_CONDITIONAL";
        case ProofStatus::failed: return "FAILED";
    }
    throw std::logic_error("unknown status");
}

ProofStatus status_from_string(const std::string& s) {
    if (s == "PROVED") return ProofStatus::proved;
    if (s == "PROVED_CONDITIONAL") return ProofStatus::proved_conditional;
    if (s == "FAILED") return ProofStatus::failed;
    throw std::invalid_argument("unknown status: " + s);
}

std::size_t Certificate::external_lemma_count() const {
    std::size_t n = 0;
    for (const auto& s : steps)
        if (s.kind == StepKind::external_lemma) ++n;
    return n;
}

const Step* Certificate::find_step(const std::string& anchor) const {
    for (const auto& s : steps)
        if (s.anchor == anchor) return &s;
    return nullptr;
}

static ordered_json solution_to_json(const SolutionRecord& s) {
    ordered_json j;
    j["k"] = s.k;
    j["value"] = s.value.get_str();
    j["a1"] = s.a1;
    j["n"] = s.n;
    j["a2"] = s.a2;
    j["m"] = s.m;
    return j;
}

static SolutionRecord solution_from_json(const ordered_json& j) {
    SolutionRecord s;
    s.k = j.at("k").get<long>();
    s.value = mpz_class(j.at("value").get<std::string>());
    s.a1 = j.at("a1").get<int>();
    s.n = j.at("n").get<long>();
    s.a2 = j.at("a2").get<int>();
    s.m = j.at("m").get<long>();
    return s;
}

ordered_json Certificate::to_json() const {
    ordered_json j;
    j["theorem"] = theorem;
    j["status"] = to_string(status);
    j["steps"] = ordered_json::array();
    for (const auto& s : steps) {
        ordered_json js;
        js["kind"] = to_string(s.kind);
        js["anchor"] = s.anchor;
        js["inputs"] = s.inputs;
        js["outputs"] = s.outputs;
        js["precision_bits"] = s.precision_bits;
        j["steps"].push_back(js);
    }
    j["solution_set"] = ordered_json::array();
    for (const auto& s : solution_set) j["solution_set"].push_back(solution_to_json(s));
    ordered_json meta;
    meta["paper_discrepancies"] = paper_discrepancies;
    ordered_json ax = ordered_json::array();
    for (const auto& [name, text] : axioms) {
        ordered_json a;
        a["name"] = name;
        a["statement"] = text;
        ax.push_back(a);
    }
    meta["axioms"] = ax;
    meta["precision_floor"] = precision_floor;
    meta["precision_cap"] = precision_cap;
    j["metadata"] = meta;
    return j;
}

Certificate Certificate::from_json(const ordered_json& j) {
    Certificate c;
    c.theorem = j.at("theorem").get<std::string>();
    c.status = status_from_string(j.at("status").get<std::string>());
    for (const auto& js : j.at("steps")) {
        Step s;
        s.kind = step_kind_from_string(js.at("kind").get<std::string>());
        s.anchor = js.at("anchor").get<std::string>();
        s.inputs = js.at("inputs");
        s.outputs = js.at("outputs");
        s.precision_bits = js.at("precision_bits").get<long>();
        c.steps.push_back(std::move(s));
    }
    for (const auto& js : j.at("solution_set")) c.solution_set.push_back(solution_from_json(js));
    const auto& meta = j.at("metadata");
    c.paper_discrepancies = meta.at("paper_discrepancies").get<std::vector<std::string>>();
    for (const auto& a : meta.at("axioms"))
        c.axioms.emplace_back(a.at("name").get<std::string>(), a.at("statement").get<std::string>());
    c.precision_floor = meta.at("precision_floor").get<long>();
    c.precision_cap = meta.at("precision_cap").get<long>();
    return c;
}

std::string Certificate::serialize() const { return to_json().dump(2) + "\n"; }

void Certificate::save(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write certificate: " + path);
    out << serialize();
}

Certificate Certificate::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read certificate: " + path);
    ordered_json j = ordered_json::parse(in);
    return from_json(j);
}

}  // namespace repdiff
