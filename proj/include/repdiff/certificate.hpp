#pragma once

// Proof certificates: an ordered tree of steps with enough recorded inputs
// to re-execute every one of them, serialized as byte-stable JSON
// (insertion-ordered keys, all numerics as decimal strings).

#include <json.hpp>

#include <string>
#include <vector>

#include "repdiff/repdigit.hpp"

namespace repdiff {

using ordered_json = nlohmann::ordered_json;

enum class StepKind {
    brute_force,
    size_bound,
    matveev,
    weber,
    reduction,
    legendre,
    external_lemma,
    conclusion,
};

std::string to_string(StepKind k);
StepKind step_kind_from_string(const std::string& s);

struct Step {
    StepKind kind;
    std::string anchor;
    ordered_json inputs;
    ordered_json outputs;
    long precision_bits = 0;
};

enum class ProofStatus { proved, proved_conditional, failed };

std::string to_string(ProofStatus s);
ProofStatus status_from_string(const std::string& s);

struct Certificate {
    std::string theorem;  // "pell" | "pell-lucas"
    ProofStatus status = ProofStatus::failed;
    std::vector<Step> steps;
    std::vector<SolutionRecord> solution_set;
    std::vector<std::string> paper_discrepancies;
    std::vector<std::pair<std::string, std::string>> axioms;  // name -> statement
    long precision_floor = 256;
    long precision_cap = 8192;

    std::size_t external_lemma_count() const;
    const Step* find_step(const std::string& anchor) const;

    ordered_json to_json() const;
    static Certificate from_json(const ordered_json& j);

    std::string serialize() const;  // stable text form
    static Certificate load(const std::string& path);
    void save(const std::string& path) const;
};

}  // namespace repdiff
