#pragma once

// Orchestration of the two classification proofs as ordered certificate
// chains: exhaustive search below the threshold, size bounds, two
// linear-form steps, the combined index ceiling, and the reduction rounds
// (plus the homogeneous Legendre branch and one external lemma on the
// companion side), ending in the k >= 150 contradiction.

#include <optional>
#include <string>
#include <vector>

#include "repdiff/certificate.hpp"
#include "repdiff/precreal.hpp"
#include "repdiff/repdigit.hpp"

namespace repdiff {

struct ProverConfig {
    PrecPolicy prec;
    ExecPolicy exec = ExecPolicy::openmp;
};

Certificate prove_pell(const ProverConfig& config = {});
Certificate prove_pell_lucas(const ProverConfig& config = {});

struct VerifyReport {
    bool ok = false;
    std::vector<std::string> issues;
};

// Re-proves at the certificate's recorded precision and requires byte
// identity, then re-proves at doubled precision and requires every ceiling
// to be stable (non-increasing) and every eps sign to stay positive.
VerifyReport verify_certificate(const Certificate& cert, ExecPolicy exec = ExecPolicy::openmp);

}  // namespace repdiff
