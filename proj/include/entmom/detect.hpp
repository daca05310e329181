// The single-shot evaluation shared by the CLI, the scans and the
// verification suite: one (state, map, party) combination in, moments,
// Hankel report, criterion verdicts and the oracle spectrum out.

#pragma once

#include <optional>
#include <string>

#include "entmom/moments.hpp"
#include "entmom/oracles.hpp"

namespace entmom {

struct DetectionResult {
    std::string map_id;
    std::size_t party = 0;
    double mapped_trace = 0.0;
    MomentSequence q;
    HankelReport hankel;
    CriterionVerdict hankel_verdict;             // witness = min(S1, S2) eigenvalue
    std::optional<CriterionVerdict> q3_lambda_verdict;   // absent when moments unnormalized
    std::optional<CriterionVerdict> q3_optimal_verdict;  // absent on DomainError too
    std::string q3_optimal_error;
    Spectrum mapped;  // oracle
    bool consistent = true;
};

DetectionResult evaluate_detection(const DensityMatrix& rho, const SignedKrausMap& map,
                                   std::size_t party, std::size_t n, bool normalize = true,
                                   ConsistencyLog* log = nullptr);

// Partial-transpose side: PT moments of the same state, their Hankel
// matrices, and the optimal moment criterion.
struct PtResult {
    std::size_t party = 0;
    MomentSequence p;
    HankelReport hankel;
    CriterionVerdict p3_verdict;      // Hankel negativity of PT moments
    CriterionVerdict p3_oppt_verdict;
    double min_pt_eig = 0.0;          // oracle for the same party
};

PtResult evaluate_pt(const DensityMatrix& rho, std::size_t party, std::size_t n,
                     ConsistencyLog* log = nullptr);

}  // namespace entmom
