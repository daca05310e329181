// The verification suite behind the `report` subcommand and the acceptance
// test binary: every item checks one quantitative claim end to end at a
// pinned tolerance and reports the measured values.

#pragma once

#include <string>
#include <vector>

namespace entmom {

struct AcceptanceResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string details;
};

struct AcceptanceOptions {
    // Negative-control fixture: replaces the sqrt(1-b^2)/2 coherences of the
    // 2x4 bound entangled family with (1+b)/2, which must make the PPT
    // verification item fail.
    bool corrupt_sigma_b = false;
};

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& options = {});

bool all_passed(const std::vector<AcceptanceResult>& results);
std::string format_acceptance_line(const AcceptanceResult& r);

}  // namespace entmom
