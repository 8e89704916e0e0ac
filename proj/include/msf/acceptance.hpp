#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace msf {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    // quick trims trial counts for interactive runs; the gating run uses full
    bool quick = false;
    std::uint64_t seed = 1729;
};

// Runs the full battery in order; always returns 15 results.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

bool all_pass(const std::vector<CriterionResult>& results);

std::string format_result_line(const CriterionResult& r);

}  // namespace msf
