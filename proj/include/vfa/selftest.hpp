#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace vfa {

inline constexpr const char* kLibraryVersion = "1.0.0";

struct CriterionResult {
    int id;
    std::string name;
    bool passed;
    double seconds;
    std::string detail;
};

/// Runs the ten acceptance criteria, printing one pass/fail line each.
/// quick trades trial counts for speed (for development; the full run is the
/// release gate).
std::vector<CriterionResult> run_selftest(bool quick, std::uint64_t seed,
                                          std::ostream& log);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace vfa
