#pragma once

#include <optional>
#include <string>
#include <vector>

namespace extremal {

struct CriterionResult {
    int id = 0;
    std::vector<std::string> tags;
    std::string title;
    bool passed = false;
    /// One line per check, in execution order.
    std::vector<std::string> details;
    double wall_time_ms = 0.0;
};

struct VerifyOptions {
    /// Comma-separated tags; a criterion runs when any tag matches. Empty runs all.
    std::string filter;
    /// Fault injection: replace the schlafli27 Gram value 1/4 with this scalar.
    std::optional<std::string> mutate_schlafli;
    unsigned jobs = 1;
};

/// Criteria that `filter` selects, by id and tags, without running them.
std::vector<std::pair<int, std::vector<std::string>>> list_criteria();

/// Runs the selected acceptance criteria in order.
std::vector<CriterionResult> run_verification(const VerifyOptions& options);

/// Brute-force linear independence of the rows of an integer matrix over
/// F_p: tries every nonzero coefficient vector.
bool rows_independent_brute_force(const std::vector<std::vector<int>>& rows, int p);

} // namespace extremal
