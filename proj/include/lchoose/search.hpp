#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "lchoose/enumerate.hpp"
#include "lchoose/lambda.hpp"
#include "lchoose/solver.hpp"

namespace lchoose {

/// One (n, part vector) cell of a sweep.
struct SearchCell {
    int n = 0;
    std::vector<int> parts;
    Verdict verdict;
    std::chrono::milliseconds elapsed{0};
};

struct PhiSearchReport {
    Lambda lambda{{1}};
    bool trivial = false;
    int n_min = 0;
    int n_max = 0;
    std::vector<SearchCell> cells;
    /// Smallest n with a NOT_CHOOSABLE cell, if any was found.
    std::optional<int> minimum;
    /// Every cell below `minimum` (or every cell, without a minimum) is
    /// CHOOSABLE with an exhaustive verdict.
    bool exhaustive_below = false;
    std::chrono::milliseconds elapsed{0};
};

/// Runs is_choosable on every complete k_lambda-partite graph with
/// k_lambda <= n <= n_max, n ascending and part vectors in decreasing
/// lexicographic order. The budget applies to each cell separately. All part
/// vectors of the first n with a counterexample are still examined, then the
/// sweep stops. Trivial lambda returns at once with trivial = true.
PhiSearchReport phi_search(const Lambda& lambda, int n_max, const SearchBudget& budget,
                           const ChoosabilityOptions& options = {});

struct BelowReport {
    /// Every graph on fewer than n vertices was proved choosable.
    bool holds = false;
    std::vector<SearchCell> cells;
};

/// Checks every complete k_lambda-partite graph on fewer than n vertices.
/// Stops at the first cell that is not exhaustively CHOOSABLE.
BelowReport verify_choosable_below(const Lambda& lambda, int n, const SearchBudget& budget,
                                   const ChoosabilityOptions& options = {});

}  // namespace lchoose
