#include "lchoose/search.hpp"

#include "lchoose/error.hpp"
#include "lchoose/graph.hpp"

namespace lchoose {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

SearchCell run_cell(int n, const std::vector<int>& parts, const Lambda& lambda, const SearchBudget& budget,
                    const ChoosabilityOptions& options) {
    const auto start = Clock::now();
    SearchCell cell;
    cell.n = n;
    cell.parts = parts;
    cell.verdict = is_choosable(MultipartiteGraph(parts), lambda, budget, options);
    cell.elapsed = since(start);
    return cell;
}

bool proved_choosable(const SearchCell& cell) {
    return cell.verdict.status == ChoosabilityStatus::Choosable && cell.verdict.exhaustive;
}

}  // namespace

PhiSearchReport phi_search(const Lambda& lambda, int n_max, const SearchBudget& budget,
                           const ChoosabilityOptions& options) {
    const auto start = Clock::now();
    PhiSearchReport report;
    report.lambda = lambda;
    report.n_min = lambda.sum();
    report.n_max = n_max;
    if (lambda.is_trivial()) {
        report.trivial = true;
        report.exhaustive_below = true;
        return report;
    }
    if (n_max < lambda.sum()) throw ContractError("n_max must be at least k_lambda");
    for (int n = lambda.sum(); n <= n_max && !report.minimum; ++n) {
        for (const auto& parts : enumerate_part_vectors(n, lambda.sum())) {
            report.cells.push_back(run_cell(n, parts, lambda, budget, options));
            if (report.cells.back().verdict.status == ChoosabilityStatus::NotChoosable) report.minimum = n;
        }
    }
    report.exhaustive_below = true;
    for (const auto& cell : report.cells) {
        if (report.minimum && cell.n >= *report.minimum) break;
        if (!proved_choosable(cell)) report.exhaustive_below = false;
    }
    report.elapsed = since(start);
    return report;
}

BelowReport verify_choosable_below(const Lambda& lambda, int n, const SearchBudget& budget,
                                   const ChoosabilityOptions& options) {
    BelowReport report;
    report.holds = true;
    if (lambda.is_trivial()) return report;
    for (int m = lambda.sum(); m < n; ++m) {
        for (const auto& parts : enumerate_part_vectors(m, lambda.sum())) {
            report.cells.push_back(run_cell(m, parts, lambda, budget, options));
            if (!proved_choosable(report.cells.back())) {
                report.holds = false;
                return report;
            }
        }
    }
    return report;
}

}  // namespace lchoose
