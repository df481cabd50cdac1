#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lchoose/assignment.hpp"
#include "lchoose/canonical.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/lambda.hpp"

namespace lchoose {

/// Search limits. Node counts are reproducible across machines; the wall
/// clock limit is advisory. Zero means unlimited.
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    std::chrono::milliseconds max_wall{0};
};

/// Shared, thread-safe node counter enforcing a SearchBudget.
class NodeBudget {
 public:
    explicit NodeBudget(const SearchBudget& budget);

    /// Charges one node; returns false once the budget is exhausted.
    bool charge();
    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t used() const { return used_.load(std::memory_order_relaxed); }

 private:
    std::uint64_t max_nodes_;
    std::chrono::steady_clock::time_point deadline_;
    bool has_deadline_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> exhausted_{false};
};

struct EnumerationOptions {
    /// Skip assignments in which some colour lies in a single list. Such a
    /// vertex can always take its private colour, and replacing that colour by
    /// one already used in the same class keeps any bad assignment bad, so the
    /// reduced space contains a bad assignment iff the full space does.
    bool skip_private_colours = false;
    /// Cap on the number of colours per class; 0 means n * k_i.
    int max_pool_per_class = 0;
    int threads = 1;
};

enum class Completion { Exhaustive, Truncated, Stopped };

std::string to_string(Completion completion);

struct EnumerationSummary {
    Completion completion = Completion::Exhaustive;
    std::uint64_t orbits = 0;
    std::uint64_t nodes = 0;
    int universe_bound = 0;
};

/// Orbit enumeration of exact lambda-list assignments of G.
///
/// Each class is generated column-wise, as a multiset of vertex sets in
/// nonincreasing order where every vertex is covered exactly k_i times. This
/// removes colour renaming inside a class. The class with the largest quota
/// is generated first and reduced to one representative per orbit of the
/// vertex symmetries ("seeds"); the remaining classes are generated in full
/// for each seed and deduplicated by canonical form. Seeds are independent
/// units of work.
class OrbitEnumerator {
 public:
    OrbitEnumerator(MultipartiteGraph graph, Lambda lambda, EnumerationOptions options);

    const MultipartiteGraph& graph() const { return graph_; }
    const Lambda& lambda() const { return lambda_; }
    /// Sum over classes of the per-class pool cap.
    int universe_bound() const;

    /// Builds the seed list. Returns false if the budget ran out.
    bool prepare(NodeBudget& budget);
    std::size_t seed_count() const { return seeds_.size(); }

    /// True when two different seeds can produce the same orbit (the leading
    /// quota occurs more than once in lambda), so callers must deduplicate
    /// across seeds.
    bool needs_global_dedupe() const { return lambda_.multiplicity(lambda_.max_part()) > 1; }

    /// Explores one seed, calling leaf for every orbit not seen earlier within
    /// this seed. leaf returns false to stop. Returns Exhaustive, Truncated
    /// (budget) or Stopped (leaf asked to stop).
    Completion explore(std::size_t seed, NodeBudget& budget,
                       const std::function<bool(const CanonicalForm&)>& leaf) const;

    LambdaAssignment materialise(const CanonicalForm& form) const;

 private:
    MultipartiteGraph graph_;
    Lambda lambda_;
    EnumerationOptions options_;
    std::vector<std::vector<VertexSet>> seeds_;
};

/// Calls generate(columns) for every multiset of vertex sets over `vertices`
/// vertices where each vertex lies in exactly `quota` sets, each set has at
/// least `min_support` vertices, and there are at most `max_columns` sets.
/// Columns come in nonincreasing numeric order. Returns false if the budget
/// ran out or generate returned false.
bool for_each_class_structure(int vertices, int quota, int min_support, int max_columns, NodeBudget& budget,
                              const std::function<bool(const std::vector<VertexSet>&)>& generate);

/// Streams one representative per orbit of exact lambda-list assignments of G
/// with at most n * k_i colours in class i. Representatives are canonical
/// forms, so the set of yielded assignments does not depend on the order of
/// exploration. With threads > 1, visit is called under a lock from worker
/// threads in arbitrary order. visit returns false to stop early.
EnumerationSummary enumerate_lambda_assignments(const MultipartiteGraph& graph, const Lambda& lambda,
                                                const SearchBudget& budget, const EnumerationOptions& options,
                                                const std::function<bool(const LambdaAssignment&)>& visit);

}  // namespace lchoose
