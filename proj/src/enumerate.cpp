#include "lchoose/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "lchoose/error.hpp"

namespace lchoose {

NodeBudget::NodeBudget(const SearchBudget& budget)
    : max_nodes_(budget.max_nodes),
      deadline_(std::chrono::steady_clock::now() + budget.max_wall),
      has_deadline_(budget.max_wall.count() > 0) {}

bool NodeBudget::charge() {
    if (exhausted_.load(std::memory_order_relaxed)) return false;
    const std::uint64_t n = used_.fetch_add(1, std::memory_order_relaxed) + 1;
    if (max_nodes_ != 0 && n > max_nodes_) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    if (has_deadline_ && (n & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) {
        exhausted_.store(true, std::memory_order_relaxed);
        return false;
    }
    return true;
}

std::string to_string(Completion completion) {
    switch (completion) {
        case Completion::Exhaustive: return "exhaustive";
        case Completion::Truncated: return "truncated";
        case Completion::Stopped: return "stopped";
    }
    return "unknown";
}

namespace {

struct ClassGenerator {
    int quota;
    int min_support;
    int max_columns;
    NodeBudget& budget;
    const std::function<bool(const std::vector<VertexSet>&)>& generate;
    std::vector<int> deficit;
    std::vector<VertexSet> columns;

    bool run(VertexSet prev) {
        if (!budget.charge()) return false;
        VertexSet open = 0;
        int worst = 0;
        for (std::size_t v = 0; v < deficit.size(); ++v) {
            if (deficit[v] > 0) {
                open |= VertexSet{1} << v;
                worst = std::max(worst, deficit[v]);
            }
        }
        if (open == 0) return generate(columns);
        // Every column covers a vertex at most once.
        if (static_cast<int>(columns.size()) + worst > max_columns) return true;
        // Columns are nonincreasing, so the highest open vertex must be in the next one.
        const int top = 63 - std::countl_zero(open);
        const VertexSet top_bit = VertexSet{1} << top;
        const VertexSet rest = open & ~top_bit;
        for (VertexSet s = rest;; s = (s - 1) & rest) {
            const VertexSet col = top_bit | s;
            if (col <= prev && std::popcount(col) >= min_support) {
                for (VertexSet r = col; r != 0; r &= r - 1) --deficit[static_cast<std::size_t>(std::countr_zero(r))];
                columns.push_back(col);
                const bool keep_going = run(col);
                columns.pop_back();
                for (VertexSet r = col; r != 0; r &= r - 1) ++deficit[static_cast<std::size_t>(std::countr_zero(r))];
                if (!keep_going) return false;
            }
            if (s == 0) break;
        }
        return true;
    }
};

int min_support_for(int vertices, const EnumerationOptions& options) {
    return options.skip_private_colours && vertices >= 2 ? 2 : 1;
}

}  // namespace

bool for_each_class_structure(int vertices, int quota, int min_support, int max_columns, NodeBudget& budget,
                              const std::function<bool(const std::vector<VertexSet>&)>& generate) {
    if (vertices < 1 || vertices > kMaxVertices) throw ContractError("vertex count out of range");
    if (quota < 1) throw ContractError("class quota must be >= 1");
    ClassGenerator gen{quota, min_support, max_columns, budget, generate,
                       std::vector<int>(static_cast<std::size_t>(vertices), quota), {}};
    return gen.run(~VertexSet{0});
}

OrbitEnumerator::OrbitEnumerator(MultipartiteGraph graph, Lambda lambda, EnumerationOptions options)
    : graph_(std::move(graph)), lambda_(std::move(lambda)), options_(options) {
    if (graph_.vertex_count() > kMaxVertices) throw ContractError("at most 64 vertices are supported");
    if (options_.max_pool_per_class < 0) throw ContractError("pool cap must be >= 0");
}

namespace {

int pool_for(int vertices, int quota, const EnumerationOptions& options) {
    const int natural = vertices * quota;
    return options.max_pool_per_class > 0 ? std::min(natural, options.max_pool_per_class) : natural;
}

}  // namespace

int OrbitEnumerator::universe_bound() const {
    int total = 0;
    for (int k : lambda_.parts()) total += pool_for(graph_.vertex_count(), k, options_);
    return total;
}

bool OrbitEnumerator::prepare(NodeBudget& budget) {
    seeds_.clear();
    const int n = graph_.vertex_count();
    const int quota = lambda_.max_part();
    std::unordered_set<std::string> seen;
    std::vector<ClassColumns> single(1);
    single[0].quota = quota;
    const bool finished = for_each_class_structure(
        n, quota, min_support_for(n, options_), pool_for(n, quota, options_), budget,
        [&](const std::vector<VertexSet>& cols) {
            single[0].columns = cols;
            CanonicalForm form = canonical_form(graph_, single);
            if (seen.insert(std::move(form.key)).second) seeds_.push_back(std::move(form.classes[0].columns));
            return true;
        });
    return finished && !budget.exhausted();
}

Completion OrbitEnumerator::explore(std::size_t seed, NodeBudget& budget,
                                    const std::function<bool(const CanonicalForm&)>& leaf) const {
    const int n = graph_.vertex_count();
    const int q = lambda_.size();
    std::vector<ClassColumns> classes(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) classes[static_cast<std::size_t>(i)].quota = lambda_.part(i);
    classes.back().columns = seeds_.at(seed);

    std::unordered_set<std::string> seen;
    bool stopped = false;
    const int min_support = min_support_for(n, options_);

    // Classes q-2 down to 0 are generated in full, largest quota first.
    auto fill = [&](auto&& self, int index) -> bool {
        if (index < 0) {
            CanonicalForm form = canonical_form(graph_, classes);
            if (!seen.insert(form.key).second) return true;
            if (!leaf(form)) {
                stopped = true;
                return false;
            }
            return true;
        }
        auto& cls = classes[static_cast<std::size_t>(index)];
        return for_each_class_structure(n, cls.quota, min_support, pool_for(n, cls.quota, options_), budget,
                                        [&](const std::vector<VertexSet>& cols) {
                                            cls.columns = cols;
                                            return self(self, index - 1);
                                        });
    };
    fill(fill, q - 2);
    if (stopped) return Completion::Stopped;
    return budget.exhausted() ? Completion::Truncated : Completion::Exhaustive;
}

LambdaAssignment OrbitEnumerator::materialise(const CanonicalForm& form) const {
    return from_columns(graph_.vertex_count(), lambda_, form.classes);
}

EnumerationSummary enumerate_lambda_assignments(const MultipartiteGraph& graph, const Lambda& lambda,
                                                const SearchBudget& budget, const EnumerationOptions& options,
                                                const std::function<bool(const LambdaAssignment&)>& visit) {
    OrbitEnumerator enumerator(graph, lambda, options);
    NodeBudget nodes(budget);
    EnumerationSummary summary;
    summary.universe_bound = enumerator.universe_bound();
    if (!enumerator.prepare(nodes)) {
        summary.completion = Completion::Truncated;
        summary.nodes = nodes.used();
        return summary;
    }

    std::mutex lock;
    std::unordered_set<std::string> global_seen;
    const bool global = enumerator.needs_global_dedupe();
    std::atomic<bool> stop{false};
    std::atomic<bool> truncated{false};
    std::atomic<std::size_t> next_seed{0};

    auto worker = [&] {
        while (!stop.load()) {
            const std::size_t seed = next_seed.fetch_add(1);
            if (seed >= enumerator.seed_count()) return;
            const Completion c = enumerator.explore(seed, nodes, [&](const CanonicalForm& form) {
                std::lock_guard guard(lock);
                if (stop.load()) return false;
                if (global && !global_seen.insert(form.key).second) return true;
                ++summary.orbits;
                if (!visit(enumerator.materialise(form))) {
                    stop.store(true);
                    return false;
                }
                return true;
            });
            if (c == Completion::Truncated) {
                truncated.store(true);
                stop.store(true);
            }
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    summary.nodes = nodes.used();
    if (truncated.load()) {
        summary.completion = Completion::Truncated;
    } else if (stop.load()) {
        summary.completion = Completion::Stopped;
    }
    return summary;
}

}  // namespace lchoose
