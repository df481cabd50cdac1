#include "lchoose/solver.hpp"

#include <algorithm>
#include <climits>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "lchoose/error.hpp"

namespace lchoose {

bool is_proper_list_colouring(const MultipartiteGraph& graph, const ListAssignment& lists, const Colouring& colouring) {
    const int n = graph.vertex_count();
    if (lists.vertex_count() != n || static_cast<int>(colouring.colour_of.size()) != n) return false;
    std::vector<int> owner(static_cast<std::size_t>(kMaxColours), -1);
    for (int v = 0; v < n; ++v) {
        const int c = colouring.colour_of[static_cast<std::size_t>(v)];
        if (c < 0 || c >= kMaxColours || !contains(lists.list(v), c)) return false;
        int& part = owner[static_cast<std::size_t>(c)];
        if (part != -1 && part != graph.part_of(v)) return false;
        part = graph.part_of(v);
    }
    return true;
}

namespace {

// Inclusion-minimal sets meeting every one of `sets`, ordered by size then value.
std::vector<ColourSet> minimal_covers(const std::vector<ColourSet>& sets) {
    std::vector<ColourSet> found;
    auto rec = [&](auto&& self, ColourSet chosen) -> void {
        const ColourSet* pick = nullptr;
        for (const ColourSet& s : sets) {
            if ((s & chosen) == 0 && (pick == nullptr || colour_count(s) < colour_count(*pick))) pick = &s;
        }
        if (pick == nullptr) {
            found.push_back(chosen);
            return;
        }
        for_each_colour(*pick, [&](int c) { self(self, chosen | colour_bit(c)); });
    };
    rec(rec, 0);
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    std::vector<ColourSet> minimal;
    for (ColourSet s : found) {
        bool is_minimal = true;
        for_each_colour(s, [&](int c) {
            const ColourSet without = s & ~colour_bit(c);
            if (std::all_of(sets.begin(), sets.end(), [&](ColourSet l) { return (l & without) != 0; })) {
                is_minimal = false;
            }
        });
        if (is_minimal) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), [](ColourSet a, ColourSet b) {
        const int ca = colour_count(a);
        const int cb = colour_count(b);
        return ca != cb ? ca < cb : a < b;
    });
    return minimal;
}

class PartSearch {
 public:
    PartSearch(const MultipartiteGraph& graph, const ListAssignment& lists)
        : graph_(graph), lists_(lists), failed_(static_cast<std::size_t>(graph.part_count())),
          chosen_(static_cast<std::size_t>(graph.part_count()), 0) {}

    std::optional<Colouring> run() {
        if (!solve(0, first_colours(lists_.universe_size()))) return std::nullopt;
        Colouring out;
        out.colour_of.resize(static_cast<std::size_t>(graph_.vertex_count()));
        for (int p = 0; p < graph_.part_count(); ++p) {
            for (int v = graph_.part_begin(p); v < graph_.part_end(p); ++v) {
                out.colour_of[static_cast<std::size_t>(v)] = lowest_colour(lists_.list(v) & chosen_[static_cast<std::size_t>(p)]);
            }
        }
        return out;
    }

 private:
    bool solve(int part, ColourSet available) {
        const int parts = graph_.part_count();
        if (part == parts) return true;
        if (colour_count(available) < parts - part) return false;
        auto& memo = failed_[static_cast<std::size_t>(part)];
        if (memo.contains(available)) return false;
        // Every remaining vertex must still see an available colour.
        for (int v = graph_.part_begin(part); v < graph_.vertex_count(); ++v) {
            if ((lists_.list(v) & available) == 0) {
                memo.insert(available);
                return false;
            }
        }
        std::vector<ColourSet> sets;
        for (int v = graph_.part_begin(part); v < graph_.part_end(part); ++v) sets.push_back(lists_.list(v) & available);
        for (ColourSet cover : minimal_covers(sets)) {
            chosen_[static_cast<std::size_t>(part)] = cover;
            if (solve(part + 1, available & ~cover)) return true;
        }
        memo.insert(available);
        return false;
    }

    const MultipartiteGraph& graph_;
    const ListAssignment& lists_;
    std::vector<std::unordered_set<ColourSet>> failed_;
    std::vector<ColourSet> chosen_;
};

}  // namespace

std::optional<Colouring> find_colouring(const MultipartiteGraph& graph, const ListAssignment& lists) {
    if (lists.vertex_count() != graph.vertex_count()) {
        throw ContractError("assignment has " + std::to_string(lists.vertex_count()) + " lists but graph has " +
                            std::to_string(graph.vertex_count()) + " vertices");
    }
    return PartSearch(graph, lists).run();
}

std::string to_string(ChoosabilityStatus status) {
    switch (status) {
        case ChoosabilityStatus::Choosable: return "CHOOSABLE";
        case ChoosabilityStatus::NotChoosable: return "NOT_CHOOSABLE";
        case ChoosabilityStatus::Inconclusive: return "INCONCLUSIVE";
    }
    return "UNKNOWN";
}

namespace {

struct SeedResult {
    bool done = false;
    Completion completion = Completion::Exhaustive;
    std::uint64_t new_orbits = 0;
    std::vector<std::string> keys;  // only kept when deduplicating across seeds
    std::optional<std::string> bad_key;
    std::optional<LambdaAssignment> bad;
};

}  // namespace

Verdict is_choosable(const MultipartiteGraph& graph, const Lambda& lambda, const SearchBudget& budget,
                     const ChoosabilityOptions& options) {
    EnumerationOptions eo;
    eo.skip_private_colours = options.skip_private_colours;
    eo.max_pool_per_class = options.max_pool_per_class;
    eo.threads = options.threads;
    OrbitEnumerator enumerator(graph, lambda, eo);
    NodeBudget nodes(budget);

    Verdict verdict;
    verdict.universe_bound = enumerator.universe_bound();
    if (!enumerator.prepare(nodes)) {
        verdict.nodes = nodes.used();
        return verdict;
    }

    const bool global = enumerator.needs_global_dedupe();
    const std::size_t seeds = enumerator.seed_count();
    std::vector<SeedResult> results(seeds);
    std::atomic<std::size_t> next_seed{0};
    std::atomic<std::size_t> first_bad{SIZE_MAX};

    auto worker = [&] {
        while (true) {
            const std::size_t seed = next_seed.fetch_add(1);
            if (seed >= seeds || seed > first_bad.load()) return;
            SeedResult& r = results[seed];
            r.completion = enumerator.explore(seed, nodes, [&](const CanonicalForm& form) {
                if (seed > first_bad.load()) return false;
                ++r.new_orbits;
                if (global) r.keys.push_back(form.key);
                LambdaAssignment candidate = enumerator.materialise(form);
                if (!find_colouring(graph, candidate.lists)) {
                    r.bad_key = form.key;
                    r.bad = std::move(candidate);
                    std::size_t current = first_bad.load();
                    while (seed < current && !first_bad.compare_exchange_weak(current, seed)) {
                    }
                    return false;
                }
                return true;
            });
            r.done = true;
        }
    };

    const int threads = std::max(1, options.threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    // Merge in seed order, exactly as a sequential scan would have seen them.
    std::unordered_set<std::string> seen;
    bool truncated = false;
    for (std::size_t s = 0; s < seeds; ++s) {
        SeedResult& r = results[s];
        if (!r.done) {
            truncated = true;
            break;
        }
        if (global) {
            for (const auto& key : r.keys) {
                if (!seen.insert(key).second) continue;
                ++verdict.orbits_checked;
                if (r.bad_key && key == *r.bad_key) break;
            }
        } else {
            verdict.orbits_checked += r.new_orbits;
        }
        if (r.bad) {
            verdict.status = ChoosabilityStatus::NotChoosable;
            verdict.counterexample = std::move(r.bad);
            verdict.nodes = nodes.used();
            return verdict;
        }
        if (r.completion == Completion::Truncated) {
            truncated = true;
            break;
        }
    }
    verdict.nodes = nodes.used();
    if (truncated) {
        // A failing assignment is a certificate even when the scan was cut short.
        for (auto& r : results) {
            if (r.bad) {
                verdict.status = ChoosabilityStatus::NotChoosable;
                verdict.counterexample = std::move(r.bad);
                break;
            }
        }
        return verdict;
    }
    verdict.status = ChoosabilityStatus::Choosable;
    verdict.exhaustive = true;
    return verdict;
}

}  // namespace lchoose
