#include "lchoose/oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <set>

namespace lchoose::oracle {

std::optional<Colouring> naive_colouring(const MultipartiteGraph& graph, const ListAssignment& lists) {
    const int n = graph.vertex_count();
    std::vector<std::vector<int>> options;
    for (int v = 0; v < n; ++v) options.push_back(colours_of(lists.list(v)));
    std::vector<std::size_t> pick(static_cast<std::size_t>(n), 0);
    while (true) {
        bool proper = true;
        for (int u = 0; u < n && proper; ++u) {
            for (int v = u + 1; v < n && proper; ++v) {
                if (graph.part_of(u) != graph.part_of(v) &&
                    options[u][pick[u]] == options[v][pick[v]]) {
                    proper = false;
                }
            }
        }
        if (proper) {
            Colouring c;
            for (int v = 0; v < n; ++v) c.colour_of.push_back(options[v][pick[v]]);
            return c;
        }
        int v = 0;
        while (v < n && ++pick[v] == options[v].size()) pick[v++] = 0;
        if (v == n) return std::nullopt;
    }
}

std::optional<FourTuple> brute_reducible(const std::array<int, 4>& caps, int k_t) {
    for (int a1 = 0; a1 <= caps[0]; ++a1)
        for (int a2 = 0; a2 <= caps[1]; ++a2)
            for (int a3 = 0; a3 <= caps[2]; ++a3)
                for (int a4 = 0; a4 <= caps[3]; ++a4) {
                    const int count = a1 + a2 + a3 + a4;
                    const int weight = a1 + 2 * a2 + 3 * a3 + 4 * a4;
                    if (count == k_t && weight >= 2 * k_t + 1 && weight <= 2 * k_t + 2) {
                        return FourTuple{{a1, a2, a3, a4}};
                    }
                }
    return std::nullopt;
}

std::uint64_t count_partitions_into(int n, int k) {
    if (k == 0) return n == 0 ? 1 : 0;
    if (n < k || k < 0) return 0;
    // Either some part is 1, or subtract 1 from every part.
    return count_partitions_into(n - 1, k - 1) + count_partitions_into(n - k, k);
}

bool brute_partition_exists(const ListAssignment& lists, const Lambda& lambda) {
    const int u = lists.universe_size();
    const int q = lambda.size();
    std::vector<int> cls(static_cast<std::size_t>(u), 0);
    while (true) {
        bool ok = true;
        for (int v = 0; v < lists.vertex_count() && ok; ++v) {
            std::vector<int> have(static_cast<std::size_t>(q), 0);
            for (int c = 0; c < u; ++c) {
                if (contains(lists.list(v), c)) ++have[cls[c]];
            }
            for (int i = 0; i < q; ++i) {
                if (have[i] < lambda.part(i)) ok = false;
            }
        }
        if (ok) return true;
        int c = 0;
        while (c < u && ++cls[c] == q) cls[c++] = 0;
        if (c == u) return false;
    }
}

namespace {

// Calls fn(block_of) for every map from p items to q blocks.
void for_each_map(int p, int q, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> block(static_cast<std::size_t>(p), 0);
    while (true) {
        fn(block);
        int i = 0;
        while (i < p && ++block[i] == q) block[i++] = 0;
        if (i == p) return;
    }
}

}  // namespace

bool brute_refinement(const Lambda& finer, const Lambda& coarser) {
    bool found = false;
    for_each_map(finer.size(), coarser.size(), [&](const std::vector<int>& block) {
        std::vector<int> sums(static_cast<std::size_t>(coarser.size()), 0);
        for (int i = 0; i < finer.size(); ++i) sums[block[i]] += finer.part(i);
        for (int b = 0; b < coarser.size(); ++b) {
            if (sums[b] != coarser.part(b)) return;
        }
        found = true;
    });
    return found;
}

bool brute_lambda_leq(const Lambda& lambda, const Lambda& other) {
    if (other.size() < lambda.size()) return false;
    bool found = false;
    for_each_map(other.size(), lambda.size(), [&](const std::vector<int>& block) {
        std::vector<int> sums(static_cast<std::size_t>(lambda.size()), 0);
        for (int i = 0; i < other.size(); ++i) sums[block[i]] += other.part(i);
        std::sort(sums.begin(), sums.end());
        for (int b = 0; b < lambda.size(); ++b) {
            if (sums[b] == 0 || sums[b] < lambda.part(b)) return;
        }
        found = true;
    });
    return found;
}

namespace {

std::vector<std::vector<int>> part_preserving_permutations(const MultipartiteGraph& graph) {
    const int n = graph.vertex_count();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u) {
            for (int v = u + 1; v < n && ok; ++v) {
                if ((graph.part_of(u) == graph.part_of(v)) != (graph.part_of(perm[u]) == graph.part_of(perm[v]))) {
                    ok = false;
                }
            }
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Per class: sorted vertex-set columns; classes sorted by (quota, columns).
std::vector<std::uint64_t> key_under(const std::vector<int>& perm, const std::vector<int>& quotas,
                                     const std::vector<std::vector<std::uint64_t>>& columns) {
    std::vector<std::vector<std::uint64_t>> classes;
    for (std::size_t i = 0; i < columns.size(); ++i) {
        std::vector<std::uint64_t> cls{static_cast<std::uint64_t>(quotas[i])};
        std::vector<std::uint64_t> mapped;
        for (std::uint64_t col : columns[i]) {
            std::uint64_t m = 0;
            for (std::size_t v = 0; v < perm.size(); ++v) {
                if ((col >> v) & 1U) m |= std::uint64_t{1} << perm[v];
            }
            mapped.push_back(m);
        }
        std::sort(mapped.begin(), mapped.end());
        cls.push_back(mapped.size());
        cls.insert(cls.end(), mapped.begin(), mapped.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end());
    std::vector<std::uint64_t> flat;
    for (const auto& c : classes) flat.insert(flat.end(), c.begin(), c.end());
    return flat;
}

std::vector<std::uint64_t> min_key(const std::vector<std::vector<int>>& perms, const std::vector<int>& quotas,
                                   const std::vector<std::vector<std::uint64_t>>& columns) {
    std::vector<std::uint64_t> best;
    for (const auto& perm : perms) {
        auto k = key_under(perm, quotas, columns);
        if (best.empty() || k < best) best = std::move(k);
    }
    return best;
}

}  // namespace

std::vector<std::uint64_t> brute_orbit_key(const MultipartiteGraph& graph, const ListAssignment& lists,
                                           const ColourPartition& partition) {
    std::vector<int> quotas;
    std::vector<std::vector<std::uint64_t>> columns(static_cast<std::size_t>(partition.class_count()));
    for (int i = 0; i < partition.class_count(); ++i) quotas.push_back(partition.quota(i));
    for (int c = 0; c < lists.universe_size(); ++c) {
        std::uint64_t col = 0;
        for (int v = 0; v < lists.vertex_count(); ++v) {
            if (contains(lists.list(v), c)) col |= std::uint64_t{1} << v;
        }
        columns[partition.class_of(c)].push_back(col);
    }
    return min_key(part_preserving_permutations(graph), quotas, columns);
}

std::uint64_t brute_orbit_count(const MultipartiteGraph& graph, const Lambda& lambda, bool skip_private) {
    const int n = graph.vertex_count();
    const auto perms = part_preserving_permutations(graph);
    std::vector<int> quotas = lambda.parts();
    const int q = lambda.size();

    // Subsets of each class pool with exactly k_i colours.
    std::vector<std::vector<std::uint64_t>> choices(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) {
        const int pool = n * quotas[i];
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << pool); ++s) {
            if (std::popcount(s) == quotas[i]) choices[i].push_back(s);
        }
    }
    // pick[i * n + v] indexes choices[i] for vertex v.
    std::vector<std::size_t> pick(static_cast<std::size_t>(q * n), 0);
    std::set<std::vector<std::uint64_t>> seen;
    while (true) {
        std::vector<std::vector<std::uint64_t>> columns(static_cast<std::size_t>(q));
        bool keep = true;
        for (int i = 0; i < q && keep; ++i) {
            const int pool = n * quotas[i];
            for (int c = 0; c < pool; ++c) {
                std::uint64_t col = 0;
                for (int v = 0; v < n; ++v) {
                    if ((choices[i][pick[i * n + v]] >> c) & 1U) col |= std::uint64_t{1} << v;
                }
                if (col == 0) continue;
                if (skip_private && n >= 2 && std::popcount(col) == 1) keep = false;
                columns[i].push_back(col);
            }
        }
        if (keep) seen.insert(min_key(perms, quotas, columns));
        std::size_t j = 0;
        while (j < pick.size() && ++pick[j] == choices[j / n].size()) pick[j++] = 0;
        if (j == pick.size()) break;
    }
    return seen.size();
}

}  // namespace lchoose::oracle
