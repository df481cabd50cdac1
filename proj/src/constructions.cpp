#include "lchoose/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "lchoose/canonical.hpp"
#include "lchoose/error.hpp"
#include "lchoose/solver.hpp"

namespace lchoose {

namespace {

// Positions (1-based) inside S_i and T_i picked by A_1..A_7 and B_1..B_7.
constexpr std::array<std::array<int, 3>, 7> kAPattern{{
    {1, 3, 5}, {1, 3, 6}, {1, 2, 4}, {2, 3, 4}, {2, 5, 6}, {1, 2, 3}, {4, 5, 6},
}};
constexpr std::array<std::array<int, 2>, 7> kBPattern{{
    {2, 3}, {2, 4}, {1, 2}, {1, 3}, {1, 4}, {1, 2}, {3, 4},
}};

}  // namespace

int Lemma1Instance::u(int i, int j) const {
    if (i < 1 || i > a + 1 || j < 1 || j > 5) throw ContractError("u_{i,j} index out of range");
    return 5 * (i - 1) + (j - 1);
}

int Lemma1Instance::v(int i, int j) const {
    if (i < 1 || i > k - a - 1 || j < 1 || j > 2) throw ContractError("v_{i,j} index out of range");
    return 5 * (a + 1) + 2 * (i - 1) + (j - 1);
}

std::vector<int> Lemma1Instance::transversal(int j) const {
    std::vector<int> out;
    for (int i = 1; i <= k - a - 1; ++i) out.push_back(v(i, j));
    return out;
}

Lemma1Instance build_lemma1(int a, int b, int c, bool allow_empty_e) {
    if (a < 0 || b < 0 || c < 1) throw ContractError("lemma gadget needs a >= 0, b >= 0, c >= 1");
    if (a == 0 && !allow_empty_e) throw ContractError("a = 0 is only built with the empty-E extension enabled");
    const int k = a + 2 * b + 3 * c;
    const int universe = a + 6 * c + 4 * b;
    if (universe > kMaxColours) throw ContractError("gadget needs more than 64 colours");

    std::vector<int> sizes(static_cast<std::size_t>(a + 1), 5);
    sizes.insert(sizes.end(), static_cast<std::size_t>(k - a - 1), 2);
    MultipartiteGraph graph(sizes);
    if (graph.vertex_count() > kMaxVertices) throw ContractError("gadget needs more than 64 vertices");

    std::vector<int> parts(static_cast<std::size_t>(a), 1);
    parts.insert(parts.end(), static_cast<std::size_t>(b), 2);
    parts.insert(parts.end(), static_cast<std::size_t>(c), 3);
    Lambda lambda(parts);

    std::vector<int> class_of(static_cast<std::size_t>(universe));
    ColourSet e_set = 0;
    for (int e = 0; e < a; ++e) {
        e_set |= colour_bit(e);
        class_of[static_cast<std::size_t>(e)] = e;
    }
    std::vector<ColourSet> s_sets;
    auto s_colour = [&](int i, int pos) { return a + 6 * (i - 1) + (pos - 1); };
    for (int i = 1; i <= c; ++i) {
        ColourSet s = 0;
        for (int pos = 1; pos <= 6; ++pos) {
            s |= colour_bit(s_colour(i, pos));
            class_of[static_cast<std::size_t>(s_colour(i, pos))] = a + b + (i - 1);
        }
        s_sets.push_back(s);
    }
    std::vector<ColourSet> t_sets;
    auto t_colour = [&](int i, int pos) { return a + 6 * c + 4 * (i - 1) + (pos - 1); };
    for (int i = 1; i <= b; ++i) {
        ColourSet t = 0;
        for (int pos = 1; pos <= 4; ++pos) {
            t |= colour_bit(t_colour(i, pos));
            class_of[static_cast<std::size_t>(t_colour(i, pos))] = a + (i - 1);
        }
        t_sets.push_back(t);
    }

    std::array<ColourSet, 7> a_sets{};
    std::array<ColourSet, 7> b_sets{};
    for (std::size_t j = 0; j < 7; ++j) {
        for (int i = 1; i <= c; ++i) {
            for (int pos : kAPattern[j]) a_sets[j] |= colour_bit(s_colour(i, pos));
        }
        for (int i = 1; i <= b; ++i) {
            for (int pos : kBPattern[j]) b_sets[j] |= colour_bit(t_colour(i, pos));
        }
    }

    std::vector<ColourSet> lists;
    for (int i = 0; i < a + 1; ++i) {
        for (std::size_t j = 0; j < 5; ++j) lists.push_back(a_sets[j] | b_sets[j] | e_set);
    }
    for (int i = 0; i < k - a - 1; ++i) {
        for (std::size_t j = 5; j < 7; ++j) lists.push_back(a_sets[j] | b_sets[j] | e_set);
    }

    ColourPartition partition(lambda, class_of);
    return Lemma1Instance{a,
                          b,
                          c,
                          k,
                          std::move(graph),
                          std::move(lambda),
                          ListAssignment(universe, std::move(lists)),
                          std::move(partition),
                          e_set,
                          std::move(s_sets),
                          std::move(t_sets),
                          a_sets,
                          b_sets};
}

Lemma1Report verify_lemma1(const Lemma1Instance& inst) {
    Lemma1Report report;
    auto fail = [&](std::string what) { report.violations.push_back(std::move(what)); };
    const int n = inst.graph.vertex_count();

    report.cardinalities_ok = true;
    auto card = [&](bool ok, const std::string& what) {
        if (!ok) {
            report.cardinalities_ok = false;
            fail(what);
        }
    };
    card(n == 2 * inst.k + 3 * inst.a + 3, "|V(G)| = 2k+3a+3");
    card(inst.lists.universe_size() == 2 * inst.k - inst.a, "|C| = 2k-a");
    card(inst.lists.vertex_count() == n, "one list per vertex");
    card(inst.graph.part_count() == inst.k, "G has k parts");
    for (std::size_t j = 0; j < 7; ++j) {
        card(colour_count(inst.a_sets[j]) == 3 * inst.c, "|A_" + std::to_string(j + 1) + "| = 3c");
        card(colour_count(inst.b_sets[j]) == 2 * inst.b, "|B_" + std::to_string(j + 1) + "| = 2b");
    }
    if (!report.cardinalities_ok) return report;

    report.lambda_valid = inst.partition.lambda() == inst.lambda && inst.partition.witnesses(inst.lists);
    if (!report.lambda_valid) fail("canonical partition witnesses L as a lambda-list assignment");

    report.quotas_ok = true;
    for (int v = 0; v < n; ++v) {
        const ColourSet l = inst.lists.list(v);
        for (std::size_t i = 0; i < inst.s_sets.size(); ++i) {
            if (colour_count(l & inst.s_sets[i]) != 3) {
                report.quotas_ok = false;
                fail("|L(v) & S_" + std::to_string(i + 1) + "| = 3 at vertex " + std::to_string(v));
            }
        }
        for (std::size_t i = 0; i < inst.t_sets.size(); ++i) {
            if (colour_count(l & inst.t_sets[i]) != 2) {
                report.quotas_ok = false;
                fail("|L(v) & T_" + std::to_string(i + 1) + "| = 2 at vertex " + std::to_string(v));
            }
        }
        for_each_colour(inst.e_set, [&](int e) {
            if (!contains(l, e)) {
                report.quotas_ok = false;
                fail("|L(v) & {" + std::to_string(e) + "}| = 1 at vertex " + std::to_string(v));
            }
        });
    }

    report.colourable = find_colouring(inst.graph, inst.lists).has_value();
    if (report.colourable) fail("G is not L-colourable");
    return report;
}

std::pair<MultipartiteGraph, MultipartiteGraph> build_exception_graphs(int k) {
    if (k < 2 || k % 2 != 0) throw ContractError("exception graphs exist for even k >= 2 only");
    std::vector<int> first{4};
    first.insert(first.end(), static_cast<std::size_t>(k - 1), 2);
    std::vector<int> second(static_cast<std::size_t>(k / 2 + 1), 3);
    second.insert(second.end(), static_cast<std::size_t>(k / 2 - 1), 1);
    return {MultipartiteGraph(first), MultipartiteGraph(second)};
}

K42Assignment build_bad_k42(int k, K42Sizes sizes) {
    if (k < 2 || k % 2 != 0) throw ContractError("K_{4,2*(k-1)} structure needs even k >= 2");
    if (sizes.a1 < 0 || sizes.a3 < 0 || sizes.b1 < 0 || 2 * (sizes.a1 + sizes.a3) != k || 2 * sizes.b1 != k) {
        throw ContractError("sizes must satisfy 2(|A_1|+|A_3|) = k and 2|B_1| = k");
    }
    int next = 0;
    auto block = [&](int size) {
        ColourSet s = 0;
        for (int i = 0; i < size; ++i) s |= colour_bit(next++);
        return s;
    };
    const ColourSet a1 = block(sizes.a1);
    const ColourSet a2 = block(sizes.a1);
    const ColourSet a3 = block(sizes.a3);
    const ColourSet a4 = block(sizes.a3);
    const ColourSet b1 = block(sizes.b1);
    const ColourSet b2 = block(sizes.b1);
    const ColourSet all_a = a1 | a2 | a3 | a4;
    const ColourSet all_b = b1 | b2;

    std::vector<ColourSet> lists{a1 | a3 | b1, a1 | a4 | b2, a2 | a4 | b1, a2 | a3 | b2};
    for (int i = 2; i <= k; ++i) {
        lists.push_back(all_a);
        lists.push_back(all_b);
    }
    auto graphs = build_exception_graphs(k);
    return K42Assignment{k, sizes, std::move(graphs.first), ListAssignment(2 * k, std::move(lists)),
                         {a1, a2, a3, a4}, {b1, b2}};
}

std::vector<K42Sizes> k42_size_triples(int k) {
    if (k < 2 || k % 2 != 0) throw ContractError("K_{4,2*(k-1)} structure needs even k >= 2");
    std::vector<K42Sizes> out;
    for (int a1 = k / 2; a1 >= 0; --a1) out.push_back({a1, k / 2 - a1, k / 2});
    return out;
}

MultipartiteGraph ThreesCandidate::graph() const { return build_exception_graphs(k).second; }

ListAssignment ThreesCandidate::lists() const {
    std::vector<ColourSet> out;
    for (const auto& t : triple_lists) out.insert(out.end(), t.begin(), t.end());
    out.insert(out.end(), singleton_lists.begin(), singleton_lists.end());
    return ListAssignment(3 * k / 2, std::move(out));
}

void ThreesCandidate::validate() const {
    if (k < 2 || k % 2 != 0) throw ContractError("k must be even and >= 2");
    if (static_cast<int>(triple_lists.size()) != k / 2 + 1) throw ContractError("need k/2+1 parts of size 3");
    if (static_cast<int>(singleton_lists.size()) != k / 2 - 1) throw ContractError("need k/2-1 parts of size 1");
    const ColourSet universe = first_colours(3 * k / 2);
    for (std::size_t p = 0; p < triple_lists.size(); ++p) {
        const auto& t = triple_lists[p];
        for (int c = 0; c < 3 * k / 2; ++c) {
            const int hits = contains(t[0], c) + contains(t[1], c) + contains(t[2], c);
            if (hits != 2) {
                throw ContractError("colour " + std::to_string(c) + " lies in " + std::to_string(hits) +
                                    " lists of size-3 part " + std::to_string(p) + ", expected two");
            }
        }
        for (ColourSet l : t) {
            if ((l & ~universe) != 0) throw ContractError("list uses a colour outside |C| = 3k/2");
            if (colour_count(l) != k) throw ContractError("list of a size-3 part does not have size k");
        }
    }
    for (ColourSet l : singleton_lists) {
        if ((l & ~universe) != 0 || colour_count(l) != k) throw ContractError("singleton list is not a k-subset of C");
    }
}

namespace {

// Colour c with code 0 lies in lists {1,2}, code 1 in {1,3}, code 2 in {2,3}.
std::array<ColourSet, 3> triple_from_codes(const std::vector<int>& codes) {
    std::array<ColourSet, 3> t{};
    for (std::size_t c = 0; c < codes.size(); ++c) {
        const ColourSet bit = colour_bit(static_cast<int>(c));
        switch (codes[c]) {
            case 0: t[0] |= bit; t[1] |= bit; break;
            case 1: t[0] |= bit; t[2] |= bit; break;
            default: t[1] |= bit; t[2] |= bit; break;
        }
    }
    return t;
}

std::vector<std::array<ColourSet, 3>> all_triples(int k) {
    const int universe = 3 * k / 2;
    std::vector<std::array<ColourSet, 3>> out;
    std::vector<int> codes;
    std::array<int, 3> left{k / 2, k / 2, k / 2};
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(codes.size()) == universe) {
            out.push_back(triple_from_codes(codes));
            return;
        }
        for (int code = 0; code < 3; ++code) {
            if (left[static_cast<std::size_t>(code)] == 0) continue;
            --left[static_cast<std::size_t>(code)];
            codes.push_back(code);
            self(self);
            codes.pop_back();
            ++left[static_cast<std::size_t>(code)];
        }
    };
    rec(rec);
    return out;
}

std::vector<ColourSet> all_subsets(int universe, int size) {
    std::vector<ColourSet> out;
    for (ColourSet s = 0; s < colour_bit(universe); ++s) {
        if (colour_count(s) == size) out.push_back(s);
    }
    return out;
}

}  // namespace

ThreesSummary enumerate_bad_threes(int k, const SearchBudget& budget,
                                   const std::function<bool(const ThreesResult&)>& visit) {
    if (k < 2 || k % 2 != 0) throw ContractError("k must be even and >= 2");
    if (3 * k / 2 > 20) throw ContractError("threes enumeration is limited to k <= 12");
    const int triples = k / 2 + 1;
    const int singles = k / 2 - 1;
    const auto triple_options = all_triples(k);
    const auto single_options = all_subsets(3 * k / 2, k);
    const MultipartiteGraph graph = build_exception_graphs(k).second;
    const Lambda lambda({k});
    NodeBudget nodes(budget);

    std::vector<int> codes;
    for (int code = 0; code < 3; ++code) codes.insert(codes.end(), static_cast<std::size_t>(k / 2), code);

    ThreesCandidate cand;
    cand.k = k;
    cand.triple_lists.push_back(triple_from_codes(codes));
    ThreesSummary summary;
    std::unordered_set<std::string> seen;
    bool stopped = false;

    // Parts after the first are interchangeable, so option indices are nondecreasing.
    auto rec_singles = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(cand.singleton_lists.size()) == singles) {
            if (!nodes.charge()) return false;
            const ListAssignment lists = cand.lists();
            const ColourPartition partition(lambda, std::vector<int>(static_cast<std::size_t>(3 * k / 2), 0));
            if (!seen.insert(canonical_key(lists, graph, partition)).second) return true;
            ThreesResult r{cand, !find_colouring(graph, lists).has_value()};
            ++summary.candidates;
            if (r.bad) ++summary.bad;
            if (!visit(r)) {
                stopped = true;
                return false;
            }
            return true;
        }
        for (std::size_t i = from; i < single_options.size(); ++i) {
            cand.singleton_lists.push_back(single_options[i]);
            const bool go = self(self, i);
            cand.singleton_lists.pop_back();
            if (!go) return false;
        }
        return true;
    };
    auto rec_triples = [&](auto&& self, std::size_t from) -> bool {
        if (static_cast<int>(cand.triple_lists.size()) == triples) return rec_singles(rec_singles, 0);
        for (std::size_t i = from; i < triple_options.size(); ++i) {
            cand.triple_lists.push_back(triple_options[i]);
            const bool go = self(self, i);
            cand.triple_lists.pop_back();
            if (!go) return false;
        }
        return true;
    };
    rec_triples(rec_triples, 0);
    if (stopped) {
        summary.completion = Completion::Stopped;
    } else if (nodes.exhausted()) {
        summary.completion = Completion::Truncated;
    }
    return summary;
}

ThreesCandidate random_threes_candidate(int k, std::mt19937_64& rng) {
    if (k < 2 || k % 2 != 0) throw ContractError("k must be even and >= 2");
    ThreesCandidate cand;
    cand.k = k;
    std::vector<int> codes;
    for (int code = 0; code < 3; ++code) codes.insert(codes.end(), static_cast<std::size_t>(k / 2), code);
    for (int p = 0; p < k / 2 + 1; ++p) {
        std::shuffle(codes.begin(), codes.end(), rng);
        cand.triple_lists.push_back(triple_from_codes(codes));
    }
    std::vector<int> colours(static_cast<std::size_t>(3 * k / 2));
    std::iota(colours.begin(), colours.end(), 0);
    for (int p = 0; p < k / 2 - 1; ++p) {
        std::shuffle(colours.begin(), colours.end(), rng);
        ColourSet s = 0;
        for (int i = 0; i < k; ++i) s |= colour_bit(colours[static_cast<std::size_t>(i)]);
        cand.singleton_lists.push_back(s);
    }
    return cand;
}

std::string to_string(BadStructure family) {
    return family == BadStructure::K42 ? "k42" : "threes";
}

namespace {

bool matches_k42(const MultipartiteGraph& graph, const ListAssignment& lists) {
    const int k = graph.part_count();
    if (k < 2 || k % 2 != 0 || graph.part_size(0) != 4) return false;
    for (int p = 1; p < k; ++p) {
        if (graph.part_size(p) != 2) return false;
    }
    const ColourSet all = first_colours(lists.universe_size());
    const ColourSet a = lists.list(4);
    const ColourSet b = lists.list(5);
    if ((a & b) != 0 || (a | b) != all || colour_count(a) != k || colour_count(b) != k) return false;
    for (int p = 1; p < k; ++p) {
        const ColourSet x = lists.list(graph.part_begin(p));
        const ColourSet y = lists.list(graph.part_begin(p) + 1);
        if (!((x == a && y == b) || (x == b && y == a))) return false;
    }
    std::array<int, 4> order{0, 1, 2, 3};
    do {
        const ColourSet lu = lists.list(order[0]);
        const ColourSet lv = lists.list(order[1]);
        const ColourSet lx = lists.list(order[2]);
        const ColourSet ly = lists.list(order[3]);
        const ColourSet a1 = lu & lv & a;
        const ColourSet a2 = lx & ly & a;
        const ColourSet a3 = lu & ly & a;
        const ColourSet a4 = lv & lx & a;
        const ColourSet b1 = lu & lx & b;
        const ColourSet b2 = lv & ly & b;
        const bool disjoint = (a1 & a2) == 0 && (a1 & a3) == 0 && (a1 & a4) == 0 && (a2 & a3) == 0 &&
                              (a2 & a4) == 0 && (a3 & a4) == 0 && (b1 & b2) == 0;
        if (disjoint && (a1 | a2 | a3 | a4) == a && (b1 | b2) == b && colour_count(a1) == colour_count(a2) &&
            colour_count(a3) == colour_count(a4) && colour_count(b1) == colour_count(b2) && lu == (a1 | a3 | b1) &&
            lv == (a1 | a4 | b2) && lx == (a2 | a4 | b1) && ly == (a2 | a3 | b2)) {
            return true;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

bool matches_threes(const MultipartiteGraph& graph, const ListAssignment& lists) {
    const int k = graph.part_count();
    if (k < 2 || k % 2 != 0) return false;
    if (graph != build_exception_graphs(k).second) return false;
    if (lists.universe_size() != 3 * k / 2) return false;
    for (ColourSet l : lists.lists()) {
        if (colour_count(l) != k) return false;
    }
    for (int p = 0; p < k / 2 + 1; ++p) {
        const int v = graph.part_begin(p);
        for (int c = 0; c < lists.universe_size(); ++c) {
            if (contains(lists.list(v), c) + contains(lists.list(v + 1), c) + contains(lists.list(v + 2), c) != 2) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::optional<BadStructure> recognise_bad_structure(const MultipartiteGraph& graph, const ListAssignment& lists) {
    if (lists.vertex_count() != graph.vertex_count()) return std::nullopt;
    if (matches_k42(graph, lists)) return BadStructure::K42;
    if (matches_threes(graph, lists)) return BadStructure::Threes;
    return std::nullopt;
}

bool parity_obstruction_check(const MultipartiteGraph& graph, const ListAssignment& lists, const Lambda& lambda,
                              bool confirm_by_search) {
    if (!recognise_bad_structure(graph, lists)) {
        throw ContractError("assignment is not one of the structured bad families");
    }
    const bool parity_applies = lambda.sum() == graph.part_count() && lambda.odd_count() > 0;
    if (parity_applies && !confirm_by_search) return true;
    const bool no_partition = !find_lambda_partition(lists, lambda).has_value();
    if (parity_applies && !no_partition) {
        throw std::logic_error("partition search found a witness where the parity argument rules one out");
    }
    return no_partition;
}

}  // namespace lchoose
