#include "lchoose/lowerbound.hpp"

#include "lchoose/error.hpp"

namespace lchoose {

std::string FourTuple::to_string() const {
    return "(" + std::to_string(a[0]) + "," + std::to_string(a[1]) + "," + std::to_string(a[2]) + "," +
           std::to_string(a[3]) + ")";
}

bool is_reducible(const FourTuple& t, const std::array<int, 4>& caps, int k_t) {
    for (std::size_t i = 0; i < 4; ++i) {
        if (t.a[i] < 0 || t.a[i] > caps[i]) return false;
    }
    const int w = t.weight();
    return t.count() == k_t && w >= 2 * k_t + 1 && w <= 2 * k_t + 2;
}

std::optional<FourTuple> find_reducible_4tuple(const std::array<int, 4>& caps, int k_t) {
    if (k_t < 1) throw ContractError("k_t must be at least 1");
    for (int c : caps) {
        if (c < 0) throw ContractError("histogram caps must be nonnegative");
    }
    // a_4 is forced by the count, so three loops suffice.
    for (int a1 = 0; a1 <= std::min(caps[0], k_t); ++a1) {
        for (int a2 = 0; a2 <= std::min(caps[1], k_t - a1); ++a2) {
            for (int a3 = 0; a3 <= std::min(caps[2], k_t - a1 - a2); ++a3) {
                const FourTuple t{{a1, a2, a3, k_t - a1 - a2 - a3}};
                if (is_reducible(t, caps, k_t)) return t;
            }
        }
    }
    return std::nullopt;
}

std::array<int, 4> small_part_caps(const MultipartiteGraph& graph) {
    std::array<int, 4> caps{};
    for (int s : graph.part_sizes()) {
        if (s >= 1 && s <= 4) ++caps[static_cast<std::size_t>(s - 1)];
    }
    return caps;
}

std::pair<MultipartiteGraph, MultipartiteGraph> subgraph_from_tuple(const MultipartiteGraph& graph, const FourTuple& t) {
    const auto caps = small_part_caps(graph);
    for (std::size_t i = 0; i < 4; ++i) {
        if (t.a[i] < 0) throw ContractError("tuple entries must be nonnegative");
        if (t.a[i] > caps[i]) {
            throw ContractError("G has " + std::to_string(caps[i]) + " parts of size " + std::to_string(i + 1) +
                                ", tuple asks for " + std::to_string(t.a[i]));
        }
    }
    if (t.count() == 0) throw ContractError("tuple selects no parts");
    std::array<int, 4> left = t.a;
    std::vector<int> x;
    std::vector<int> rest;
    for (int s : graph.part_sizes()) {
        if (s <= 4 && left[static_cast<std::size_t>(s - 1)] > 0) {
            --left[static_cast<std::size_t>(s - 1)];
            x.push_back(s);
        } else {
            rest.push_back(s);
        }
    }
    if (rest.empty()) throw ContractError("tuple uses every part of G; nothing remains");
    return {MultipartiteGraph(x), MultipartiteGraph(rest)};
}

namespace {

int floor_half(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
int ceil_half(int v) { return -floor_half(-v); }

RecipeTuple make_recipe(std::string name, int residue, FourTuple t, int claimed, const std::array<int, 4>& caps,
                        int k_t) {
    RecipeTuple r;
    r.name = std::move(name);
    r.residue = residue;
    r.tuple = t;
    r.claimed_weight = claimed;
    r.nonnegative = t.a[0] >= 0 && t.a[1] >= 0 && t.a[2] >= 0 && t.a[3] >= 0;
    r.within_caps = r.nonnegative;
    for (std::size_t i = 0; i < 4; ++i) {
        if (caps[i] >= 0 && t.a[i] > caps[i]) r.within_caps = false;
    }
    const int w = t.weight();
    r.sums_ok = t.count() == k_t && w >= 2 * k_t + 1 && w <= 2 * k_t + 2 && w == claimed;
    return r;
}

}  // namespace

std::vector<RecipeTuple> case_recipe_tuples(int k_t, int i2, int i3, int i4, RecipeCase which, int i1) {
    if (k_t < 3 || k_t % 2 == 0) throw ContractError("k_t must be odd and at least 3");
    if (i2 < 0 || i2 > k_t - 2) throw ContractError("|I_2| must lie in 0..k_t-2");
    if (i3 < 0 || i4 < 0) throw ContractError("|I_3| and |I_4| must be nonnegative");
    // i1 < 0 means |I_1| is not constrained.
    const std::array<int, 4> caps{i1, i2, i3, i4};
    std::vector<RecipeTuple> out;
    const int twice_b = k_t - i2 - 1;  // 2 b_1 = 2 b_3
    const int lo = floor_half(twice_b);
    const int hi = ceil_half(twice_b);

    if (which == RecipeCase::Two) {
        const int claimed = twice_b % 2 != 0 ? 2 * k_t + 2 : 2 * k_t + 1;
        out.push_back(make_recipe("b3", -1, FourTuple{{lo, i2, hi + 1, 0}}, claimed, caps, k_t));
        return out;
    }

    const int claimed_b1 = twice_b % 2 == 0 ? 2 * k_t + 2 : 2 * k_t + 1;
    out.push_back(make_recipe("b1", -1, FourTuple{{hi, i2, lo, 1}}, claimed_b1, caps, k_t));
    if (i3 >= lo) return out;

    // 3 b_2 = k_t - |I_2| - 2|I_3| - 1; its residue selects the recipe.
    const int n = k_t - i2 - 2 * i3 - 1;
    const int r = n % 3;
    const int b2_floor = n / 3;
    const int b2_ceil = (n + 2) / 3;
    switch (r) {
        case 0:
            out.push_back(make_recipe("b2-r0", 0, FourTuple{{2 * b2_floor + i3, i2, i3, b2_floor + 1}},
                                      2 * k_t + 2, caps, k_t));
            break;
        case 1:
            out.push_back(make_recipe("b2-r1", 1, FourTuple{{2 * b2_ceil + i3 - 1, i2, i3, b2_floor + 1}},
                                      2 * k_t + 1, caps, k_t));
            break;
        default:
            out.push_back(make_recipe("b2-r2", 2, FourTuple{{2 * b2_ceil + i3, i2 - 1, i3, b2_ceil + 1}},
                                      2 * k_t + 2, caps, k_t));
            break;
    }
    return out;
}

}  // namespace lchoose
