#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lchoose/graph.hpp"

namespace lchoose {

/// Part counts a_1..a_4 (a_i parts of size i) chosen from a graph whose
/// size histogram caps them at |I_1|..|I_4|.
struct FourTuple {
    std::array<int, 4> a{};

    int count() const { return a[0] + a[1] + a[2] + a[3]; }
    int weight() const { return a[0] + 2 * a[1] + 3 * a[2] + 4 * a[3]; }
    std::string to_string() const;

    friend bool operator==(const FourTuple&, const FourTuple&) = default;
    friend auto operator<=>(const FourTuple&, const FourTuple&) = default;
};

/// 0 <= a_i <= caps_i, sum a_i = k_t and 2k_t+1 <= sum i*a_i <= 2k_t+2.
bool is_reducible(const FourTuple& t, const std::array<int, 4>& caps, int k_t);

/// Lexicographically smallest reducible tuple, if any. Throws ContractError
/// for negative caps or k_t < 1.
std::optional<FourTuple> find_reducible_4tuple(const std::array<int, 4>& caps, int k_t);

/// |I_1|..|I_4| of G.
std::array<int, 4> small_part_caps(const MultipartiteGraph& graph);

/// Splits off a_i parts of size i (the first ones in G's order) as X and
/// returns (X, rest). Throws ContractError if G has too few parts of some
/// size or if nothing would remain.
std::pair<MultipartiteGraph, MultipartiteGraph> subgraph_from_tuple(const MultipartiteGraph& graph, const FourTuple& t);

enum class RecipeCase { One = 1, Two = 2 };

struct RecipeTuple {
    /// Which construction produced it: "b1", "b2-r0", "b2-r1", "b2-r2", "b3".
    std::string name;
    /// Value of k_t - |I_2| - 2|I_3| - 1 mod 3 for the b2 recipes, else -1.
    int residue = -1;
    FourTuple tuple;
    /// All entries >= 0.
    bool nonnegative = false;
    /// a_i <= |I_i| for the supplied histogram.
    bool within_caps = false;
    /// sum a_i = k_t and the weight lies in {2k_t+1, 2k_t+2}.
    bool sums_ok = false;
    /// The weight the construction claims (2k_t+1 or 2k_t+2).
    int claimed_weight = 0;
};

/// The tuples the lower-bound argument builds in Case 1 (b_1 and, when
/// |I_3| < floor(b_1), the b_2 recipe selected by the residue) or Case 2
/// (b_3). Nothing is filtered: each tuple carries flags saying which of the
/// conditions it meets. Throws ContractError unless k_t is odd and >= 3,
/// 0 <= i2 <= k_t - 2, i3 >= 0 and i4 >= 0.
std::vector<RecipeTuple> case_recipe_tuples(int k_t, int i2, int i3, int i4, RecipeCase which, int i1 = -1);

}  // namespace lchoose
