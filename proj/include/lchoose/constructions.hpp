#pragma once

#include <array>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lchoose/assignment.hpp"
#include "lchoose/enumerate.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/lambda.hpp"

namespace lchoose {

/// The upper-bound gadget for lambda = {1*a, 2*b, 3*c}, k = a + 2b + 3c.
///
/// G = K_{5*(a+1), 2*(k-a-1)}. Colours are laid out as E (a singletons), then
/// S_1..S_c (six each), then T_1..T_b (four each). A_1..A_7 take three colours
/// of every S_i and B_1..B_7 two colours of every T_i; vertex j of a size-5
/// part gets A_j | B_j | E and vertex j of a size-2 part gets
/// A_{j+5} | B_{j+5} | E.
struct Lemma1Instance {
    int a = 0;
    int b = 0;
    int c = 0;
    int k = 0;
    MultipartiteGraph graph;
    Lambda lambda;
    ListAssignment lists;
    /// Classes: one per colour of E (quota 1), one per T_i (quota 2), one per S_i (quota 3).
    ColourPartition partition;
    ColourSet e_set = 0;
    std::vector<ColourSet> s_sets;
    std::vector<ColourSet> t_sets;
    std::array<ColourSet, 7> a_sets{};
    std::array<ColourSet, 7> b_sets{};

    /// Vertex u_{i,j}, 1 <= i <= a+1, 1 <= j <= 5.
    int u(int i, int j) const;
    /// Vertex v_{i,j}, 1 <= i <= k-a-1, 1 <= j <= 2.
    int v(int i, int j) const;
    /// X_j = {v_{1,j}, ..., v_{k-a-1,j}}, a clique of G.
    std::vector<int> transversal(int j) const;
};

/// Throws ContractError unless a >= 1, b >= 0, c >= 1. With allow_empty_e the
/// degenerate a = 0 layout is built as well.
Lemma1Instance build_lemma1(int a, int b, int c, bool allow_empty_e = false);

struct Lemma1Report {
    bool cardinalities_ok = false;
    bool lambda_valid = false;
    bool quotas_ok = false;
    bool colourable = true;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
};

/// Checks |V| = 2k+3a+3 and |C| = 2k-a, that the stored partition witnesses
/// the lists, the exact per-class quotas, and that the solver finds no
/// colouring. Each failed check adds a violation naming it.
Lemma1Report verify_lemma1(const Lemma1Instance& instance);

/// K_{4, 2*(k-1)} and K_{3*(k/2+1), 1*(k/2-1)}. Throws for odd k or k < 2.
std::pair<MultipartiteGraph, MultipartiteGraph> build_exception_graphs(int k);

struct K42Sizes {
    int a1 = 0;  // |A_1| = |A_2|
    int a3 = 0;  // |A_3| = |A_4|
    int b1 = 0;  // |B_1| = |B_2|

    friend bool operator==(const K42Sizes&, const K42Sizes&) = default;
};

/// The structured k-assignment of K_{4,2*(k-1)}. P_1 = {u_1, v_1, x_1, y_1} is
/// vertices 0..3 with lists A1|A3|B1, A1|A4|B2, A2|A4|B1, A2|A3|B2; every
/// other part {u_i, v_i} gets A and B. Colours: A_1, A_2, A_3, A_4, B_1, B_2
/// in that order.
struct K42Assignment {
    int k = 0;
    K42Sizes sizes;
    MultipartiteGraph graph;
    ListAssignment lists;
    std::array<ColourSet, 4> a_parts{};
    std::array<ColourSet, 2> b_parts{};
};

/// Throws ContractError unless 2(a1 + a3) = k, 2 b1 = k and all sizes >= 0.
K42Assignment build_bad_k42(int k, K42Sizes sizes);

/// Every valid size triple for k, a1 descending.
std::vector<K42Sizes> k42_size_triples(int k);

/// A candidate bad k-assignment of K_{3*(k/2+1), 1*(k/2-1)} over 3k/2 colours:
/// in every size-3 part each colour lies in exactly two of the three lists.
/// The singleton parts carry arbitrary k-subsets.
struct ThreesCandidate {
    int k = 0;
    std::vector<std::array<ColourSet, 3>> triple_lists;
    std::vector<ColourSet> singleton_lists;

    MultipartiteGraph graph() const;
    ListAssignment lists() const;
    /// Throws ContractError naming the first violated condition.
    void validate() const;
};

struct ThreesResult {
    ThreesCandidate candidate;
    bool bad = false;
};

struct ThreesSummary {
    Completion completion = Completion::Exhaustive;
    std::uint64_t candidates = 0;
    std::uint64_t bad = 0;
};

/// Streams candidates up to colour renaming and vertex symmetry, each paired
/// with the solver's verdict. The first size-3 part is fixed to a canonical
/// colouring; the budget is charged once per generated labelled candidate.
ThreesSummary enumerate_bad_threes(int k, const SearchBudget& budget,
                                   const std::function<bool(const ThreesResult&)>& visit);

/// A uniformly random labelled candidate for the given even k.
ThreesCandidate random_threes_candidate(int k, std::mt19937_64& rng);

enum class BadStructure { K42, Threes };

std::string to_string(BadStructure family);

/// Recognises the two structured families on G (in any vertex labelling of P_1).
std::optional<BadStructure> recognise_bad_structure(const MultipartiteGraph& graph, const ListAssignment& lists);

/// True iff `lists` is not a lambda-list assignment. For the structured
/// families with k_lambda = k and some odd part the answer is known without
/// search (every class quota would have to be even); with confirm_by_search
/// the partition search runs anyway and a disagreement throws. Throws
/// ContractError if `lists` is neither family.
bool parity_obstruction_check(const MultipartiteGraph& graph, const ListAssignment& lists, const Lambda& lambda,
                              bool confirm_by_search = false);

}  // namespace lchoose
