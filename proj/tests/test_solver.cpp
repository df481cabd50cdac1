#include <doctest.h>

#include <random>

#include "lchoose/constructions.hpp"
#include "lchoose/oracles.hpp"
#include "lchoose/solver.hpp"

using namespace lchoose;

namespace {

ListAssignment classical_k33() {
    return ListAssignment::from_vectors(3, {{0, 1}, {0, 2}, {1, 2}, {0, 1}, {0, 2}, {1, 2}});
}

bool certified(const MultipartiteGraph& g, const Verdict& v) {
    return v.counterexample && v.counterexample->partition.witnesses(v.counterexample->lists) &&
           !find_colouring(g, v.counterexample->lists) && !oracle::naive_colouring(g, v.counterexample->lists);
}

}  // namespace

TEST_CASE("find_colouring examples") {
    const MultipartiteGraph k2({1, 1});
    CHECK_FALSE(find_colouring(k2, ListAssignment::from_vectors(1, {{0}, {0}})).has_value());
    const auto c = find_colouring(k2, ListAssignment::from_vectors(2, {{0}, {1}}));
    REQUIRE(c.has_value());
    CHECK(c->colour_of == std::vector<int>{0, 1});

    const MultipartiteGraph k33({3, 3});
    CHECK_FALSE(find_colouring(k33, classical_k33()).has_value());
    CHECK_FALSE(oracle::naive_colouring(k33, classical_k33()).has_value());

    const auto lemma = build_lemma1(1, 0, 1);
    CHECK_FALSE(find_colouring(lemma.graph, lemma.lists).has_value());
}

TEST_CASE("find_colouring agrees with naive enumeration") {
    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 3000; ++iter) {
        const int n = std::uniform_int_distribution<int>(1, 7)(rng);
        const int k = std::uniform_int_distribution<int>(1, n)(rng);
        const auto vs = enumerate_part_vectors(n, k);
        const MultipartiteGraph g(vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)]);
        const int u = std::uniform_int_distribution<int>(1, 5)(rng);
        std::uniform_int_distribution<ColourSet> subset(1, first_colours(u));
        std::vector<ColourSet> lists;
        ColourSet seen = 0;
        for (int v = 0; v < n; ++v) {
            lists.push_back(subset(rng));
            seen |= lists.back();
        }
        lists.back() |= first_colours(u) & ~seen;
        const ListAssignment la(u, lists);
        const auto fast = find_colouring(g, la);
        REQUIRE(fast.has_value() == oracle::naive_colouring(g, la).has_value());
        if (fast) REQUIRE(is_proper_list_colouring(g, la, *fast));
    }
}

TEST_CASE("enlarging a list never destroys colourability") {
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 2000; ++iter) {
        const int n = std::uniform_int_distribution<int>(2, 7)(rng);
        const int k = std::uniform_int_distribution<int>(2, n)(rng);
        const auto vs = enumerate_part_vectors(n, k);
        const MultipartiteGraph g(vs[std::uniform_int_distribution<std::size_t>(0, vs.size() - 1)(rng)]);
        const int u = 5;
        std::uniform_int_distribution<ColourSet> subset(1, first_colours(u));
        std::vector<ColourSet> lists;
        for (int v = 0; v < n; ++v) lists.push_back(subset(rng));
        lists[0] |= first_colours(u);
        const ListAssignment before(u, lists);
        const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        lists[v] |= colour_bit(std::uniform_int_distribution<int>(0, u - 1)(rng));
        const ListAssignment after(u, lists);
        if (find_colouring(g, before)) REQUIRE(find_colouring(g, after).has_value());
    }
}

TEST_CASE("is_proper_list_colouring rejects bad colourings") {
    const MultipartiteGraph g({2, 1});
    const auto la = ListAssignment::from_vectors(2, {{0}, {0, 1}, {0, 1}});
    CHECK(is_proper_list_colouring(g, la, Colouring{{0, 0, 1}}));
    CHECK_FALSE(is_proper_list_colouring(g, la, Colouring{{0, 1, 0}}));
    CHECK_FALSE(is_proper_list_colouring(g, la, Colouring{{1, 1, 0}}));
    CHECK_FALSE(is_proper_list_colouring(g, la, Colouring{{0, 0}}));
}

TEST_CASE("is_choosable examples") {
    const MultipartiteGraph k33({3, 3});
    const auto bad = is_choosable(k33, Lambda({2}), SearchBudget{});
    CHECK(bad.status == ChoosabilityStatus::NotChoosable);
    CHECK(certified(k33, bad));

    const auto good = is_choosable(MultipartiteGraph({2, 2}), Lambda({2}), SearchBudget{});
    CHECK(good.status == ChoosabilityStatus::Choosable);
    CHECK(good.exhaustive);
    CHECK_FALSE(good.counterexample.has_value());

    for (const auto& parts : {std::vector<int>{3, 2}, {2, 2, 1}, {3, 1, 1, 1}}) {
        const MultipartiteGraph g(parts);
        const auto v = is_choosable(g, Lambda(std::vector<int>(parts.size(), 1)), SearchBudget{});
        CHECK(v.status == ChoosabilityStatus::Choosable);
        CHECK(v.exhaustive);
    }
}

TEST_CASE("tiny budgets give INCONCLUSIVE") {
    SearchBudget tiny;
    tiny.max_nodes = 10;
    const auto v = is_choosable(MultipartiteGraph({5, 5, 2, 2}), Lambda({1, 3}), tiny);
    CHECK(v.status == ChoosabilityStatus::Inconclusive);
    CHECK_FALSE(v.exhaustive);
    CHECK_FALSE(v.counterexample.has_value());
}

TEST_CASE("private-colour reduction does not change verdicts") {
    for (const auto& parts : {std::vector<int>{2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 1, 1}, {2, 2, 1}}) {
        const MultipartiteGraph g(parts);
        for (const auto& l : partitions_of(static_cast<int>(parts.size()))) {
            ChoosabilityOptions full;
            full.skip_private_colours = false;
            const auto a = is_choosable(g, l, SearchBudget{}, full);
            const auto b = is_choosable(g, l, SearchBudget{});
            CAPTURE(g.to_string());
            CAPTURE(l.to_string());
            CHECK(a.status == b.status);
            CHECK(a.status != ChoosabilityStatus::Inconclusive);
        }
    }
}

TEST_CASE("verdicts do not depend on thread count") {
    for (const auto& parts : {std::vector<int>{3, 3}, {4, 2}, {2, 2, 2}, {3, 2, 1}}) {
        const MultipartiteGraph g(parts);
        for (const auto& l : partitions_of(static_cast<int>(parts.size()))) {
            ChoosabilityOptions many;
            many.threads = 4;
            const auto a = is_choosable(g, l, SearchBudget{});
            const auto b = is_choosable(g, l, SearchBudget{}, many);
            CHECK(a.status == b.status);
            CHECK(a.orbits_checked == b.orbits_checked);
            if (a.counterexample) {
                REQUIRE(b.counterexample.has_value());
                CHECK(a.counterexample->lists == b.counterexample->lists);
            }
        }
    }
}
