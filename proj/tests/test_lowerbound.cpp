#include <doctest.h>

#include "lchoose/error.hpp"
#include "lchoose/lowerbound.hpp"
#include "lchoose/oracles.hpp"

using namespace lchoose;

TEST_CASE("reducible tuple examples") {
    const auto t = find_reducible_4tuple({4, 2, 1, 1}, 3);
    REQUIRE(t.has_value());
    CHECK(t->count() == 3);
    CHECK((t->weight() == 7 || t->weight() == 8));
    CHECK(is_reducible(FourTuple{{0, 2, 0, 1}}, {4, 2, 1, 1}, 3));
    CHECK(FourTuple{{0, 2, 0, 1}}.weight() == 8);

    CHECK_FALSE(find_reducible_4tuple({0, 0, 0, 0}, 3).has_value());

    const auto u = find_reducible_4tuple({0, 2, 1, 0}, 3);
    REQUIRE(u.has_value());
    CHECK(*u == FourTuple{{0, 2, 1, 0}});
    CHECK(u->weight() == 7);

    CHECK_THROWS_AS(find_reducible_4tuple({-1, 0, 0, 0}, 3), ContractError);
    CHECK_THROWS_AS(find_reducible_4tuple({1, 0, 0, 0}, 0), ContractError);
}

TEST_CASE("reducible tuple search matches brute force") {
    for (int k_t : {1, 2, 3, 4, 5, 6}) {
        for (int a = 0; a <= 6; ++a)
            for (int b = 0; b <= 6; ++b)
                for (int c = 0; c <= 6; ++c)
                    for (int d = 0; d <= 6; ++d) {
                        const std::array<int, 4> caps{a, b, c, d};
                        REQUIRE(find_reducible_4tuple(caps, k_t) == oracle::brute_reducible(caps, k_t));
                    }
    }
}

TEST_CASE("subgraph from tuple") {
    const auto [x, rest] = subgraph_from_tuple(MultipartiteGraph({4, 2, 2, 2}), FourTuple{{0, 2, 0, 1}});
    CHECK(x.part_sizes() == std::vector<int>{4, 2, 2});
    CHECK(x.vertex_count() == 8);
    CHECK(rest.part_sizes() == std::vector<int>{2});

    const MultipartiteGraph g({3, 2, 2, 1, 1, 1, 1});
    const auto caps = small_part_caps(g);
    CHECK(caps == std::array<int, 4>{4, 2, 1, 0});
    const auto t = find_reducible_4tuple(caps, 3);
    REQUIRE(t.has_value());
    const auto [x2, rest2] = subgraph_from_tuple(g, *t);
    CHECK(x2.part_count() == 3);
    CHECK(x2.vertex_count() + rest2.vertex_count() == g.vertex_count());
    CHECK(x2.vertex_count() <= 2 * 3 + 2);
    CHECK(x2.vertex_count() >= 2 * 3 + 1);

    CHECK_THROWS_AS(subgraph_from_tuple(MultipartiteGraph({4, 2, 2, 2}), FourTuple{{1, 0, 0, 0}}), ContractError);
    CHECK_THROWS_AS(subgraph_from_tuple(MultipartiteGraph({4, 2}), FourTuple{{0, 1, 0, 1}}), ContractError);
}

TEST_CASE("recipe examples") {
    const auto one = case_recipe_tuples(3, 0, 0, 1, RecipeCase::One);
    REQUIRE_FALSE(one.empty());
    CHECK(one[0].name == "b1");
    CHECK(one[0].tuple == FourTuple{{1, 0, 1, 1}});
    CHECK(one[0].tuple.weight() == 8);
    CHECK(one[0].sums_ok);

    const auto two = case_recipe_tuples(3, 0, 0, 0, RecipeCase::Two);
    REQUIRE(two.size() == 1);
    CHECK(two[0].tuple == FourTuple{{1, 0, 2, 0}});
    CHECK(two[0].tuple.weight() == 7);
    CHECK(two[0].sums_ok);

    CHECK_THROWS_AS(case_recipe_tuples(4, 0, 0, 0, RecipeCase::One), ContractError);
    CHECK_THROWS_AS(case_recipe_tuples(5, 4, 0, 0, RecipeCase::One), ContractError);
    CHECK_THROWS_AS(case_recipe_tuples(1, 0, 0, 0, RecipeCase::Two), ContractError);
}

TEST_CASE("every recipe tuple satisfies the sum conditions") {
    for (int k_t : {3, 5, 7, 9}) {
        for (int i2 = 0; i2 <= k_t - 2; ++i2) {
            for (int i3 = 0; i3 <= 4; ++i3) {
                for (auto which : {RecipeCase::One, RecipeCase::Two}) {
                    for (const auto& t : case_recipe_tuples(k_t, i2, i3, 10, which, 20)) {
                        CAPTURE(k_t);
                        CAPTURE(i2);
                        CAPTURE(i3);
                        CAPTURE(t.name);
                        CHECK(t.sums_ok);
                        CHECK(t.tuple.count() == k_t);
                        if (t.name == "b2-r2" && i2 == 0) {
                            CHECK_FALSE(t.nonnegative);
                        } else {
                            CHECK(t.nonnegative);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("b2 recipe is chosen by the residue") {
    // k_t = 7, |I_2| = 1, |I_3| = 0: 3 b_2 = 5, residue 2.
    const auto r = case_recipe_tuples(7, 1, 0, 5, RecipeCase::One);
    REQUIRE(r.size() == 2);
    CHECK(r[1].residue == 2);
    CHECK(r[1].tuple == FourTuple{{4, 0, 0, 3}});
    // |I_3| >= floor(b_1) leaves only the b_1 tuple.
    CHECK(case_recipe_tuples(7, 1, 3, 5, RecipeCase::One).size() == 1);
}
