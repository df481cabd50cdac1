#include <doctest.h>

#include <random>

#include "lchoose/assignment.hpp"
#include "lchoose/constructions.hpp"
#include "lchoose/error.hpp"
#include "lchoose/oracles.hpp"

using namespace lchoose;

TEST_CASE("list assignment validation") {
    CHECK_NOTHROW(ListAssignment::from_vectors(2, {{0}, {1}}));
    CHECK_THROWS_AS(ListAssignment::from_vectors(2, {{0}, {}}), ContractError);
    CHECK_THROWS_AS(ListAssignment::from_vectors(2, {{0}, {2}}), ContractError);
    CHECK_THROWS_AS(ListAssignment::from_vectors(3, {{0}, {1}}), ContractError);
    CHECK_THROWS_AS(ListAssignment::from_vectors(0, {}), ContractError);
    CHECK_THROWS_AS(ListAssignment::from_vectors(65, {{0}}), ContractError);
    CHECK(ListAssignment::from_vectors(3, {{2, 0}, {1}}).to_vectors() == std::vector<std::vector<int>>{{0, 2}, {1}});
}

TEST_CASE("partition search examples") {
    const auto wide = ListAssignment::from_vectors(4, std::vector<std::vector<int>>(6, {0, 1, 2, 3}));
    const auto p = find_lambda_partition(wide, Lambda({2, 2}));
    REQUIRE(p.has_value());
    CHECK(p->witnesses(wide));
    CHECK(colour_count(p->class_colours(0)) == 2);

    const auto narrow = ListAssignment::from_vectors(3, std::vector<std::vector<int>>(6, {0, 1, 2}));
    CHECK_FALSE(find_lambda_partition(narrow, Lambda({2, 2})).has_value());

    const auto k42 = build_bad_k42(4, K42Sizes{1, 1, 2});
    CHECK_FALSE(find_lambda_partition(k42.lists, Lambda({1, 3})).has_value());
    CHECK(find_lambda_partition(k42.lists, Lambda({4})).has_value());
}

TEST_CASE("partition search agrees with brute force on random assignments") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 1500; ++iter) {
        const int n = std::uniform_int_distribution<int>(1, 5)(rng);
        const int u = std::uniform_int_distribution<int>(1, 7)(rng);
        std::uniform_int_distribution<ColourSet> subset(1, first_colours(u));
        std::vector<ColourSet> lists;
        ColourSet seen = 0;
        for (int v = 0; v < n; ++v) {
            lists.push_back(subset(rng));
            seen |= lists.back();
        }
        lists.back() |= first_colours(u) & ~seen;
        const ListAssignment la(u, lists);
        const auto lambdas = partitions_of(std::uniform_int_distribution<int>(1, 4)(rng));
        const Lambda& lambda = lambdas[std::uniform_int_distribution<std::size_t>(0, lambdas.size() - 1)(rng)];
        const auto found = find_lambda_partition(la, lambda);
        CAPTURE(iter);
        REQUIRE(found.has_value() == oracle::brute_partition_exists(la, lambda));
        if (found) REQUIRE(found->witnesses(la));
    }
}

TEST_CASE("trim keeps the smallest colours of each class") {
    const auto one = ListAssignment::from_vectors(3, {{0, 1, 2}});
    const auto t1 = trim_to_exact(one, ColourPartition(Lambda({2}), {0, 0, 0}));
    CHECK(t1.lists.to_vectors() == std::vector<std::vector<int>>{{0, 1}});
    CHECK(t1.lists.universe_size() == 2);

    const auto two = ListAssignment::from_vectors(5, {{0, 1, 2, 3}, {1, 2, 3, 4}});
    const ColourPartition p(Lambda({1, 2}), {0, 0, 1, 1, 1});
    const auto t2 = trim_to_exact(two, p);
    CHECK(t2.lists.to_vectors() == std::vector<std::vector<int>>{{0, 2, 3}, {1, 2, 3}});
    CHECK(t2.partition.is_exact_for(t2.lists));

    // Already exact: unchanged.
    const auto t3 = trim_to_exact(t2.lists, t2.partition);
    CHECK(t3.lists == t2.lists);
    CHECK(t3.partition == t2.partition);

    CHECK_THROWS_AS(trim_to_exact(two, ColourPartition(Lambda({1, 2}), {1, 1, 0, 0, 0})), ContractError);
}

TEST_CASE("exactness and witness predicates") {
    const auto la = ListAssignment::from_vectors(4, {{0, 2}, {1, 3}});
    const ColourPartition p(Lambda({1, 1}), {0, 0, 1, 1});
    CHECK(p.witnesses(la));
    CHECK(p.is_exact_for(la));
    const ColourPartition q(Lambda({1, 1}), {0, 1, 0, 1});
    CHECK_FALSE(q.witnesses(la));
    CHECK_THROWS_AS(ColourPartition(Lambda({1, 1}), {0, 2, 0, 1}), ContractError);
}
