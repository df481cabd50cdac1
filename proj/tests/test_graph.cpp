#include <doctest.h>

#include "lchoose/error.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/oracles.hpp"

using namespace lchoose;

TEST_CASE("construction sorts parts") {
    MultipartiteGraph g({2, 3});
    CHECK(g.part_sizes() == std::vector<int>{3, 2});
    CHECK(g.vertex_count() == 5);
    CHECK(g.part_count() == 2);
    CHECK(g.part_of(2) == 0);
    CHECK(g.part_of(3) == 1);
    CHECK(g.part_begin(1) == 3);
    CHECK(g.part_end(1) == 5);

    MultipartiteGraph lemma({5, 5, 2, 2});
    CHECK(lemma.vertex_count() == 14);
    CHECK(lemma.part_count() == 4);

    MultipartiteGraph k1({1});
    CHECK(k1.vertex_count() == 1);
    CHECK(k1.part_count() == 1);
}

TEST_CASE("construction rejects bad sizes") {
    CHECK_THROWS_AS(MultipartiteGraph(std::vector<int>{}), ContractError);
    CHECK_THROWS_AS(MultipartiteGraph({2, 0}), ContractError);
    CHECK_THROWS_AS(MultipartiteGraph({-1}), ContractError);
    CHECK_THROWS_AS(MultipartiteGraph::parse("3,x"), ParseError);
    CHECK_THROWS_AS(MultipartiteGraph::parse(""), ParseError);
    CHECK(MultipartiteGraph::parse("2,5,2,5") == MultipartiteGraph({5, 5, 2, 2}));
    CHECK(MultipartiteGraph::parse("2,5,2,5").to_string() == "5,5,2,2");
}

TEST_CASE("size histogram") {
    CHECK(MultipartiteGraph({3, 2, 2, 1}).size_histogram() == std::map<int, int>{{3, 1}, {2, 2}, {1, 1}});
    CHECK(MultipartiteGraph({5, 5, 2, 2}).size_histogram() == std::map<int, int>{{5, 2}, {2, 2}});
    CHECK(MultipartiteGraph({4, 2, 2, 2}).size_histogram() == std::map<int, int>{{4, 1}, {2, 3}});
}

TEST_CASE("part vector enumeration examples") {
    using V = std::vector<std::vector<int>>;
    CHECK(enumerate_part_vectors(6, 2) == V{{5, 1}, {4, 2}, {3, 3}});
    CHECK(enumerate_part_vectors(5, 5) == V{{1, 1, 1, 1, 1}});
    CHECK(enumerate_part_vectors(7, 3) == V{{5, 1, 1}, {4, 2, 1}, {3, 3, 1}, {3, 2, 2}});
    CHECK(enumerate_part_vectors(3, 4).empty());
}

TEST_CASE("part vector counts match the recurrence") {
    for (int n = 1; n <= 20; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto vs = enumerate_part_vectors(n, k);
            REQUIRE(vs.size() == oracle::count_partitions_into(n, k));
            for (std::size_t i = 0; i < vs.size(); ++i) {
                int sum = 0;
                for (std::size_t j = 0; j < vs[i].size(); ++j) {
                    sum += vs[i][j];
                    if (j > 0) REQUIRE(vs[i][j - 1] >= vs[i][j]);
                }
                REQUIRE(sum == n);
                if (i > 0) REQUIRE(vs[i - 1] > vs[i]);
            }
        }
    }
}

TEST_CASE("adjacency is symmetric, irreflexive and complete across parts") {
    for (int n = 1; n <= 12; ++n) {
        for (int k = 1; k <= n; ++k) {
            for (const auto& parts : enumerate_part_vectors(n, k)) {
                const MultipartiteGraph g(parts);
                for (int u = 0; u < n; ++u) {
                    REQUIRE_FALSE(g.adjacent(u, u));
                    for (int v = 0; v < n; ++v) {
                        REQUIRE(g.adjacent(u, v) == g.adjacent(v, u));
                        REQUIRE(g.adjacent(u, v) == (g.part_of(u) != g.part_of(v)));
                    }
                }
            }
        }
    }
}
