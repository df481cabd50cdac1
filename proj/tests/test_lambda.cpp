#include <doctest.h>

#include "lchoose/error.hpp"
#include "lchoose/lambda.hpp"
#include "lchoose/oracles.hpp"

using namespace lchoose;

TEST_CASE("parse expands stars and sorts") {
    CHECK(Lambda::parse("1,2,3").parts() == std::vector<int>{1, 2, 3});
    CHECK(Lambda::parse("2*3").parts() == std::vector<int>{2, 2, 2});
    CHECK(Lambda::parse("3,1,1").parts() == std::vector<int>{1, 1, 3});
    CHECK(Lambda::parse(" 1*2 , 4").parts() == std::vector<int>{1, 1, 4});
    CHECK(Lambda::parse("3,1,1").to_string() == "1,1,3");
    CHECK(Lambda::parse("2*3") == Lambda({2, 2, 2}));
}

TEST_CASE("parse rejects malformed input") {
    for (const char* bad : {"", "0", "-1", "0,2", "a", "1,,2", "2*0", "2*", "*3", "1.5", "2*3*4"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Lambda::parse(bad), ParseError);
    }
    CHECK_THROWS_AS(Lambda(std::vector<int>{}), ContractError);
    CHECK_THROWS_AS(Lambda({0, 1}), ContractError);
}

TEST_CASE("stats") {
    CHECK(lambda_stats(Lambda({1, 2, 3})) == LambdaStats{6, 3, 1, 2});
    CHECK(lambda_stats(Lambda({1, 1})) == LambdaStats{2, 2, 2, 2});
    CHECK(lambda_stats(Lambda({2, 2})) == LambdaStats{4, 2, 0, 0});
}

TEST_CASE("triviality") {
    CHECK(is_trivial(Lambda({1, 1, 1})));
    CHECK_FALSE(is_trivial(Lambda({1, 2})));
    CHECK_FALSE(is_trivial(Lambda({3})));
}

TEST_CASE("refinement examples") {
    CHECK(is_refinement(Lambda({1, 2}), Lambda({3})));
    CHECK_FALSE(is_refinement(Lambda({2, 2}), Lambda({1, 3})));
    CHECK(is_refinement(Lambda({1, 1, 2, 3}), Lambda({1, 3, 3})));
}

TEST_CASE("order examples") {
    CHECK(lambda_leq(Lambda({3}), Lambda({1, 1, 1})));
    CHECK(lambda_leq(Lambda({2}), Lambda({3})));
    CHECK_FALSE(lambda_leq(Lambda({1, 1}), Lambda({2})));
}

TEST_CASE("refinement and order agree with brute force for sums up to 7") {
    std::vector<Lambda> all;
    for (int k = 1; k <= 7; ++k) {
        for (auto& l : partitions_of(k)) all.push_back(l);
    }
    for (const auto& a : all) {
        for (const auto& b : all) {
            CAPTURE(a.to_string());
            CAPTURE(b.to_string());
            REQUIRE(is_refinement(a, b) == oracle::brute_refinement(a, b));
            REQUIRE(lambda_leq(a, b) == oracle::brute_lambda_leq(a, b));
        }
    }
}

TEST_CASE("order is reflexive and transitive for sums up to 8") {
    std::vector<Lambda> all;
    for (int k = 1; k <= 8; ++k) {
        for (auto& l : partitions_of(k)) all.push_back(l);
    }
    const std::size_t n = all.size();
    std::vector<std::vector<char>> leq(n, std::vector<char>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) leq[i][j] = lambda_leq(all[i], all[j]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(leq[i][i]);
        for (std::size_t j = 0; j < n; ++j) {
            if (!leq[i][j]) continue;
            for (std::size_t l = 0; l < n; ++l) {
                if (leq[j][l]) REQUIRE(leq[i][l]);
            }
        }
    }
}

TEST_CASE("refinement implies equal sums and order") {
    for (int k = 1; k <= 8; ++k) {
        for (int k2 = 1; k2 <= 8; ++k2) {
            for (const auto& fine : partitions_of(k)) {
                for (const auto& coarse : partitions_of(k2)) {
                    if (!is_refinement(fine, coarse)) continue;
                    CHECK(fine.sum() == coarse.sum());
                    CHECK(lambda_leq(coarse, fine));
                }
            }
        }
    }
}

TEST_CASE("partition counts") {
    const std::vector<std::size_t> p{1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int k = 1; k <= 12; ++k) CHECK(partitions_of(k).size() == p[k - 1]);
}

TEST_CASE("phi formula examples") {
    CHECK(phi_formula(Lambda({2})).value() == 6);
    CHECK(phi_formula(Lambda({1, 3})).value() == 12);
    CHECK(phi_formula(Lambda({1, 1})).is_infinite());
    CHECK(phi_formula(Lambda({1, 1})).to_string() == "infinite");
    CHECK(phi_formula(Lambda({3, 3})).value() == 15);
    CHECK_THROWS_AS(phi_formula(Lambda({1})).value(), ContractError);
}

TEST_CASE("phi for plain choosability") {
    for (int k = 2; k <= 12; ++k) {
        CHECK(phi_choosability(k) == (k % 2 == 0 ? 2 * k + 2 : 2 * k + 3));
        CHECK(phi_formula(Lambda({k})).value() == phi_choosability(k));
    }
}

TEST_CASE("previous bounds examples") {
    CHECK(phi_bounds_previous(Lambda({1, 3})) == PhiBounds{11, 12});
    // Upper bound is min{16, 15}.
    CHECK(phi_bounds_previous(Lambda({3, 3})) == PhiBounds{14, 15});
    CHECK(phi_bounds_previous(Lambda({2, 2})) == PhiBounds{10, 10});
    CHECK_THROWS_AS(phi_bounds_previous(Lambda({1, 1})), ContractError);
}

TEST_CASE("formula lies within previous bounds") {
    for (int k = 1; k <= 12; ++k) {
        for (const auto& l : partitions_of(k)) {
            if (l.is_trivial()) continue;
            const auto b = phi_bounds_previous(l);
            const int phi = phi_formula(l).value();
            CHECK(b.lower <= phi);
            CHECK(phi <= b.upper);
            CHECK(phi >= phi_choosability(k));
            if (l.odd_count() == l.multiplicity(1)) CHECK(phi == 2 * k + l.multiplicity(1) + 2);
        }
    }
}
