#include <doctest.h>

#include "lchoose/error.hpp"
#include "lchoose/search.hpp"

using namespace lchoose;

TEST_CASE("phi search for lambda = [2]") {
    const auto r = phi_search(Lambda({2}), 6, SearchBudget{});
    REQUIRE(r.minimum.has_value());
    CHECK(*r.minimum == 6);
    CHECK(r.exhaustive_below);
    bool k33 = false, k42 = false;
    for (const auto& c : r.cells) {
        if (c.n <= 5) {
            CHECK(c.verdict.status == ChoosabilityStatus::Choosable);
            CHECK(c.verdict.exhaustive);
        }
        if (c.parts == std::vector<int>{3, 3}) k33 = c.verdict.status == ChoosabilityStatus::NotChoosable;
        if (c.parts == std::vector<int>{4, 2}) k42 = c.verdict.status == ChoosabilityStatus::NotChoosable;
        if (c.parts == std::vector<int>{5, 1}) CHECK(c.verdict.status == ChoosabilityStatus::Choosable);
        // A counterexample is never reported alongside an exhaustive claim.
        if (c.verdict.counterexample) CHECK_FALSE(c.verdict.exhaustive);
    }
    CHECK(k33);
    CHECK(k42);
    CHECK(r.cells.back().n == 6);
}

TEST_CASE("trivial lambda short-circuits") {
    const auto r = phi_search(Lambda({1, 1}), 50, SearchBudget{});
    CHECK(r.trivial);
    CHECK(r.cells.empty());
    CHECK_FALSE(r.minimum.has_value());
    CHECK(verify_choosable_below(Lambda({1, 1, 1}), 100, SearchBudget{}).holds);
}

TEST_CASE("lambda = [1,2] has no counterexample on at most 7 vertices") {
    const auto r = phi_search(Lambda({1, 2}), 7, SearchBudget{});
    CHECK_FALSE(r.minimum.has_value());
    CHECK(r.exhaustive_below);
    // three-part vectors for n = 3..7
    CHECK(r.cells.size() == 1 + 1 + 2 + 3 + 4);
}

TEST_CASE("choosable below") {
    CHECK(verify_choosable_below(Lambda({2}), 6, SearchBudget{}).holds);
    const auto r = verify_choosable_below(Lambda({2}), 7, SearchBudget{});
    CHECK_FALSE(r.holds);
    CHECK(r.cells.back().verdict.status == ChoosabilityStatus::NotChoosable);
}

TEST_CASE("budget truncation surfaces in the report") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    const auto r = phi_search(Lambda({2}), 5, tiny);
    CHECK_FALSE(r.exhaustive_below);
    CHECK_THROWS_AS(phi_search(Lambda({2}), 1, SearchBudget{}), ContractError);
}
