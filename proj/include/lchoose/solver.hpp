#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lchoose/assignment.hpp"
#include "lchoose/enumerate.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/lambda.hpp"

namespace lchoose {

/// colour_of[v] for every vertex of the graph.
struct Colouring {
    std::vector<int> colour_of;

    friend bool operator==(const Colouring&, const Colouring&) = default;
};

/// Proper (parts use pairwise disjoint colours) and respects the lists.
bool is_proper_list_colouring(const MultipartiteGraph& graph, const ListAssignment& lists, const Colouring& colouring);

/// Decides L-colourability of a complete multipartite graph.
///
/// In such a graph every colour is confined to one part, so the search runs
/// part by part (largest first) and picks for each part a set S of colours
/// that meets every list of the part; S is then unavailable to later parts.
/// Only inclusion-minimal covers are tried, smallest first, since a larger
/// cover only removes more colours. Failed (part, available colours) states
/// are memoised.
std::optional<Colouring> find_colouring(const MultipartiteGraph& graph, const ListAssignment& lists);

enum class ChoosabilityStatus { Choosable, NotChoosable, Inconclusive };

std::string to_string(ChoosabilityStatus status);

struct Verdict {
    ChoosabilityStatus status = ChoosabilityStatus::Inconclusive;
    /// Present iff status is NotChoosable; find_colouring fails on it.
    std::optional<LambdaAssignment> counterexample;
    /// True when every orbit within the universe bound was examined.
    bool exhaustive = false;
    std::uint64_t orbits_checked = 0;
    std::uint64_t nodes = 0;
    int universe_bound = 0;
};

struct ChoosabilityOptions {
    int threads = 1;
    /// See EnumerationOptions::skip_private_colours.
    bool skip_private_colours = true;
    int max_pool_per_class = 0;
};

/// lambda-choosability of G relative to the universe bound n * k_i per class.
///
/// Orbit representatives are checked seed by seed (see OrbitEnumerator). With
/// several threads the seeds are farmed out; the reported counterexample and
/// orbit count are the ones a single-threaded run would report, because any
/// seed after the first failing one is discarded and earlier seeds are always
/// completed.
Verdict is_choosable(const MultipartiteGraph& graph, const Lambda& lambda, const SearchBudget& budget,
                     const ChoosabilityOptions& options = {});

}  // namespace lchoose
