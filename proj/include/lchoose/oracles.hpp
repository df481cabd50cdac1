#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "lchoose/assignment.hpp"
#include "lchoose/graph.hpp"
#include "lchoose/lambda.hpp"
#include "lchoose/lowerbound.hpp"
#include "lchoose/solver.hpp"

// Deliberately naive reference implementations. None of them call the
// library's search routines they are compared against.
namespace lchoose::oracle {

/// Tries every element of the product of the lists.
std::optional<Colouring> naive_colouring(const MultipartiteGraph& graph, const ListAssignment& lists);

/// First reducible tuple in lexicographic order over the whole box.
std::optional<FourTuple> brute_reducible(const std::array<int, 4>& caps, int k_t);

/// Number of partitions of n into exactly k positive parts.
std::uint64_t count_partitions_into(int n, int k);

/// All q^|C| maps from colours to classes.
bool brute_partition_exists(const ListAssignment& lists, const Lambda& lambda);

/// All maps from the parts of `finer` to blocks.
bool brute_refinement(const Lambda& finer, const Lambda& coarser);
bool brute_lambda_leq(const Lambda& lambda, const Lambda& other);

/// Number of orbits of exact lambda-list assignments of G with class i drawn
/// from a pool of n * k_i colours, found by listing every labelled
/// assignment and reducing each under the full symmetry group by brute
/// force. With skip_private, assignments where some colour lies in one list
/// only are left out.
std::uint64_t brute_orbit_count(const MultipartiteGraph& graph, const Lambda& lambda, bool skip_private);

/// Orbit key computed by trying every structure-preserving vertex
/// permutation. Only usable for small n.
std::vector<std::uint64_t> brute_orbit_key(const MultipartiteGraph& graph, const ListAssignment& lists,
                                           const ColourPartition& partition);

}  // namespace lchoose::oracle
