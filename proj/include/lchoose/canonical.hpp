#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lchoose/assignment.hpp"
#include "lchoose/graph.hpp"

namespace lchoose {

/// Vertex set of G, one bit per vertex (graphs have at most 64 vertices).
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 64;

/// One colour class seen column-wise: each column is the set of vertices
/// whose lists contain that colour. Colour names are forgotten, so two
/// assignments that differ by renaming colours inside a class have the same
/// column multiset.
struct ClassColumns {
    int quota = 0;
    std::vector<VertexSet> columns;

    friend bool operator==(const ClassColumns&, const ClassColumns&) = default;
};

/// Column view of an assignment, classes in partition index order.
std::vector<ClassColumns> to_columns(const ListAssignment& lists, const ColourPartition& partition);

/// Rebuilds lists from columns. Colours are numbered class by class, columns in
/// the given order; class i takes lambda.part(i) == classes[i].quota.
LambdaAssignment from_columns(int vertex_count, const Lambda& lambda, const std::vector<ClassColumns>& classes);

struct CanonicalForm {
    /// Byte string equal for two assignments iff they are related by renaming
    /// colours within a class, permuting classes of equal quota, permuting
    /// equal-size parts, and permuting vertices inside a part.
    std::string key;
    /// The orbit representative the key encodes, relabelled onto G's vertices,
    /// classes ordered by quota.
    std::vector<ClassColumns> classes;
};

/// Lexicographically least encoding over all vertex orderings compatible with
/// an equitable refinement of the vertices (parts first by size, then by the
/// refined labels). Ties between cells are broken by trying every permutation
/// of the tied vertices or parts.
CanonicalForm canonical_form(const MultipartiteGraph& graph, const std::vector<ClassColumns>& classes);

/// Convenience wrapper over canonical_form for list-based input.
std::string canonical_key(const ListAssignment& lists, const MultipartiteGraph& graph,
                          const ColourPartition& partition);

}  // namespace lchoose
