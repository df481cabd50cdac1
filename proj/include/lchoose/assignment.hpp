#pragma once

#include <optional>
#include <vector>

#include "lchoose/colour_set.hpp"
#include "lchoose/lambda.hpp"

namespace lchoose {

/// Per-vertex colour lists over the universe 0..universe_size-1.
///
/// Every list is nonempty and every colour of the universe occurs in at least
/// one list, so the universe is exactly the union of the lists.
class ListAssignment {
 public:
    ListAssignment(int universe_size, std::vector<ColourSet> lists);

    static ListAssignment from_vectors(int universe_size, const std::vector<std::vector<int>>& lists);

    int universe_size() const { return universe_; }
    int vertex_count() const { return static_cast<int>(lists_.size()); }
    ColourSet list(int v) const { return lists_[static_cast<std::size_t>(v)]; }
    const std::vector<ColourSet>& lists() const { return lists_; }

    /// Sorted colour vectors, one per vertex.
    std::vector<std::vector<int>> to_vectors() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
    int universe_ = 0;
    std::vector<ColourSet> lists_;
};

/// Assignment of every universe colour to one of the classes C_0..C_{q-1},
/// where class i carries the quota lambda.part(i).
class ColourPartition {
 public:
    ColourPartition(Lambda lambda, std::vector<int> class_of);

    const Lambda& lambda() const { return lambda_; }
    int class_count() const { return lambda_.size(); }
    int universe_size() const { return static_cast<int>(class_of_.size()); }
    int class_of(int colour) const { return class_of_[static_cast<std::size_t>(colour)]; }
    const std::vector<int>& classes() const { return class_of_; }
    int quota(int cls) const { return lambda_.part(cls); }
    ColourSet class_colours(int cls) const;

    /// |L(v) & C_i| >= k_i for every vertex and class.
    bool witnesses(const ListAssignment& lists) const;
    /// |L(v) & C_i| == k_i for every vertex and class.
    bool is_exact_for(const ListAssignment& lists) const;

    friend bool operator==(const ColourPartition&, const ColourPartition&) = default;

 private:
    Lambda lambda_;
    std::vector<int> class_of_;
};

struct LambdaAssignment {
    ListAssignment lists;
    ColourPartition partition;
};

/// Searches for a partition of the universe witnessing that `lists` is a
/// lambda-list assignment. Colours are assigned most-frequent first; a branch
/// is cut as soon as some vertex cannot meet its remaining quotas even if all
/// of its unassigned colours went to the classes that still need them.
std::optional<ColourPartition> find_lambda_partition(const ListAssignment& lists, const Lambda& lambda);

/// Shrinks every list to exactly k_i colours per class, keeping the smallest
/// colours of each intersection, then drops colours no list uses and renumbers
/// the rest in increasing order. Throws ContractError if `partition` does not
/// witness `lists`.
LambdaAssignment trim_to_exact(const ListAssignment& lists, const ColourPartition& partition);

}  // namespace lchoose
