#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lchoose {

/// A complete multipartite graph given by its part sizes.
///
/// Parts are stored in descending size order and vertices are numbered part
/// by part: part 0 holds vertices 0..size(0)-1, and so on. Two vertices are
/// adjacent iff they lie in different parts.
class MultipartiteGraph {
 public:
    explicit MultipartiteGraph(std::vector<int> part_sizes);

    /// Comma-separated part sizes, e.g. "5,5,2,2".
    static MultipartiteGraph parse(std::string_view text);

    const std::vector<int>& part_sizes() const { return sizes_; }
    int part_count() const { return static_cast<int>(sizes_.size()); }
    int vertex_count() const { return static_cast<int>(part_of_.size()); }
    int part_size(int p) const { return sizes_[static_cast<std::size_t>(p)]; }
    int part_begin(int p) const { return begin_[static_cast<std::size_t>(p)]; }
    int part_end(int p) const { return begin_[static_cast<std::size_t>(p)] + part_size(p); }
    int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }

    bool adjacent(int u, int v) const { return part_of(u) != part_of(v); }

    /// size -> number of parts of that size.
    std::map<int, int> size_histogram() const;

    std::string to_string() const;

    friend bool operator==(const MultipartiteGraph& a, const MultipartiteGraph& b) {
        return a.sizes_ == b.sizes_;
    }

 private:
    std::vector<int> sizes_;
    std::vector<int> begin_;
    std::vector<int> part_of_;
};

/// Calls fn for every descending list of k positive integers summing to n, in
/// lexicographically decreasing order. Nothing is produced when k > n.
void for_each_part_vector(int n, int k, const std::function<void(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> enumerate_part_vectors(int n, int k);

}  // namespace lchoose
