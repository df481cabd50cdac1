#include "lchoose/graph.hpp"

#include <algorithm>
#include <charconv>

#include "lchoose/error.hpp"

namespace lchoose {

MultipartiteGraph::MultipartiteGraph(std::vector<int> part_sizes) : sizes_(std::move(part_sizes)) {
    if (sizes_.empty()) throw ContractError("a multipartite graph needs at least one part");
    for (int s : sizes_) {
        if (s < 1) throw ContractError("part sizes must be >= 1");
    }
    std::sort(sizes_.begin(), sizes_.end(), std::greater<>());
    int next = 0;
    for (std::size_t p = 0; p < sizes_.size(); ++p) {
        begin_.push_back(next);
        for (int i = 0; i < sizes_[p]; ++i) part_of_.push_back(static_cast<int>(p));
        next += sizes_[p];
    }
}

MultipartiteGraph MultipartiteGraph::parse(std::string_view text) {
    std::vector<int> sizes;
    std::string_view rest = text;
    while (true) {
        auto comma = rest.find(',');
        std::string_view token = rest.substr(0, comma);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() || value < 1) {
            throw ParseError("malformed graph part size '" + std::string(token) + "' in '" +
                             std::string(text) + "'");
        }
        sizes.push_back(value);
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return MultipartiteGraph(std::move(sizes));
}

std::map<int, int> MultipartiteGraph::size_histogram() const {
    std::map<int, int> hist;
    for (int s : sizes_) ++hist[s];
    return hist;
}

std::string MultipartiteGraph::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < sizes_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(sizes_[i]);
    }
    return out;
}

void for_each_part_vector(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    if (k < 1 || n < 1 || k > n) return;
    std::vector<int> current;
    current.reserve(static_cast<std::size_t>(k));
    auto rec = [&](auto&& self, int remaining, int slots, int cap) -> void {
        if (slots == 0) {
            if (remaining == 0) fn(current);
            return;
        }
        // Each remaining slot needs at least 1; the largest value is bounded by cap.
        int hi = std::min(cap, remaining - (slots - 1));
        int lo = (remaining + slots - 1) / slots;
        for (int v = hi; v >= lo; --v) {
            current.push_back(v);
            self(self, remaining - v, slots - 1, v);
            current.pop_back();
        }
    };
    rec(rec, n, k, n);
}

std::vector<std::vector<int>> enumerate_part_vectors(int n, int k) {
    std::vector<std::vector<int>> out;
    for_each_part_vector(n, k, [&](const std::vector<int>& v) { out.push_back(v); });
    return out;
}

}  // namespace lchoose
