#include "lchoose/lambda.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>

#include "lchoose/error.hpp"

namespace lchoose {

namespace {

constexpr int kMaxStarCount = 4096;

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

int parse_positive(std::string_view token, std::string_view whole) {
    token = trim(token);
    int value = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (token.empty() || ec != std::errc{} || ptr != last) {
        throw ParseError("malformed lambda entry '" + std::string(token) + "' in '" +
                         std::string(whole) + "'");
    }
    if (value < 1) {
        throw ParseError("lambda entries must be >= 1, got " + std::to_string(value));
    }
    return value;
}

}  // namespace

Lambda::Lambda(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) throw ContractError("lambda must have at least one part");
    for (int p : parts_) {
        if (p < 1) throw ContractError("lambda parts must be >= 1");
    }
    std::sort(parts_.begin(), parts_.end());
}

Lambda Lambda::parse(std::string_view text) {
    std::vector<int> parts;
    std::string_view rest = text;
    if (trim(rest).empty()) throw ParseError("empty lambda");
    while (true) {
        auto comma = rest.find(',');
        std::string_view entry = trim(rest.substr(0, comma));
        auto star = entry.find('*');
        if (star == std::string_view::npos) {
            parts.push_back(parse_positive(entry, text));
        } else {
            int value = parse_positive(entry.substr(0, star), text);
            int count = parse_positive(entry.substr(star + 1), text);
            if (count > kMaxStarCount) throw ParseError("star count too large in '" + std::string(text) + "'");
            parts.insert(parts.end(), static_cast<std::size_t>(count), value);
        }
        if (comma == std::string_view::npos) break;
        rest.remove_prefix(comma + 1);
    }
    return Lambda(std::move(parts));
}

int Lambda::sum() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Lambda::multiplicity(int value) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

int Lambda::odd_count() const {
    return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; }));
}

bool Lambda::is_trivial() const { return parts_.back() == 1; }

std::string Lambda::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

LambdaStats lambda_stats(const Lambda& lambda) {
    return {lambda.sum(), lambda.size(), lambda.multiplicity(1), lambda.odd_count()};
}

bool is_trivial(const Lambda& lambda) { return lambda.is_trivial(); }

namespace {

// Distinct values of the finer multiset with their remaining counts.
struct Refiner {
    std::vector<int> values;
    std::vector<int> targets;  // coarser parts, descending
    std::set<std::pair<std::size_t, std::vector<int>>> dead;

    // Picks a sub-multiset summing to `need` from `counts`, starting at value
    // index `from`, then continues with the next target.
    bool pick(std::size_t target, std::vector<int>& counts, std::size_t from, int need) {
        if (need == 0) return solve(target + 1, counts);
        for (std::size_t i = from; i < values.size(); ++i) {
            if (counts[i] == 0 || values[i] > need) continue;
            --counts[i];
            bool ok = pick(target, counts, i, need - values[i]);
            ++counts[i];
            if (ok) return true;
        }
        return false;
    }

    bool solve(std::size_t target, std::vector<int>& counts) {
        if (target == targets.size()) {
            return std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; });
        }
        auto state = std::make_pair(target, counts);
        if (dead.contains(state)) return false;
        if (pick(target, counts, 0, targets[target])) return true;
        dead.insert(std::move(state));
        return false;
    }
};

struct Grouper {
    std::vector<int> items;    // finer parts, descending
    std::vector<int> minimum;  // coarser parts, ascending
    std::set<std::pair<std::size_t, std::vector<int>>> dead;

    bool dominates(std::vector<int> sums) const {
        std::sort(sums.begin(), sums.end());
        for (std::size_t i = 0; i < sums.size(); ++i) {
            if (sums[i] < minimum[i]) return false;
        }
        return true;
    }

    bool solve(std::size_t index, std::vector<int>& sums) {
        const std::size_t blocks = minimum.size();
        const std::size_t left = items.size() - index;
        if (sums.size() + left < blocks) return false;
        if (index == items.size()) return sums.size() == blocks && dominates(sums);
        std::vector<int> key = sums;
        std::sort(key.begin(), key.end());
        auto state = std::make_pair(index, key);
        if (dead.contains(state)) return false;
        for (std::size_t b = 0; b < sums.size(); ++b) {
            sums[b] += items[index];
            bool ok = solve(index + 1, sums);
            sums[b] -= items[index];
            if (ok) return true;
        }
        if (sums.size() < blocks) {
            sums.push_back(items[index]);
            bool ok = solve(index + 1, sums);
            sums.pop_back();
            if (ok) return true;
        }
        dead.insert(std::move(state));
        return false;
    }
};

}  // namespace

bool is_refinement(const Lambda& finer, const Lambda& coarser) {
    if (finer.size() < coarser.size() || finer.sum() != coarser.sum()) return false;
    Refiner r;
    std::map<int, int> hist;
    for (int p : finer.parts()) ++hist[p];
    std::vector<int> counts;
    for (auto [value, count] : hist) {
        r.values.push_back(value);
        counts.push_back(count);
    }
    // Largest values first so that big targets are placed before small ones.
    std::reverse(r.values.begin(), r.values.end());
    std::reverse(counts.begin(), counts.end());
    r.targets.assign(coarser.parts().rbegin(), coarser.parts().rend());
    return r.solve(0, counts);
}

bool lambda_leq(const Lambda& lambda, const Lambda& other) {
    if (other.size() < lambda.size() || other.sum() < lambda.sum()) return false;
    Grouper g;
    g.items.assign(other.parts().rbegin(), other.parts().rend());
    g.minimum = lambda.parts();
    std::vector<int> sums;
    return g.solve(0, sums);
}

std::vector<Lambda> partitions_of(int total) {
    if (total < 1) throw ContractError("partitions_of needs a positive total");
    std::vector<Lambda> out;
    std::vector<int> current;
    // Generates nondecreasing sequences summing to total.
    auto rec = [&](auto&& self, int remaining, int min_part) -> void {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = min_part; p <= remaining; ++p) {
            current.push_back(p);
            self(self, remaining - p, p);
            current.pop_back();
        }
    };
    rec(rec, total, 1);
    std::sort(out.begin(), out.end());
    return out;
}

PhiValue PhiValue::finite(int value) {
    PhiValue v;
    v.value_ = value;
    return v;
}

int PhiValue::value() const {
    if (!value_) throw ContractError("phi is infinite");
    return *value_;
}

std::string PhiValue::to_string() const { return value_ ? std::to_string(*value_) : "infinite"; }

int phi_choosability(int k) {
    if (k < 2) throw ContractError("phi(k) is defined for k >= 2");
    return k % 2 == 0 ? 2 * k + 2 : 2 * k + 3;
}

PhiValue phi_formula(const Lambda& lambda) {
    if (lambda.is_trivial()) return PhiValue::infinite();
    const auto s = lambda_stats(lambda);
    return PhiValue::finite(std::min(2 * s.k + s.m_odd + 2, 2 * s.k + 3 * s.m1 + 3));
}

PhiBounds phi_bounds_previous(const Lambda& lambda) {
    if (lambda.is_trivial()) throw ContractError("bounds are stated for nontrivial lambda only");
    const auto s = lambda_stats(lambda);
    return {2 * s.k + s.m1 + 2, std::min(2 * s.k + s.m_odd + 2, 2 * s.k + 5 * s.m1 + 3)};
}

}  // namespace lchoose
