#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lchoose {

/// A multiset of positive integers {k_1, ..., k_q}, stored sorted ascending.
///
/// Two values are equal iff their sorted part lists are equal. Text form is
/// `entry ("," entry)*` with `entry := INT | INT "*" INT` (value*count);
/// to_string() always emits the expanded ascending form.
class Lambda {
 public:
    explicit Lambda(std::vector<int> parts);

    static Lambda parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int part(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    int size() const { return static_cast<int>(parts_.size()); }

    /// k_lambda, the sum of the parts.
    int sum() const;
    int multiplicity(int value) const;
    int odd_count() const;
    int max_part() const { return parts_.back(); }

    /// True iff every part is 1.
    bool is_trivial() const;

    std::string to_string() const;

    friend bool operator==(const Lambda&, const Lambda&) = default;
    friend auto operator<=>(const Lambda&, const Lambda&) = default;

 private:
    std::vector<int> parts_;
};

struct LambdaStats {
    int k = 0;      // sum of parts
    int q = 0;      // number of parts
    int m1 = 0;     // multiplicity of 1
    int m_odd = 0;  // number of odd parts

    friend bool operator==(const LambdaStats&, const LambdaStats&) = default;
};

LambdaStats lambda_stats(const Lambda& lambda);

bool is_trivial(const Lambda& lambda);

/// True iff the parts of `finer` can be grouped into coarser.size() blocks whose
/// sums are exactly the parts of `coarser`.
bool is_refinement(const Lambda& finer, const Lambda& coarser);

/// The order lambda <= other: other refines some multiset obtained from
/// `lambda` by increasing parts. Under it, every lambda-choosable graph is
/// other-choosable.
bool lambda_leq(const Lambda& lambda, const Lambda& other);

/// All multisets with the given sum, in ascending Lambda order.
std::vector<Lambda> partitions_of(int total);

/// Either a finite vertex count or infinity (trivial lambda).
class PhiValue {
 public:
    static PhiValue finite(int value);
    static PhiValue infinite() { return PhiValue{}; }

    bool is_infinite() const { return !value_.has_value(); }
    /// Throws ContractError when infinite.
    int value() const;

    std::string to_string() const;

    friend bool operator==(const PhiValue&, const PhiValue&) = default;

 private:
    PhiValue() = default;
    std::optional<int> value_;
};

/// Minimum order of a non-k-choosable k-chromatic graph: 2k+2 for even k,
/// 2k+3 for odd k (k >= 2).
int phi_choosability(int k);

/// min{2k + m_odd + 2, 2k + 3 m_1 + 3}, or infinity for trivial lambda.
PhiValue phi_formula(const Lambda& lambda);

struct PhiBounds {
    int lower = 0;
    int upper = 0;

    friend bool operator==(const PhiBounds&, const PhiBounds&) = default;
};

/// The earlier bounds 2k + m_1 + 2 <= phi <= min{2k + m_odd + 2, 2k + 5 m_1 + 3}.
/// Throws ContractError for trivial lambda.
PhiBounds phi_bounds_previous(const Lambda& lambda);

}  // namespace lchoose
