#include "lchoose/assignment.hpp"

#include <algorithm>
#include <numeric>

#include "lchoose/error.hpp"

namespace lchoose {

ListAssignment::ListAssignment(int universe_size, std::vector<ColourSet> lists)
    : universe_(universe_size), lists_(std::move(lists)) {
    if (universe_ < 1 || universe_ > kMaxColours) {
        throw ContractError("universe size must be in 1.." + std::to_string(kMaxColours));
    }
    const ColourSet all = first_colours(universe_);
    ColourSet seen = 0;
    for (std::size_t v = 0; v < lists_.size(); ++v) {
        if (lists_[v] == 0) throw ContractError("list of vertex " + std::to_string(v) + " is empty");
        if ((lists_[v] & ~all) != 0) {
            throw ContractError("list of vertex " + std::to_string(v) + " uses a colour outside the universe");
        }
        seen |= lists_[v];
    }
    if (seen != all) throw ContractError("some universe colour appears in no list");
}

ListAssignment ListAssignment::from_vectors(int universe_size, const std::vector<std::vector<int>>& lists) {
    std::vector<ColourSet> sets;
    sets.reserve(lists.size());
    for (const auto& l : lists) {
        ColourSet s = 0;
        for (int c : l) {
            if (c < 0 || c >= kMaxColours) throw ContractError("colour " + std::to_string(c) + " out of range");
            s |= colour_bit(c);
        }
        sets.push_back(s);
    }
    return ListAssignment(universe_size, std::move(sets));
}

std::vector<std::vector<int>> ListAssignment::to_vectors() const {
    std::vector<std::vector<int>> out;
    out.reserve(lists_.size());
    for (ColourSet s : lists_) out.push_back(colours_of(s));
    return out;
}

ColourPartition::ColourPartition(Lambda lambda, std::vector<int> class_of)
    : lambda_(std::move(lambda)), class_of_(std::move(class_of)) {
    for (int cls : class_of_) {
        if (cls < 0 || cls >= lambda_.size()) {
            throw ContractError("class index " + std::to_string(cls) + " out of range for lambda " +
                                lambda_.to_string());
        }
    }
}

ColourSet ColourPartition::class_colours(int cls) const {
    ColourSet s = 0;
    for (std::size_t c = 0; c < class_of_.size(); ++c) {
        if (class_of_[c] == cls) s |= colour_bit(static_cast<int>(c));
    }
    return s;
}

bool ColourPartition::witnesses(const ListAssignment& lists) const {
    if (lists.universe_size() != universe_size()) return false;
    for (int i = 0; i < class_count(); ++i) {
        const ColourSet cls = class_colours(i);
        for (ColourSet l : lists.lists()) {
            if (colour_count(l & cls) < quota(i)) return false;
        }
    }
    return true;
}

bool ColourPartition::is_exact_for(const ListAssignment& lists) const {
    if (lists.universe_size() != universe_size()) return false;
    for (int i = 0; i < class_count(); ++i) {
        const ColourSet cls = class_colours(i);
        for (ColourSet l : lists.lists()) {
            if (colour_count(l & cls) != quota(i)) return false;
        }
    }
    return true;
}

namespace {

class PartitionSearch {
 public:
    PartitionSearch(const ListAssignment& lists, const Lambda& lambda)
        : lists_(lists), lambda_(lambda), n_(lists.vertex_count()), q_(lambda.size()),
          have_(static_cast<std::size_t>(n_ * q_), 0), class_size_(static_cast<std::size_t>(q_), 0),
          class_of_(static_cast<std::size_t>(lists.universe_size()), -1) {
        const int u = lists.universe_size();
        std::vector<int> freq(static_cast<std::size_t>(u), 0);
        for (ColourSet l : lists.lists()) for_each_colour(l, [&](int c) { ++freq[static_cast<std::size_t>(c)]; });
        order_.resize(static_cast<std::size_t>(u));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return freq[static_cast<std::size_t>(a)] > freq[static_cast<std::size_t>(b)]; });
        for (ColourSet l : lists.lists()) unassigned_.push_back(colour_count(l));
        for (int v = 0; v < n_; ++v) deficit_.push_back(lambda.sum());
    }

    std::optional<ColourPartition> run() {
        for (int v = 0; v < n_; ++v) {
            if (unassigned_[static_cast<std::size_t>(v)] < deficit_[static_cast<std::size_t>(v)]) return std::nullopt;
        }
        if (!assign(0)) return std::nullopt;
        return ColourPartition(lambda_, class_of_);
    }

 private:
    int& have(int v, int cls) { return have_[static_cast<std::size_t>(v * q_ + cls)]; }

    bool assign(std::size_t index) {
        if (index == order_.size()) return true;
        const int colour = order_[index];
        for (int cls = 0; cls < q_; ++cls) {
            // Empty classes with equal quota are interchangeable; only try the first.
            if (class_size_[static_cast<std::size_t>(cls)] == 0) {
                bool earlier_twin = false;
                for (int j = 0; j < cls; ++j) {
                    if (class_size_[static_cast<std::size_t>(j)] == 0 && lambda_.part(j) == lambda_.part(cls)) {
                        earlier_twin = true;
                        break;
                    }
                }
                if (earlier_twin) continue;
            }
            if (place(colour, cls) && assign(index + 1)) return true;
            unplace(colour, cls);
        }
        return false;
    }

    // Returns false when some vertex can no longer reach its quotas.
    bool place(int colour, int cls) {
        class_of_[static_cast<std::size_t>(colour)] = cls;
        ++class_size_[static_cast<std::size_t>(cls)];
        bool ok = true;
        const int quota = lambda_.part(cls);
        for (int v = 0; v < n_; ++v) {
            if (!contains(lists_.list(v), colour)) continue;
            auto vi = static_cast<std::size_t>(v);
            --unassigned_[vi];
            if (have(v, cls)++ < quota) --deficit_[vi];
            if (unassigned_[vi] < deficit_[vi]) ok = false;
        }
        return ok;
    }

    void unplace(int colour, int cls) {
        class_of_[static_cast<std::size_t>(colour)] = -1;
        --class_size_[static_cast<std::size_t>(cls)];
        const int quota = lambda_.part(cls);
        for (int v = 0; v < n_; ++v) {
            if (!contains(lists_.list(v), colour)) continue;
            auto vi = static_cast<std::size_t>(v);
            ++unassigned_[vi];
            if (--have(v, cls) < quota) ++deficit_[vi];
        }
    }

    const ListAssignment& lists_;
    const Lambda& lambda_;
    int n_;
    int q_;
    std::vector<int> have_;
    std::vector<int> class_size_;
    std::vector<int> class_of_;
    std::vector<int> order_;
    std::vector<int> unassigned_;
    std::vector<int> deficit_;  // sum over classes of max(0, k_i - have)
};

}  // namespace

std::optional<ColourPartition> find_lambda_partition(const ListAssignment& lists, const Lambda& lambda) {
    return PartitionSearch(lists, lambda).run();
}

LambdaAssignment trim_to_exact(const ListAssignment& lists, const ColourPartition& partition) {
    if (!partition.witnesses(lists)) throw ContractError("partition does not witness the list assignment");
    std::vector<ColourSet> classes;
    for (int i = 0; i < partition.class_count(); ++i) classes.push_back(partition.class_colours(i));

    std::vector<ColourSet> kept;
    ColourSet used = 0;
    for (ColourSet l : lists.lists()) {
        ColourSet out = 0;
        for (int i = 0; i < partition.class_count(); ++i) {
            ColourSet inter = l & classes[static_cast<std::size_t>(i)];
            for (int j = 0; j < partition.quota(i); ++j) {
                out |= inter & (~inter + 1);  // lowest set bit
                inter &= inter - 1;
            }
        }
        kept.push_back(out);
        used |= out;
    }

    std::vector<int> renumber(static_cast<std::size_t>(lists.universe_size()), -1);
    std::vector<int> class_of;
    int next = 0;
    for_each_colour(used, [&](int c) {
        renumber[static_cast<std::size_t>(c)] = next++;
        class_of.push_back(partition.class_of(c));
    });
    for (ColourSet& l : kept) {
        ColourSet mapped = 0;
        for_each_colour(l, [&](int c) { mapped |= colour_bit(renumber[static_cast<std::size_t>(c)]); });
        l = mapped;
    }
    return {ListAssignment(next, std::move(kept)), ColourPartition(partition.lambda(), std::move(class_of))};
}

}  // namespace lchoose
