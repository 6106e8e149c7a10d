#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "pgt/guard.hpp"

namespace pgt {

using Label = std::uint32_t;

// Finite set of labels stored as a strictly increasing sequence. Element-wise
// equal sets are structurally identical, so operator== is extensional
// equality and sets can be used as map keys or compared in tests directly.
class OrdSet {
public:
    OrdSet() = default;
    OrdSet(std::initializer_list<Label> xs) : OrdSet(from_unsorted(std::vector<Label>(xs))) {}

    static OrdSet from_unsorted(std::vector<Label> xs) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        OrdSet s;
        s.elems_ = std::move(xs);
        return s;
    }

    // Caller guarantees xs is strictly increasing.
    static OrdSet from_sorted_unchecked(std::vector<Label> xs) {
        OrdSet s;
        s.elems_ = std::move(xs);
        return s;
    }

    bool contains(Label x) const {
        return std::binary_search(elems_.begin(), elems_.end(), x);
    }

    std::optional<std::size_t> index_of(Label x) const {
        auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
        if (it == elems_.end() || *it != x) return std::nullopt;
        return static_cast<std::size_t>(it - elems_.begin());
    }

    std::size_t size() const { return elems_.size(); }
    bool empty() const { return elems_.empty(); }
    Label at(std::size_t i) const { return elems_[i]; }
    Label operator[](std::size_t i) const { return elems_[i]; }

    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }
    const std::vector<Label>& elements() const { return elems_; }

    bool is_subset_of(const OrdSet& other) const {
        return std::includes(other.elems_.begin(), other.elems_.end(),
                             elems_.begin(), elems_.end());
    }

    friend bool operator==(const OrdSet&, const OrdSet&) = default;
    friend auto operator<=>(const OrdSet&, const OrdSet&) = default;

private:
    std::vector<Label> elems_;
};

inline bool set_equal(const OrdSet& s, const OrdSet& t) { return s == t; }

inline OrdSet set_union(const OrdSet& s, const OrdSet& t) {
    std::vector<Label> out;
    out.reserve(s.size() + t.size());
    std::set_union(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
    return OrdSet::from_sorted_unchecked(std::move(out));
}

inline OrdSet set_intersection(const OrdSet& s, const OrdSet& t) {
    std::vector<Label> out;
    std::set_intersection(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
    return OrdSet::from_sorted_unchecked(std::move(out));
}

inline OrdSet set_difference(const OrdSet& s, const OrdSet& t) {
    std::vector<Label> out;
    std::set_difference(s.begin(), s.end(), t.begin(), t.end(), std::back_inserter(out));
    return OrdSet::from_sorted_unchecked(std::move(out));
}

inline OrdSet set_insert(const OrdSet& s, Label x) {
    if (s.contains(x)) return s;
    std::vector<Label> out;
    out.reserve(s.size() + 1);
    auto mid = std::lower_bound(s.begin(), s.end(), x);
    out.insert(out.end(), s.begin(), mid);
    out.push_back(x);
    out.insert(out.end(), mid, s.end());
    return OrdSet::from_sorted_unchecked(std::move(out));
}

// All 2^|s| subsets, ordered by binary counting over the sorted element
// positions (element at position i corresponds to bit i).
inline std::vector<OrdSet> powerset(const OrdSet& s) {
    require_within_guard(s.size(), kPowersetGuard, "powerset");
    const std::size_t n = s.size();
    std::vector<OrdSet> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::vector<Label> subset;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (std::uint64_t{1} << i)) subset.push_back(s[i]);
        }
        out.push_back(OrdSet::from_sorted_unchecked(std::move(subset)));
    }
    return out;
}

} // namespace pgt
