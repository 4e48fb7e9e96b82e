#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hstlab {

/// Largest vertex label a LabelSet can hold.
inline constexpr int kMaxLabel = 31;

/**
 * A finite set of vertex labels drawn from [1, kMaxLabel], stored as a bitmask
 * (bit i <=> label i). Simplices, facets and polytopal cells are all label
 * sets; the dimension of a simplex is size() - 1.
 *
 * Ordering is lexicographic on the increasing label sequence, so sorting a
 * container of label sets yields the canonical order used in all exports.
 */
class LabelSet {
public:
    using Mask = std::uint32_t;

    constexpr LabelSet() = default;

    /// Rejects labels outside [1, kMaxLabel] and repeated labels.
    LabelSet(std::initializer_list<int> labels);
    static LabelSet from_labels(std::span<const int> labels);

    static constexpr LabelSet from_mask(Mask mask) noexcept
    {
        LabelSet s;
        s.mask_ = mask & ~Mask{1};
        return s;
    }

    /// The interval {first, ..., last}.
    static LabelSet range(int first, int last);

    constexpr Mask mask() const noexcept { return mask_; }
    constexpr int size() const noexcept { return std::popcount(mask_); }
    constexpr int dimension() const noexcept { return size() - 1; }
    constexpr bool empty() const noexcept { return mask_ == 0; }

    constexpr bool contains(int label) const noexcept
    {
        return label >= 1 && label <= kMaxLabel && ((mask_ >> label) & 1u) != 0;
    }
    constexpr bool is_subset_of(LabelSet other) const noexcept
    {
        return (mask_ & ~other.mask_) == 0;
    }

    constexpr int min_label() const noexcept { return mask_ == 0 ? 0 : std::countr_zero(mask_); }
    constexpr int max_label() const noexcept { return mask_ == 0 ? 0 : 31 - std::countl_zero(mask_); }

    /// Number of members strictly greater than `label`.
    constexpr int count_above(int label) const noexcept
    {
        if (label >= kMaxLabel) return 0;
        return std::popcount(mask_ & ~((Mask{2} << label) - 1));
    }

    LabelSet with(int label) const;
    LabelSet without(int label) const;

    friend constexpr LabelSet operator|(LabelSet a, LabelSet b) noexcept { return from_mask(a.mask_ | b.mask_); }
    friend constexpr LabelSet operator&(LabelSet a, LabelSet b) noexcept { return from_mask(a.mask_ & b.mask_); }
    friend constexpr LabelSet operator-(LabelSet a, LabelSet b) noexcept { return from_mask(a.mask_ & ~b.mask_); }

    std::vector<int> labels() const;

    /// Calls fn(label) for each member in increasing order.
    template <class Fn>
    void for_each(Fn&& fn) const
    {
        for (Mask m = mask_; m != 0; m &= m - 1) fn(std::countr_zero(m));
    }

    /// "{1,3,4}"
    std::string to_string() const;

    friend constexpr bool operator==(LabelSet a, LabelSet b) noexcept = default;
    friend std::strong_ordering operator<=>(LabelSet a, LabelSet b) noexcept;

private:
    Mask mask_ = 0;
};

/// Simplices are identified with their vertex sets.
using Simplex = LabelSet;

/// All k-element subsets of [1, n], in canonical order.
std::vector<LabelSet> subsets_of_size(int n, int k);

/// All k-element subsets of `ground`, in canonical order.
std::vector<LabelSet> subsets_of_size(LabelSet ground, int k);

} // namespace hstlab

template <>
struct std::hash<hstlab::LabelSet> {
    std::size_t operator()(hstlab::LabelSet s) const noexcept { return std::hash<std::uint32_t>{}(s.mask()); }
};
