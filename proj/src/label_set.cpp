#include "hstlab/label_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace hstlab {

namespace {

void check_label(int label)
{
    if (label < 1 || label > kMaxLabel)
        throw std::invalid_argument("label " + std::to_string(label) + " outside [1, " +
                                    std::to_string(kMaxLabel) + "]");
}

} // namespace

LabelSet::LabelSet(std::initializer_list<int> labels)
    : LabelSet(from_labels(std::span<const int>(labels.begin(), labels.size())))
{
}

LabelSet LabelSet::from_labels(std::span<const int> labels)
{
    Mask mask = 0;
    for (int label : labels) {
        check_label(label);
        const Mask bit = Mask{1} << label;
        if (mask & bit) throw std::invalid_argument("repeated label " + std::to_string(label));
        mask |= bit;
    }
    return from_mask(mask);
}

LabelSet LabelSet::range(int first, int last)
{
    Mask mask = 0;
    for (int i = first; i <= last; ++i) {
        check_label(i);
        mask |= Mask{1} << i;
    }
    return from_mask(mask);
}

LabelSet LabelSet::with(int label) const
{
    check_label(label);
    return from_mask(mask_ | (Mask{1} << label));
}

LabelSet LabelSet::without(int label) const
{
    check_label(label);
    return from_mask(mask_ & ~(Mask{1} << label));
}

std::vector<int> LabelSet::labels() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int i) { out.push_back(i); });
    return out;
}

std::string LabelSet::to_string() const
{
    std::string out = "{";
    bool first = true;
    for_each([&](int i) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
    });
    out += '}';
    return out;
}

std::strong_ordering operator<=>(LabelSet a, LabelSet b) noexcept
{
    if (a.mask_ == b.mask_) return std::strong_ordering::equal;
    const LabelSet::Mask diff = a.mask_ ^ b.mask_;
    const int first_diff = std::countr_zero(diff);
    // The set holding the first differing label continues with a smaller
    // label than the other, unless the other has simply run out of labels.
    const bool a_has = (a.mask_ >> first_diff) & 1u;
    const LabelSet other = a_has ? b : a;
    const bool other_continues = other.count_above(first_diff) > 0;
    const bool a_smaller = a_has ? other_continues : !other_continues;
    return a_smaller ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::vector<LabelSet> subsets_of_size(LabelSet ground, int k)
{
    std::vector<LabelSet> out;
    const std::vector<int> labels = ground.labels();
    const int m = static_cast<int>(labels.size());
    if (k < 0 || k > m) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        LabelSet::Mask mask = 0;
        for (int i : idx) mask |= LabelSet::Mask{1} << labels[static_cast<std::size_t>(i)];
        out.push_back(LabelSet::from_mask(mask));
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    return out;
}

std::vector<LabelSet> subsets_of_size(int n, int k)
{
    return subsets_of_size(n >= 1 ? LabelSet::range(1, n) : LabelSet{}, k);
}

} // namespace hstlab
