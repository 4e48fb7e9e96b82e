#include "hstlab/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace hstlab {

const char* to_string(GapParity p) noexcept
{
    return p == GapParity::Even ? "even" : "odd";
}

const char* to_string(FacetClass c) noexcept
{
    switch (c) {
    case FacetClass::Lower: return "lower";
    case FacetClass::Upper: return "upper";
    case FacetClass::NotAFacet: return "not-a-facet";
    }
    return "?";
}

GapParity gap_parity(LabelSet facet, int gap)
{
    if (facet.contains(gap))
        throw std::invalid_argument("gap " + std::to_string(gap) + " lies in " + facet.to_string());
    return facet.count_above(gap) % 2 == 0 ? GapParity::Even : GapParity::Odd;
}

FacetClass classify_facet(LabelSet facet, LabelSet vertices, int d)
{
    if (facet.size() != d)
        throw std::invalid_argument(facet.to_string() + " does not have " + std::to_string(d) + " labels");
    if (!facet.is_subset_of(vertices))
        throw std::invalid_argument(facet.to_string() + " is not contained in " + vertices.to_string());
    bool even = false;
    bool odd = false;
    (vertices - facet).for_each([&](int gap) {
        if (facet.count_above(gap) % 2 == 0)
            even = true;
        else
            odd = true;
    });
    if (even && odd) return FacetClass::NotAFacet;
    // With no gaps at all F = V, which is both; callers only see this for
    // |V| = d, where the lone facet counts as lower.
    return odd ? FacetClass::Upper : FacetClass::Lower;
}

int longest_zig_zag(LabelSet a, LabelSet b) noexcept
{
    // ending_a: longest path whose last star is taken from a; likewise ending_b.
    int ending_a = 0;
    int ending_b = 0;
    (a | b).for_each([&](int label) {
        const int next_a = a.contains(label) ? ending_b + 1 : 0;
        const int next_b = b.contains(label) ? ending_a + 1 : 0;
        ending_a = std::max(ending_a, next_a);
        ending_b = std::max(ending_b, next_b);
    });
    return std::max(ending_a, ending_b);
}

bool zig_zag_admissible(LabelSet a, LabelSet b, int d) noexcept
{
    return longest_zig_zag(a, b) <= d + 1;
}

FacetSplit simplex_facet_split(Simplex s)
{
    if (s.size() < 2) throw std::invalid_argument("facet split needs at least two labels");
    FacetSplit out;
    const int k = s.size() - 1;
    int j = 0;
    s.for_each([&](int label) {
        const Simplex facet = s.without(label);
        if ((k - j) % 2 == 0)
            out.lower.push_back(facet);
        else
            out.upper.push_back(facet);
        ++j;
    });
    std::sort(out.lower.begin(), out.lower.end());
    std::sort(out.upper.begin(), out.upper.end());
    return out;
}

std::vector<ClassifiedFacet> gale_facets(int n, int d)
{
    if (n < d + 1) throw std::invalid_argument("gale_facets needs n >= d + 1");
    const LabelSet ground = LabelSet::range(1, n);
    std::vector<ClassifiedFacet> out;
    for (Simplex f : subsets_of_size(ground, d)) {
        const FacetClass c = classify_facet(f, ground, d);
        if (c != FacetClass::NotAFacet) out.push_back({f, c});
    }
    return out;
}

std::vector<Simplex> gale_facets_of(LabelSet vertices, int d, FacetClass cls)
{
    std::vector<Simplex> out;
    if (vertices.size() < d) return out;
    for (Simplex f : subsets_of_size(vertices, d)) {
        FacetClass c = classify_facet(f, vertices, d);
        // A gap-free facet (|V| = d) is both lower and upper.
        if (f == vertices) c = cls;
        if (c == cls) out.push_back(f);
    }
    return out;
}

bool precedes(Simplex s, Simplex s_prime)
{
    const Simplex shared = s & s_prime;
    if (s.size() != s_prime.size() || shared.size() != s.size() - 1) return false;
    const int gap_in_s = (s - shared).min_label();
    const int gap_in_s_prime = (s_prime - shared).min_label();
    const bool upper_in_s = shared.count_above(gap_in_s) % 2 == 1;
    const bool lower_in_s_prime = shared.count_above(gap_in_s_prime) % 2 == 0;
    return upper_in_s && lower_in_s_prime;
}

} // namespace hstlab
