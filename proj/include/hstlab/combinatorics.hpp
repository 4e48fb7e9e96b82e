#pragma once

#include <utility>
#include <vector>

#include "hstlab/label_set.hpp"

// Label-level combinatorics of cyclic polytopes C(n, d): gap parity, Gale
// evenness, zig-zag admissibility and the lower/upper facet split of a simplex.

namespace hstlab {

enum class GapParity { Even, Odd };
enum class FacetClass { Lower, Upper, NotAFacet };

const char* to_string(GapParity p) noexcept;
const char* to_string(FacetClass c) noexcept;

/// Parity of the number of labels of `facet` above `gap`. Throws if gap is in facet.
GapParity gap_parity(LabelSet facet, int gap);

/**
 * Gale evenness: a d-subset F of V is a lower facet of C(V, d) iff every gap
 * in V \ F is even, an upper facet iff every gap is odd.
 * Throws unless |F| = d and F is a subset of V.
 */
FacetClass classify_facet(LabelSet facet, LabelSet vertices, int d);

/// Length of the longest (a, b)-zig-zag path: increasing labels alternating between a and b.
int longest_zig_zag(LabelSet a, LabelSet b) noexcept;

/// Two simplices intersect in a common face of C(n, d) iff no zig-zag path has length d + 2.
bool zig_zag_admissible(LabelSet a, LabelSet b, int d) noexcept;

struct FacetSplit {
    std::vector<Simplex> lower;
    std::vector<Simplex> upper;
};

/**
 * Lower and upper facets of a simplex regarded as a full-dimensional simplex
 * one dimension up: with s_0 < ... < s_k, the facet omitting s_j is lower iff
 * k - j is even. Requires at least two labels.
 */
FacetSplit simplex_facet_split(Simplex s);

struct ClassifiedFacet {
    Simplex facet;
    FacetClass cls;
};

/// Facets of C(n, d) with their class, in canonical order. Requires n >= d + 1.
std::vector<ClassifiedFacet> gale_facets(int n, int d);

/// Facets of the cyclic subpolytope C(V, d) of the given class.
std::vector<Simplex> gale_facets_of(LabelSet vertices, int d, FacetClass cls);

/// S ≺ S': S ∩ S' is an upper facet of S and a lower facet of S'.
bool precedes(Simplex s, Simplex s_prime);

} // namespace hstlab
