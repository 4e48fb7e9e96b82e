#pragma once

// Independent reference computations used only by the tests. None of these
// share code paths with the library routines they are compared against.

#include <cstdint>
#include <vector>

#include "hstlab/combinatorics.hpp"
#include "hstlab/label_set.hpp"
#include "hstlab/lp.hpp"

namespace oracle {

using hstlab::FacetClass;
using hstlab::LabelSet;
using hstlab::Rational;

/// Facet class of F in conv{moment points of V} from the supporting hyperplane through F.
FacetClass hull_facet_class(LabelSet facet, LabelSet vertices, int d);

/// conv(a) ∩ conv(b) = conv(a ∩ b), decided by an exact LP on barycentric weights.
bool geometrically_admissible(LabelSet a, LabelSet b, int d);

/// Value at x of the affine interpolant of t -> t^2 through the endpoints of a segment {p, q}.
Rational segment_lift(int p, int q, const Rational& x);

/// n-th Catalan number.
std::uint64_t catalan(int n);

/// Little Schroeder numbers: dissections of a convex (n)-gon including the empty one.
std::uint64_t polygon_dissections(int n);

/// The Tamari lattice on triangulations of a convex n-gon via diagonal flips, as up-sets
/// over triangulations listed by their diagonal sets.
struct PolygonTamari {
    std::vector<std::vector<LabelSet>> triangulations;  // sorted diagonal sets
    std::vector<std::vector<bool>> leq;
};
PolygonTamari polygon_tamari(int n);

} // namespace oracle
