#pragma once

#include <vector>

#include <gmpxx.h>

#include "hstlab/label_set.hpp"
#include "hstlab/lp.hpp"

// Exact geometry of the moment curve. Nothing here uses floating point.

namespace hstlab {

using MomentPoint = std::vector<Rational>;

/// (i, i^2, ..., i^d)
MomentPoint moment_point(int label, int d);

/// |det| of the edge vectors of a d-simplex on the moment curve in R^d.
mpz_class normalized_volume(Simplex s, int d);

/// Sum of normalized volumes of the bottom triangulation of C(V, d).
mpz_class hull_volume(LabelSet vertices, int d);

/// The affine h on R^d with h(moment_point(v, d)) = v^(d+1) for every vertex v of s.
AffineFunctional lift_functional(Simplex s, int d);

/// Crossing: the lifts cross over a full-dimensional overlap.
enum class HeightRelation { Below, Above, Equal, Incomparable, Crossing };

const char* to_string(HeightRelation r) noexcept;

/**
 * Compares the lifts of two d-simplices over the intersection of their
 * projections. Below means the lift of `s` is weakly lower than the lift of
 * `s_prime` everywhere on the overlap and strictly lower somewhere; overlaps
 * without interior are Incomparable.
 */
HeightRelation relative_height(Simplex s, Simplex s_prime, int d);

/// True iff the interiors of conv(s) and conv(s_prime) meet (both d-simplices in R^d).
bool interiors_overlap(Simplex s, Simplex s_prime, int d);

/**
 * max over x in conv(sigma) ∩ conv(s) of (lift_sigma(x) - lift_s(x)), where
 * sigma is any simplex and s a d-simplex. Infeasible when the hulls are disjoint.
 */
LpResult max_lift_excess(Simplex sigma, Simplex s, int d);

/// sigma lies weakly below the characteristic section of the triangulation with the given simplices.
bool submerged(Simplex sigma, const std::vector<Simplex>& triangulation, int d);

} // namespace hstlab
