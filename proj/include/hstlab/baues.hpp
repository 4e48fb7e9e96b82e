#pragma once

#include <string>
#include <vector>

#include "hstlab/poset.hpp"
#include "hstlab/stasheff_tamari.hpp"
#include "hstlab/triangulation.hpp"

namespace hstlab {

/// A polytopal subdivision of C(n, d) into cyclic subpolytopes C(V_a, d).
class PolytopalSubdivision {
public:
    PolytopalSubdivision(int n, int d, std::vector<LabelSet> cells);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    const std::vector<LabelSet>& cells() const noexcept { return cells_; }

    /// Every cell has exactly d+1 vertices.
    bool is_triangulation() const;
    bool is_proper() const;

    /// {"n":..,"d":..,"cells":[[..],..]} with sorted inner and outer lists.
    std::string to_json() const;
    static PolytopalSubdivision from_json(const std::string& text);

    friend bool operator==(const PolytopalSubdivision&, const PolytopalSubdivision&) = default;
    friend std::strong_ordering operator<=>(const PolytopalSubdivision& a, const PolytopalSubdivision& b);

private:
    int n_;
    int d_;
    std::vector<LabelSet> cells_;
};

/// Empty if the cells form a polytopal subdivision of C(n, d), else the first problem found.
std::string validate_subdivision(const PolytopalSubdivision& s);

/// Every cell of `finer` lies in a cell of `coarser`.
bool refines(const PolytopalSubdivision& finer, const PolytopalSubdivision& coarser);

struct TriangulationPair {
    Triangulation lower;
    Triangulation upper;
};

/// phi(s) = [glued bottom triangulations of the cells, glued top triangulations].
TriangulationPair phi(const PolytopalSubdivision& s);

/**
 * Cells from the components of the graph on the d-simplices of `upper` whose
 * edges are shared (d-1)-faces not in `lower`. Does not check coatomicity.
 */
PolytopalSubdivision interval_to_subdivision(const Triangulation& lower, const Triangulation& upper);

/// As above, for an interval of S2; throws std::invalid_argument with a diagnostic unless coatomic.
PolytopalSubdivision interval_to_subdivision(const Enumeration& e, const FinitePoset& s2, Interval iv);

struct BauesPoset {
    FinitePoset poset;  ///< keys are subdivision JSON
    std::vector<PolytopalSubdivision> subdivisions;
    std::vector<Interval> intervals;  ///< the proper coatomic interval of S2 behind each element
    bool order_matches_intervals = false;
};

/// Proper subdivisions of C(n, d) ordered by refinement, via the coatomic intervals of S2(n, d).
BauesPoset baues_poset(const Enumeration& e, const FinitePoset& s2);
BauesPoset baues_poset(int n, int d);

struct Dissection {
    PolytopalSubdivision subdivision;
    std::vector<LabelSet> diagonals;  ///< pairwise noncrossing, nonempty
};

/// Proper subdivisions of the convex n-gon C(n, 2), listed as noncrossing diagonal sets.
std::vector<Dissection> dissection_oracle_d2(int n);

/// The dissections ordered by reverse diagonal containment; keys are subdivision JSON.
FinitePoset dissection_poset(int n);

} // namespace hstlab
