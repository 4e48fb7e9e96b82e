#pragma once

#include <compare>
#include <string>
#include <vector>

#include "hstlab/label_set.hpp"

namespace hstlab {

/**
 * A triangulation of the cyclic polytope C(n, d), stored as its maximal
 * d-simplices in canonical (sorted) order.
 *
 * The constructor only enforces the structural shape (simplex sizes, label
 * range, no duplicates). Use validate() for the geometric invariants.
 */
class Triangulation {
public:
    Triangulation(int n, int d, std::vector<Simplex> simplices);

    int n() const noexcept { return n_; }
    int d() const noexcept { return d_; }
    const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
    std::size_t size() const noexcept { return simplices_.size(); }

    bool contains(Simplex s) const;
    LabelSet used_labels() const;

    /// {"n":..,"d":..,"simplices":[[..],..]} with sorted inner and outer lists.
    std::string to_json() const;
    static Triangulation from_json(const std::string& text);

    friend bool operator==(const Triangulation&, const Triangulation&) = default;
    friend std::strong_ordering operator<=>(const Triangulation& a, const Triangulation& b);

private:
    int n_;
    int d_;
    std::vector<Simplex> simplices_;
};

struct TriangulationHash {
    std::size_t operator()(const Triangulation& t) const noexcept;
};

enum class Violation {
    Shape,          ///< wrong simplex size, label out of range, duplicate simplex
    NotAdmissible,  ///< two simplices do not meet in a common face
    FaceCoverage,   ///< a (d-1)-face is not shared by two simplices nor a boundary facet
    Volume,         ///< simplex volumes do not add up to the volume of C(n, d)
    UnusedLabel,    ///< a vertex of C(n, d) (d >= 2) is missing
};

const char* to_string(Violation v) noexcept;

struct ViolationEntry {
    Violation kind;
    std::vector<Simplex> witness;
    std::string message;
};

struct ValidationReport {
    std::vector<ViolationEntry> violations;  ///< first entry is the first violated invariant

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks a candidate set of simplices against all triangulation invariants.
ValidationReport validate(const std::vector<Simplex>& candidate, int n, int d);
ValidationReport validate(const Triangulation& t);

/// Lower facets of C(V, d+1), i.e. the bottom triangulation of C(V, d).
std::vector<Simplex> bottom_simplices(LabelSet vertices, int d);
/// Upper facets of C(V, d+1), i.e. the top triangulation of C(V, d).
std::vector<Simplex> top_simplices(LabelSet vertices, int d);

Triangulation bottom(int n, int d);
Triangulation top(int n, int d);

/// (d+2)-subsets all of whose lower facets lie in t, in canonical order.
std::vector<Simplex> increasing_flips(const Triangulation& t);
/// (d+2)-subsets all of whose upper facets lie in t.
std::vector<Simplex> decreasing_flips(const Triangulation& t);

/// Replaces the lower facets of `flip` by its upper facets. Throws unless flip is increasing in t.
Triangulation apply_flip(const Triangulation& t, Simplex flip);
/// Replaces the upper facets of `flip` by its lower facets.
Triangulation apply_decreasing_flip(const Triangulation& t, Simplex flip);

/// Inclusion-maximal members of a family of label sets, sorted.
std::vector<LabelSet> maximal_faces(std::vector<LabelSet> faces);

/// f: C(n,d) -> C(n-1,d), del_T(n) ∪ (del_{lk_T(n)}(n-1) * {n-1}).
Triangulation contract_last(const Triangulation& t);
/// i: C(n-1,d) -> C(n,d), T ∪ st_{bottom(n,d)}(n).
Triangulation insert_i(const Triangulation& t);
/// j: C(n-1,d) -> C(n,d), del_T(n-1) ∪ lk_T(n-1) * {n} ∪ st_{top(n,d)}({n-1,n}).
Triangulation insert_j(const Triangulation& t);

enum class Color { Green, Red };

const char* to_string(Color c) noexcept;

/// S0 = {n-d, ..., n}
Simplex special_simplex(int n, int d);

/// Green iff (d even and S0 not in t) or (d odd and S0 in t).
Color color(const Triangulation& t);

/// i-simplices submerged by t, by exact LP.
std::vector<Simplex> submersion_set_geometric(const Triangulation& t, int i);

/// Edge / triangle foiling criterion; only for (d, i) in {(2, 1), (3, 2)}.
std::vector<Simplex> submersion_set_combinatorial(const Triangulation& t, int i);
bool has_combinatorial_submersion(int d, int i) noexcept;

/// Dispatches to the combinatorial criterion where it exists.
std::vector<Simplex> submersion_set(const Triangulation& t, int i);

} // namespace hstlab
