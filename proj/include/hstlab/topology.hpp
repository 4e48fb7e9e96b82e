#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "hstlab/errors.hpp"
#include "hstlab/poset.hpp"

namespace hstlab {

/// Default total face budget for order complexes.
inline constexpr std::size_t kDefaultFaceBudget = 2'000'000;

/**
 * The order complex of a finite poset: every chain x_0 < ... < x_k is a
 * k-face. Faces of each dimension are stored flat (k+1 element indices per
 * face, increasing in the poset) and sorted lexicographically.
 */
class OrderComplex {
public:
    /// Throws ResourceLimitExceeded once more than `face_budget` faces appear.
    static OrderComplex of(const FinitePoset& p, std::size_t face_budget = kDefaultFaceBudget);

    /// Highest face dimension, -1 for the empty complex.
    int dimension() const noexcept { return static_cast<int>(faces_.size()) - 1; }
    std::size_t face_count(int k) const;
    std::vector<std::size_t> face_counts() const;
    std::size_t total_faces() const;
    /// Element indices of the i-th k-face.
    std::vector<int> face(int k, std::size_t i) const;
    /// Position of a face among the k-faces, if present.
    std::optional<std::size_t> find(const std::vector<int>& chain) const;

    /// Sum of (-1)^k f_k including the empty face.
    std::int64_t reduced_euler_characteristic() const;

private:
    std::vector<std::vector<int>> faces_;  // faces_[k] holds face_count(k) * (k+1) ints
};

struct HomologyGroup {
    std::int64_t betti = 0;
    std::vector<mpz_class> torsion;  ///< invariant factors > 1, each dividing the next

    bool trivial() const { return betti == 0 && torsion.empty(); }
    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// Reduced integral homology, H~_k for k = -1 .. dimension().
struct HomologyResult {
    std::map<int, HomologyGroup> groups;
    std::int64_t euler = 0;  ///< reduced Euler characteristic from face counts

    HomologyGroup at(int k) const;
    bool acyclic() const;
    /// Dimension k if the homology is that of S^k (Z in degree k, zero elsewhere).
    std::optional<int> sphere_dimension() const;
    /// Same homology in every degree.
    bool same_as(const HomologyResult& other) const;
    /// H~_k(this) = H~_{k+shift}(other) for all k.
    bool shifted_equals(const HomologyResult& other, int shift) const;
    /// "S^1", "acyclic", or a degree list such as "H0=Z^2 H1=Z/2".
    std::string describe() const;
    /// {"dims":{"k":{"betti":b,"torsion":[...]}},"euler":e} plus "mobius_crosscheck" when given.
    std::string to_json(std::optional<std::int64_t> mobius = std::nullopt) const;
};

HomologyResult homology(const OrderComplex& k);

/// Rank and invariant factors (> 1) of an integer matrix given by sparse columns.
struct SmithInvariants {
    std::size_t rank = 0;
    std::vector<mpz_class> torsion;
};

using SparseColumn = std::vector<std::pair<int, std::int64_t>>;  // (row, value), rows increasing
SmithInvariants smith_invariants(std::vector<SparseColumn> columns, int rows);

struct SphereCertificate {
    bool passed = false;
    HomologyResult homology;
    std::int64_t mobius = 0;  ///< mu of the bounded extension, bottom to top
    std::string message;
};

/**
 * Homology-level sphere test for a proper part P: H~(Δ(P)) must be Z in
 * degree k and zero elsewhere, and the reduced Euler characteristic must
 * equal mu(0, 1) of P with a bottom and top adjoined.
 */
SphereCertificate sphere_certificate(const FinitePoset& proper, int k, std::size_t face_budget = kDefaultFaceBudget);

struct TopologyCheck {
    bool passed = false;
    std::string message;
};

/**
 * H~_k(proper L) = H~_{k+1}(proper Int(L)) for every k, and Int(L) has the
 * (trivial) homology of L. L must be bounded.
 */
TopologyCheck suspension_compare(const FinitePoset& lattice, std::size_t face_budget = kDefaultFaceBudget);

struct WebbReport {
    bool passed = false;
    std::size_t proper_intervals = 0;
    std::size_t removed = 0;
    std::size_t survivors = 0;
    std::size_t coatomic = 0;
    bool survivors_are_coatomic = false;
    std::string message;
};

/**
 * Removes from proper Int(L) every interval [x, y] whose open interval has
 * trivial reduced homology (and mu(x, y) = 0) and checks that the survivors,
 * and the proper coatomic intervals, keep the homology of proper Int(L).
 * Every non-coatomic interval must be removable. Homology-level only.
 */
WebbReport webb_reduction_check(const FinitePoset& lattice, std::size_t face_budget = kDefaultFaceBudget);

} // namespace hstlab
