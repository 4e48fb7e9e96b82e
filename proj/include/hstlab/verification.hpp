#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hstlab/poset.hpp"
#include "hstlab/stasheff_tamari.hpp"
#include "hstlab/triangulation.hpp"

namespace hstlab {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string witness;  ///< a concrete counterexample when failed
};

/// Outcome of checking the suspension hypotheses for P = S(n, d), Q = S(n-1, d).
struct SuspensionReport {
    int n = 0;
    int d = 0;
    Order order = Order::S1;
    /// green_ideal, f_i_identity, f_j_identity, image_colors, sandwich,
    /// fiber_bottom, fiber_top, maps_monotone (in this order)
    std::vector<CheckResult> checks;

    bool ok() const;
    std::string to_json() const;
};

SuspensionReport verify_suspension(int n, int d, Order order);

/// Precomputed variant for callers that already hold both posets.
SuspensionReport verify_suspension(const Enumeration& p, const FinitePoset& p_order, const Enumeration& q,
                                   const FinitePoset& q_order, Order order);

/**
 * Union of the flip sets along one shortest increasing flip path from
 * `from` to `to`, or nullopt if to is not reachable.
 */
std::optional<std::vector<Simplex>> find_connecting_set(const Enumeration& e, int from, int to);

struct ConnectingResult {
    bool passed = true;
    int failed_condition = 0;  ///< 1..6 when failed
    std::string detail;
};

/**
 * Conditions (i)-(vi) under which a set of (d+1)-simplices triangulates the
 * region between the characteristic sections of t and t_prime.
 */
ConnectingResult verify_connecting_set(const Triangulation& t, const Triangulation& t_prime,
                                       const std::vector<Simplex>& connecting);

/// {S ∪ {n-1} : S ∈ t, n ∈ S, n-1 ∉ S}
std::vector<Simplex> sweep_set_a(const Triangulation& t);
/// {S ∪ {n} : S ∈ t, n-1 ∈ S, n ∉ S}
std::vector<Simplex> sweep_set_b(const Triangulation& t);

/// S0 membership is monotone along the order (direction depends on the parity of d).
CheckResult verify_s0_monotone(const Enumeration& e, const FinitePoset& order);

/// All triangulations by backtracking over candidate d-simplices; for tiny instances only.
std::vector<Triangulation> brute_force_triangulations(int n, int d, std::size_t max_candidates = 40);

} // namespace hstlab
