#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hstlab/errors.hpp"
#include "hstlab/poset.hpp"
#include "hstlab/triangulation.hpp"

namespace hstlab {

/// 10^6, or the value of HSTLAB_MAX_TRIANGULATIONS when set.
std::size_t default_enumeration_cap();

struct FlipStep {
    int from;
    int to;
    Simplex flip;  ///< the (d+2)-set whose lower facets are replaced
};

/**
 * All triangulations of C(n, d), sorted canonically, together with every
 * increasing flip between them.
 */
struct Enumeration {
    int n = 0;
    int d = 0;
    std::vector<Triangulation> triangulations;
    std::vector<FlipStep> flips;  ///< sorted by (from, to)

    std::size_t size() const noexcept { return triangulations.size(); }
    std::optional<int> index_of(const Triangulation& t) const;
    /// Canonical JSON keys, used as poset element keys.
    std::vector<std::string> keys() const;
};

/// Breadth-first closure of bottom(n, d) under increasing flips.
Enumeration enumerate_triangulations(int n, int d, std::size_t cap = default_enumeration_cap());

enum class Order { S1, S2 };

const char* to_string(Order o) noexcept;
/// Parses "s1" / "s2"; throws std::invalid_argument otherwise.
Order parse_order(const std::string& text);

/// Reflexive-transitive closure of the flip steps.
FinitePoset build_s1(const Enumeration& e);

/// Containment of the ceil(d/2)-th submersion sets.
FinitePoset build_s2(const Enumeration& e);

FinitePoset build_order(const Enumeration& e, Order order);

/**
 * Submersion sets of every enumerated triangulation as bitsets over
 * `simplices` (all ceil(d/2)-simplices of [n], canonical order). Uses the
 * combinatorial criterion for d = 2, 3 and an exact-LP violation table
 * otherwise.
 */
struct SubmersionTable {
    std::vector<Simplex> simplices;
    std::vector<Bitset> sets;
};

SubmersionTable submersion_table(const Enumeration& e);

/// Cover pairs of `s1` that are not single flips, empty when the Hasse diagram is the flip graph.
std::vector<std::pair<int, int>> covers_not_flips(const Enumeration& e, const FinitePoset& s1);

} // namespace hstlab
