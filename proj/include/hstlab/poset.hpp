#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace hstlab {

using Bitset = boost::dynamic_bitset<std::uint64_t>;

/**
 * A finite poset over indexed elements with opaque string keys.
 *
 * The order relation is kept as one up-set bitset per element; the Hasse
 * diagram and a linear extension are derived once at construction.
 * Instances are immutable and safe to query concurrently, apart from the
 * Möbius cache which is filled lazily by mobius_from().
 */
class FinitePoset {
public:
    FinitePoset() = default;

    /// up[x] = {y : x <= y}. Throws std::invalid_argument unless this is a partial order.
    static FinitePoset from_up_sets(std::vector<std::string> keys, std::vector<Bitset> up);

    /// Reflexive-transitive closure of the given step relation (must be acyclic).
    static FinitePoset from_steps(std::vector<std::string> keys, const std::vector<std::pair<int, int>>& steps);

    int size() const noexcept { return static_cast<int>(keys_.size()); }
    const std::vector<std::string>& keys() const noexcept { return keys_; }
    const std::string& key(int x) const { return keys_.at(static_cast<std::size_t>(x)); }
    std::optional<int> index_of(const std::string& key) const;

    bool leq(int x, int y) const { return up_[static_cast<std::size_t>(x)].test(static_cast<std::size_t>(y)); }
    bool less(int x, int y) const { return x != y && leq(x, y); }
    const Bitset& up_set(int x) const { return up_[static_cast<std::size_t>(x)]; }
    const Bitset& down_set(int x) const { return down_[static_cast<std::size_t>(x)]; }

    /// Elements covering x (Hasse diagram, upward), ascending index.
    const std::vector<int>& upper_covers(int x) const { return upper_covers_[static_cast<std::size_t>(x)]; }
    const std::vector<int>& lower_covers(int x) const { return lower_covers_[static_cast<std::size_t>(x)]; }
    /// All covering pairs (x, y), x covered by y, sorted.
    std::vector<std::pair<int, int>> cover_pairs() const;

    /// Elements in an order compatible with <=.
    const std::vector<int>& linear_extension() const noexcept { return linear_extension_; }

    std::optional<int> bottom() const;
    std::optional<int> top() const;
    bool is_bounded() const { return bottom() && top(); }

    /// Induced subposet on the given elements (kept in the given order).
    FinitePoset subposet(const std::vector<int>& elements) const;
    /// The poset minus its bottom and top; throws unless bounded.
    FinitePoset proper_part() const;
    /// Elements strictly between x and y.
    FinitePoset open_interval(int x, int y) const;
    /// P with a new bottom and top adjoined (keys "<bottom>" and "<top>").
    FinitePoset bounded_extension() const;

    /// mu(x, y); throws unless x <= y. Memoized per x.
    std::int64_t mobius(int x, int y) const;
    /// mu(x, y) for every y >= x (entries for other y are zero).
    const std::vector<std::int64_t>& mobius_from(int x) const;

    /// Least upper bound / greatest lower bound if it exists.
    std::optional<int> join(int x, int y) const;
    std::optional<int> meet(int x, int y) const;

    /// {"elements":[key,...],"covers":[[i,j],...]}
    std::string to_json() const;
    /// Hasse diagram in DOT, node ids in index order.
    std::string to_dot(const std::string& name = "poset") const;

private:
    void finish();

    std::vector<std::string> keys_;
    std::vector<Bitset> up_;
    std::vector<Bitset> down_;
    std::vector<std::vector<int>> upper_covers_;
    std::vector<std::vector<int>> lower_covers_;
    std::vector<int> linear_extension_;
    std::vector<int> position_;  // inverse of linear_extension_
    std::unordered_map<std::string, int> index_;
    mutable std::unordered_map<int, std::vector<std::int64_t>> mobius_cache_;
};

enum class LatticeFailure { NoJoin, NoMeet };

const char* to_string(LatticeFailure f) noexcept;

struct LatticeWitness {
    int x;
    int y;
    LatticeFailure reason;
};

/// nullopt if every pair has a meet and a join, else the first failing pair.
std::optional<LatticeWitness> lattice_witness(const FinitePoset& p);
inline bool is_lattice(const FinitePoset& p) { return !lattice_witness(p).has_value(); }

struct Interval {
    int lower;
    int upper;

    friend bool operator==(const Interval&, const Interval&) = default;
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Meet of all coatoms of [x, y] equals x (the empty meet of [x, x] is x).
bool is_coatomic(const FinitePoset& lattice, Interval iv);
/// Join of all atoms of [x, y] equals y.
bool is_atomic(const FinitePoset& lattice, Interval iv);

/// Empty when coatomic, else a description of which coatom meet fails.
std::string coatomic_diagnostic(const FinitePoset& lattice, Interval iv);

enum class IntervalVariant { All, Proper, ProperAtomic, ProperCoatomic };

struct IntervalPoset {
    FinitePoset poset;
    std::vector<Interval> intervals;  ///< element index -> interval of the base poset
};

/**
 * Intervals of p ordered by inclusion. Proper variants drop [0̂, 1̂]; the
 * atomic and coatomic variants require p to be a lattice.
 */
IntervalPoset interval_poset(const FinitePoset& p, IntervalVariant variant);

/// Intervals of p in the given index set, ordered by inclusion.
IntervalPoset interval_poset_of(const FinitePoset& p, std::vector<Interval> intervals);

struct RelationDifference {
    int x;
    int y;
    bool in_first;  ///< x <= y holds in the first poset but not the second, or vice versa
};

/// Compares two relations over the same keys; nullopt if equal. Throws on key mismatch.
std::optional<RelationDifference> compare_relations(const FinitePoset& p, const FinitePoset& q);

/// The relation of p is contained in that of q (same keys).
bool relation_contained(const FinitePoset& p, const FinitePoset& q);

/// Boolean lattice on k atoms; keys are the subsets as bit strings.
FinitePoset boolean_lattice(int k);
/// Chain 0 < 1 < ... < k-1.
FinitePoset chain(int k);

} // namespace hstlab
