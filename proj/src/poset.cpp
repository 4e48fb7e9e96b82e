#include "hstlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace hstlab {

namespace {

template <class Fn>
void for_each_bit(const Bitset& b, Fn&& fn)
{
    for (auto i = b.find_first(); i != Bitset::npos; i = b.find_next(i)) fn(static_cast<int>(i));
}

std::size_t idx(int x)
{
    return static_cast<std::size_t>(x);
}

} // namespace

FinitePoset FinitePoset::from_up_sets(std::vector<std::string> keys, std::vector<Bitset> up)
{
    const std::size_t n = keys.size();
    if (up.size() != n) throw std::invalid_argument("poset: key/relation size mismatch");
    for (std::size_t x = 0; x < n; ++x) {
        if (up[x].size() != n) throw std::invalid_argument("poset: up-set has wrong width");
        if (!up[x].test(x)) throw std::invalid_argument("poset: relation not reflexive at " + keys[x]);
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (auto y = up[x].find_next(x); y != Bitset::npos; y = up[x].find_next(y)) {
            if (up[y].test(x)) throw std::invalid_argument("poset: relation not antisymmetric at " + keys[x]);
        }
        for (std::size_t y = 0; y < x; ++y)
            if (up[x].test(y) && up[y].test(x)) throw std::invalid_argument("poset: relation not antisymmetric");
        for (auto y = up[x].find_first(); y != Bitset::npos; y = up[x].find_next(y))
            if (!up[y].is_subset_of(up[x])) throw std::invalid_argument("poset: relation not transitive at " + keys[x]);
    }
    FinitePoset p;
    p.keys_ = std::move(keys);
    p.up_ = std::move(up);
    p.finish();
    return p;
}

FinitePoset FinitePoset::from_steps(std::vector<std::string> keys, const std::vector<std::pair<int, int>>& steps)
{
    const std::size_t n = keys.size();
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indegree(n, 0);
    for (auto [a, b] : steps) {
        if (a < 0 || b < 0 || idx(a) >= n || idx(b) >= n) throw std::invalid_argument("poset: step out of range");
        succ[idx(a)].push_back(b);
        ++indegree[idx(b)];
    }
    std::vector<int> order;
    order.reserve(n);
    std::queue<int> ready;
    for (std::size_t x = 0; x < n; ++x)
        if (indegree[x] == 0) ready.push(static_cast<int>(x));
    while (!ready.empty()) {
        const int x = ready.front();
        ready.pop();
        order.push_back(x);
        for (int y : succ[idx(x)])
            if (--indegree[idx(y)] == 0) ready.push(y);
    }
    if (order.size() != n) throw std::invalid_argument("poset: step relation has a cycle");

    std::vector<Bitset> up(n, Bitset(n));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Bitset& u = up[idx(*it)];
        u.set(idx(*it));
        for (int y : succ[idx(*it)]) u |= up[idx(y)];
    }
    return from_up_sets(std::move(keys), std::move(up));
}

void FinitePoset::finish()
{
    const std::size_t n = keys_.size();
    down_.assign(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x) for_each_bit(up_[x], [&](int y) { down_[idx(y)].set(x); });

    linear_extension_.resize(n);
    std::iota(linear_extension_.begin(), linear_extension_.end(), 0);
    std::stable_sort(linear_extension_.begin(), linear_extension_.end(),
                     [&](int a, int b) { return down_[idx(a)].count() < down_[idx(b)].count(); });
    position_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) position_[idx(linear_extension_[i])] = static_cast<int>(i);

    upper_covers_.assign(n, {});
    lower_covers_.assign(n, {});
    for (std::size_t x = 0; x < n; ++x) {
        Bitset strict = up_[x];
        strict.reset(x);
        Bitset dominated(n);
        for_each_bit(strict, [&](int z) {
            Bitset above = up_[idx(z)];
            above.reset(idx(z));
            dominated |= above;
        });
        strict -= dominated;
        for_each_bit(strict, [&](int y) {
            upper_covers_[x].push_back(y);
            lower_covers_[idx(y)].push_back(static_cast<int>(x));
        });
    }

    index_.clear();
    for (std::size_t x = 0; x < n; ++x) index_.emplace(keys_[x], static_cast<int>(x));
    mobius_cache_.clear();
}

std::optional<int> FinitePoset::index_of(const std::string& key) const
{
    auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, int>> FinitePoset::cover_pairs() const
{
    std::vector<std::pair<int, int>> out;
    for (int x = 0; x < size(); ++x)
        for (int y : upper_covers_[idx(x)]) out.emplace_back(x, y);
    return out;
}

std::optional<int> FinitePoset::bottom() const
{
    for (int x = 0; x < size(); ++x)
        if (up_[idx(x)].all()) return x;
    return std::nullopt;
}

std::optional<int> FinitePoset::top() const
{
    for (int x = 0; x < size(); ++x)
        if (down_[idx(x)].all()) return x;
    return std::nullopt;
}

FinitePoset FinitePoset::subposet(const std::vector<int>& elements) const
{
    const std::size_t m = elements.size();
    std::vector<std::string> keys;
    keys.reserve(m);
    for (int e : elements) keys.push_back(keys_.at(idx(e)));
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (leq(elements[i], elements[j])) up[i].set(j);
    FinitePoset p;
    p.keys_ = std::move(keys);
    p.up_ = std::move(up);
    p.finish();
    return p;
}

FinitePoset FinitePoset::proper_part() const
{
    const auto b = bottom();
    const auto t = top();
    if (!b || !t) throw std::invalid_argument("proper_part: poset is not bounded");
    std::vector<int> keep;
    for (int x = 0; x < size(); ++x)
        if (x != *b && x != *t) keep.push_back(x);
    return subposet(keep);
}

FinitePoset FinitePoset::open_interval(int x, int y) const
{
    std::vector<int> keep;
    Bitset between = up_.at(idx(x)) & down_.at(idx(y));
    between.reset(idx(x));
    between.reset(idx(y));
    for_each_bit(between, [&](int z) { keep.push_back(z); });
    return subposet(keep);
}

FinitePoset FinitePoset::bounded_extension() const
{
    const std::size_t n = keys_.size();
    const std::size_t m = n + 2;
    std::vector<std::string> keys = keys_;
    keys.emplace_back("<bottom>");
    keys.emplace_back("<top>");
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t x = 0; x < n; ++x) {
        for_each_bit(up_[x], [&](int y) { up[x].set(idx(y)); });
        up[x].set(n + 1);
    }
    up[n].set();
    up[n + 1].set(n + 1);
    FinitePoset p;
    p.keys_ = std::move(keys);
    p.up_ = std::move(up);
    p.finish();
    return p;
}

const std::vector<std::int64_t>& FinitePoset::mobius_from(int x) const
{
    if (auto it = mobius_cache_.find(x); it != mobius_cache_.end()) return it->second;
    std::vector<std::int64_t> mu(keys_.size(), 0);
    const Bitset& above = up_.at(idx(x));
    for (int y : linear_extension_) {
        if (!above.test(idx(y))) continue;
        if (y == x) {
            mu[idx(y)] = 1;
            continue;
        }
        std::int64_t sum = 0;
        Bitset between = above & down_[idx(y)];
        between.reset(idx(y));
        for_each_bit(between, [&](int z) { sum += mu[idx(z)]; });
        mu[idx(y)] = -sum;
    }
    return mobius_cache_.emplace(x, std::move(mu)).first->second;
}

std::int64_t FinitePoset::mobius(int x, int y) const
{
    if (!leq(x, y)) throw std::invalid_argument("mobius: " + key(x) + " is not below " + key(y));
    return mobius_from(x)[idx(y)];
}

std::optional<int> FinitePoset::join(int x, int y) const
{
    const Bitset common = up_.at(idx(x)) & up_.at(idx(y));
    int best = -1;
    for_each_bit(common, [&](int z) {
        if (best < 0 || position_[idx(z)] < position_[idx(best)]) best = z;
    });
    if (best < 0 || !common.is_subset_of(up_[idx(best)])) return std::nullopt;
    return best;
}

std::optional<int> FinitePoset::meet(int x, int y) const
{
    const Bitset common = down_.at(idx(x)) & down_.at(idx(y));
    int best = -1;
    for_each_bit(common, [&](int z) {
        if (best < 0 || position_[idx(z)] > position_[idx(best)]) best = z;
    });
    if (best < 0 || !common.is_subset_of(down_[idx(best)])) return std::nullopt;
    return best;
}

std::string FinitePoset::to_json() const
{
    nlohmann::ordered_json j;
    j["elements"] = keys_;
    auto covers = nlohmann::ordered_json::array();
    for (auto [x, y] : cover_pairs()) covers.push_back({x, y});
    j["covers"] = std::move(covers);
    return j.dump();
}

std::string FinitePoset::to_dot(const std::string& name) const
{
    auto escape = [](const std::string& s) {
        std::string out;
        for (char c : s) {
            if (c == '"' || c == '\\') out += '\\';
            out += c;
        }
        return out;
    };
    std::string out = "digraph \"" + escape(name) + "\" {\n  rankdir=BT;\n";
    for (int x = 0; x < size(); ++x)
        out += "  n" + std::to_string(x) + " [label=\"" + escape(keys_[idx(x)]) + "\"];\n";
    for (auto [x, y] : cover_pairs()) out += "  n" + std::to_string(x) + " -> n" + std::to_string(y) + ";\n";
    out += "}\n";
    return out;
}

const char* to_string(LatticeFailure f) noexcept
{
    return f == LatticeFailure::NoJoin ? "no-join" : "no-meet";
}

std::optional<LatticeWitness> lattice_witness(const FinitePoset& p)
{
    // Re-index the relation along a linear extension so that the least
    // element of an up-set is its first set bit.
    const std::size_t n = static_cast<std::size_t>(p.size());
    const auto& ext = p.linear_extension();
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[idx(ext[i])] = i;
    std::vector<Bitset> up(n, Bitset(n));
    std::vector<Bitset> down(n, Bitset(n));  // reversed positions
    for (std::size_t x = 0; x < n; ++x) {
        for_each_bit(p.up_set(static_cast<int>(x)), [&](int y) { up[x].set(pos[idx(y)]); });
        for_each_bit(p.down_set(static_cast<int>(x)), [&](int y) { down[x].set(n - 1 - pos[idx(y)]); });
    }
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = x + 1; y < n; ++y) {
            const Bitset u = up[x] & up[y];
            const auto first = u.find_first();
            if (first == Bitset::npos || !u.is_subset_of(up[idx(ext[first])]))
                return LatticeWitness{static_cast<int>(x), static_cast<int>(y), LatticeFailure::NoJoin};
            const Bitset l = down[x] & down[y];
            const auto last = l.find_first();
            if (last == Bitset::npos || !l.is_subset_of(down[idx(ext[n - 1 - last])]))
                return LatticeWitness{static_cast<int>(x), static_cast<int>(y), LatticeFailure::NoMeet};
        }
    return std::nullopt;
}

namespace {

std::vector<int> coatoms_of(const FinitePoset& p, Interval iv)
{
    std::vector<int> out;
    for (int z : p.lower_covers(iv.upper))
        if (p.leq(iv.lower, z)) out.push_back(z);
    return out;
}

std::vector<int> atoms_of(const FinitePoset& p, Interval iv)
{
    std::vector<int> out;
    for (int z : p.upper_covers(iv.lower))
        if (p.leq(z, iv.upper)) out.push_back(z);
    return out;
}

} // namespace

std::string coatomic_diagnostic(const FinitePoset& lattice, Interval iv)
{
    if (!lattice.leq(iv.lower, iv.upper)) return "not an interval: lower is not below upper";
    if (iv.lower == iv.upper) return {};
    const std::vector<int> coatoms = coatoms_of(lattice, iv);
    int m = coatoms.front();
    for (std::size_t i = 1; i < coatoms.size(); ++i) {
        const auto next = lattice.meet(m, coatoms[i]);
        if (!next) return "coatoms " + lattice.key(m) + " and " + lattice.key(coatoms[i]) + " have no meet";
        m = *next;
    }
    if (m == iv.lower) return {};
    return "meet of the " + std::to_string(coatoms.size()) + " coatoms is " + lattice.key(m) + ", not the lower end";
}

bool is_coatomic(const FinitePoset& lattice, Interval iv)
{
    return coatomic_diagnostic(lattice, iv).empty();
}

bool is_atomic(const FinitePoset& lattice, Interval iv)
{
    if (!lattice.leq(iv.lower, iv.upper)) return false;
    if (iv.lower == iv.upper) return true;
    const std::vector<int> atoms = atoms_of(lattice, iv);
    int j = atoms.front();
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        const auto next = lattice.join(j, atoms[i]);
        if (!next) return false;
        j = *next;
    }
    return j == iv.upper;
}

IntervalPoset interval_poset_of(const FinitePoset& p, std::vector<Interval> intervals)
{
    const std::size_t m = intervals.size();
    std::vector<std::string> keys;
    keys.reserve(m);
    for (const Interval& iv : intervals) keys.push_back("[" + p.key(iv.lower) + "," + p.key(iv.upper) + "]");
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (p.leq(intervals[j].lower, intervals[i].lower) && p.leq(intervals[i].upper, intervals[j].upper))
                up[i].set(j);
    return {FinitePoset::from_up_sets(std::move(keys), std::move(up)), std::move(intervals)};
}

IntervalPoset interval_poset(const FinitePoset& p, IntervalVariant variant)
{
    const bool needs_lattice = variant == IntervalVariant::ProperAtomic || variant == IntervalVariant::ProperCoatomic;
    if (needs_lattice && !is_lattice(p)) throw std::invalid_argument("interval_poset: atomic/coatomic variants need a lattice");
    const auto b = p.bottom();
    const auto t = p.top();
    if (variant != IntervalVariant::All && (!b || !t)) throw std::invalid_argument("interval_poset: proper variants need a bounded poset");

    std::vector<Interval> intervals;
    for (int x = 0; x < p.size(); ++x)
        for_each_bit(p.up_set(x), [&](int y) {
            const Interval iv{x, y};
            if (variant != IntervalVariant::All && x == *b && y == *t) return;
            if (variant == IntervalVariant::ProperAtomic && !is_atomic(p, iv)) return;
            if (variant == IntervalVariant::ProperCoatomic && !is_coatomic(p, iv)) return;
            intervals.push_back(iv);
        });
    return interval_poset_of(p, std::move(intervals));
}

std::optional<RelationDifference> compare_relations(const FinitePoset& p, const FinitePoset& q)
{
    if (p.size() != q.size()) throw std::invalid_argument("compare_relations: element counts differ");
    std::vector<int> to_q(idx(p.size()));
    for (int x = 0; x < p.size(); ++x) {
        const auto j = q.index_of(p.key(x));
        if (!j) throw std::invalid_argument("compare_relations: key missing from second poset: " + p.key(x));
        to_q[idx(x)] = *j;
    }
    for (int x = 0; x < p.size(); ++x)
        for (int y = 0; y < p.size(); ++y) {
            const bool a = p.leq(x, y);
            const bool b = q.leq(to_q[idx(x)], to_q[idx(y)]);
            if (a != b) return RelationDifference{x, y, a};
        }
    return std::nullopt;
}

bool relation_contained(const FinitePoset& p, const FinitePoset& q)
{
    if (p.size() != q.size()) throw std::invalid_argument("relation_contained: element counts differ");
    for (int x = 0; x < p.size(); ++x) {
        const auto qx = q.index_of(p.key(x));
        if (!qx) throw std::invalid_argument("relation_contained: key missing: " + p.key(x));
        bool ok = true;
        for_each_bit(p.up_set(x), [&](int y) {
            const auto qy = q.index_of(p.key(y));
            if (!qy || !q.leq(*qx, *qy)) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

FinitePoset boolean_lattice(int k)
{
    const std::size_t n = std::size_t{1} << k;
    std::vector<std::string> keys;
    std::vector<Bitset> up(n, Bitset(n));
    for (std::size_t x = 0; x < n; ++x) {
        std::string key;
        for (int b = 0; b < k; ++b) key += ((x >> b) & 1u) ? '1' : '0';
        keys.push_back(key);
        for (std::size_t y = 0; y < n; ++y)
            if ((x & ~y) == 0) up[x].set(y);
    }
    return FinitePoset::from_up_sets(std::move(keys), std::move(up));
}

FinitePoset chain(int k)
{
    std::vector<std::string> keys;
    std::vector<Bitset> up(idx(k), Bitset(idx(k)));
    for (int x = 0; x < k; ++x) {
        keys.push_back(std::to_string(x));
        for (int y = x; y < k; ++y) up[idx(x)].set(idx(y));
    }
    return FinitePoset::from_up_sets(std::move(keys), std::move(up));
}

} // namespace hstlab
