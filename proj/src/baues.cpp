#include "hstlab/baues.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "hstlab/combinatorics.hpp"

namespace hstlab {

PolytopalSubdivision::PolytopalSubdivision(int n, int d, std::vector<LabelSet> cells)
    : n_(n), d_(d), cells_(std::move(cells))
{
    if (d < 1 || n < d + 1 || n > kMaxLabel) throw std::invalid_argument("subdivision: bad ambient dimensions");
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t i = 0; i < cells_.size(); ++i) {
        if (cells_[i].max_label() > n) throw std::invalid_argument("subdivision: cell " + cells_[i].to_string() + " exceeds n");
        if (i > 0 && cells_[i] == cells_[i - 1])
            throw std::invalid_argument("subdivision: duplicate cell " + cells_[i].to_string());
    }
}

bool PolytopalSubdivision::is_triangulation() const
{
    return std::all_of(cells_.begin(), cells_.end(), [&](LabelSet c) { return c.size() == d_ + 1; });
}

bool PolytopalSubdivision::is_proper() const
{
    return !(cells_.size() == 1 && cells_[0] == LabelSet::range(1, n_));
}

std::string PolytopalSubdivision::to_json() const
{
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["d"] = d_;
    auto list = nlohmann::ordered_json::array();
    for (LabelSet c : cells_) list.push_back(c.labels());
    j["cells"] = std::move(list);
    return j.dump();
}

PolytopalSubdivision PolytopalSubdivision::from_json(const std::string& text)
{
    const auto j = nlohmann::json::parse(text);
    std::vector<LabelSet> cells;
    for (const auto& c : j.at("cells")) cells.push_back(LabelSet::from_labels(c.get<std::vector<int>>()));
    return PolytopalSubdivision(j.at("n").get<int>(), j.at("d").get<int>(), std::move(cells));
}

std::strong_ordering operator<=>(const PolytopalSubdivision& a, const PolytopalSubdivision& b)
{
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.d_ <=> b.d_; c != 0) return c;
    return std::lexicographical_compare_three_way(a.cells_.begin(), a.cells_.end(), b.cells_.begin(), b.cells_.end());
}

std::string validate_subdivision(const PolytopalSubdivision& s)
{
    const int d = s.d();
    for (LabelSet c : s.cells())
        if (c.size() < d + 1) return "cell " + c.to_string() + " has fewer than d+1 vertices";

    std::vector<std::vector<Simplex>> bottoms;
    std::vector<std::vector<Simplex>> tops;
    for (LabelSet c : s.cells()) {
        bottoms.push_back(bottom_simplices(c, d));
        tops.push_back(top_simplices(c, d));
    }
    for (std::size_t a = 0; a < bottoms.size(); ++a)
        for (std::size_t b = a + 1; b < bottoms.size(); ++b)
            for (const auto* family : {&bottoms, &tops})
                for (Simplex x : (*family)[a])
                    for (Simplex y : (*family)[b])
                        if (!zig_zag_admissible(x, y, d))
                            return "cells " + s.cells()[a].to_string() + " and " + s.cells()[b].to_string() +
                                   " do not meet in a common face";

    for (const auto* family : {&bottoms, &tops}) {
        std::vector<Simplex> glued;
        for (const auto& part : *family) glued.insert(glued.end(), part.begin(), part.end());
        const ValidationReport r = validate(glued, s.n(), d);
        if (!r.ok()) return "glued cell triangulations do not triangulate C(n,d): " + r.violations.front().message;
    }
    return {};
}

bool refines(const PolytopalSubdivision& finer, const PolytopalSubdivision& coarser)
{
    return std::all_of(finer.cells().begin(), finer.cells().end(), [&](LabelSet c) {
        return std::any_of(coarser.cells().begin(), coarser.cells().end(), [&](LabelSet big) { return c.is_subset_of(big); });
    });
}

TriangulationPair phi(const PolytopalSubdivision& s)
{
    if (!s.is_proper()) throw std::invalid_argument("phi: the trivial subdivision has no image");
    std::vector<Simplex> lower;
    std::vector<Simplex> upper;
    for (LabelSet c : s.cells()) {
        for (Simplex x : bottom_simplices(c, s.d())) lower.push_back(x);
        for (Simplex x : top_simplices(c, s.d())) upper.push_back(x);
    }
    return {Triangulation(s.n(), s.d(), std::move(lower)), Triangulation(s.n(), s.d(), std::move(upper))};
}

PolytopalSubdivision interval_to_subdivision(const Triangulation& lower, const Triangulation& upper)
{
    const int d = upper.d();
    std::vector<LabelSet> lower_faces;
    for (Simplex s : lower.simplices())
        for (LabelSet f : subsets_of_size(s, d)) lower_faces.push_back(f);
    std::sort(lower_faces.begin(), lower_faces.end());

    const auto& simplices = upper.simplices();
    std::vector<std::size_t> parent(simplices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto root = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::map<LabelSet, std::size_t> first_owner;
    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (LabelSet f : subsets_of_size(simplices[i], d)) {
            if (std::binary_search(lower_faces.begin(), lower_faces.end(), f)) continue;
            auto [it, inserted] = first_owner.emplace(f, i);
            if (!inserted) parent[root(i)] = root(it->second);
        }

    std::map<std::size_t, LabelSet> cells;
    for (std::size_t i = 0; i < simplices.size(); ++i) cells[root(i)] = cells[root(i)] | simplices[i];
    std::vector<LabelSet> out;
    for (auto [r, cell] : cells) {
        if (d == 1) {
            // Interior points of a segment cell are recorded by the lower end only.
            for (Simplex s : lower.simplices())
                if (s.min_label() >= cell.min_label() && s.max_label() <= cell.max_label()) cell = cell | s;
        }
        out.push_back(cell);
    }
    return PolytopalSubdivision(upper.n(), d, std::move(out));
}

PolytopalSubdivision interval_to_subdivision(const Enumeration& e, const FinitePoset& s2, Interval iv)
{
    const std::string why = coatomic_diagnostic(s2, iv);
    if (!why.empty()) throw std::invalid_argument("interval_to_subdivision: interval is not coatomic: " + why);
    return interval_to_subdivision(e.triangulations.at(static_cast<std::size_t>(iv.lower)),
                                   e.triangulations.at(static_cast<std::size_t>(iv.upper)));
}

BauesPoset baues_poset(const Enumeration& e, const FinitePoset& s2)
{
    const IntervalPoset coatomic = interval_poset(s2, IntervalVariant::ProperCoatomic);
    const std::size_t m = coatomic.intervals.size();

    std::vector<std::pair<PolytopalSubdivision, Interval>> items;
    items.reserve(m);
    for (const Interval& iv : coatomic.intervals) {
        PolytopalSubdivision s = interval_to_subdivision(e.triangulations.at(static_cast<std::size_t>(iv.lower)),
                                                         e.triangulations.at(static_cast<std::size_t>(iv.upper)));
        if (const std::string why = validate_subdivision(s); !why.empty())
            throw std::logic_error("baues_poset: " + s.to_json() + " is not a subdivision: " + why);
        items.emplace_back(std::move(s), iv);
    }
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });

    BauesPoset out;
    std::vector<std::string> keys;
    for (auto& [s, iv] : items) {
        keys.push_back(s.to_json());
        out.subdivisions.push_back(s);
        out.intervals.push_back(iv);
    }
    std::vector<Bitset> up(m, Bitset(m));
    out.order_matches_intervals = true;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const bool refined = refines(out.subdivisions[i], out.subdivisions[j]);
            const Interval a = out.intervals[i];
            const Interval b = out.intervals[j];
            const bool contained = s2.leq(b.lower, a.lower) && s2.leq(a.upper, b.upper);
            if (refined != contained) out.order_matches_intervals = false;
            if (refined) up[i].set(j);
        }
    out.poset = FinitePoset::from_up_sets(std::move(keys), std::move(up));
    return out;
}

BauesPoset baues_poset(int n, int d)
{
    const Enumeration e = enumerate_triangulations(n, d);
    return baues_poset(e, build_s2(e));
}

namespace {

bool crossing(LabelSet a, LabelSet b)
{
    const int p = a.min_label(), q = a.max_label(), r = b.min_label(), s = b.max_label();
    return (p < r && r < q && q < s) || (r < p && p < s && s < q);
}

std::vector<LabelSet> cut(int n, const std::vector<LabelSet>& diagonals)
{
    std::vector<LabelSet> cells{LabelSet::range(1, n)};
    for (LabelSet diag : diagonals) {
        const int a = diag.min_label();
        const int b = diag.max_label();
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (!diag.is_subset_of(cells[i])) continue;
            LabelSet inside;
            LabelSet outside;
            cells[i].for_each([&](int v) {
                if (v >= a && v <= b) inside = inside.with(v);
                if (v <= a || v >= b) outside = outside.with(v);
            });
            if (inside.size() < 3 || outside.size() < 3) continue;
            cells[i] = inside;
            cells.push_back(outside);
            break;
        }
    }
    return cells;
}

} // namespace

std::vector<Dissection> dissection_oracle_d2(int n)
{
    if (n < 4) throw std::invalid_argument("dissection_oracle_d2: need n >= 4");
    std::vector<LabelSet> diagonals;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) diagonals.push_back(LabelSet{a, b});

    std::vector<Dissection> out;
    std::vector<LabelSet> chosen;
    auto grow = [&](auto&& self, std::size_t next) -> void {
        if (!chosen.empty()) out.push_back({PolytopalSubdivision(n, 2, cut(n, chosen)), chosen});
        for (std::size_t k = next; k < diagonals.size(); ++k) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](LabelSet c) { return crossing(c, diagonals[k]); })) continue;
            chosen.push_back(diagonals[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    grow(grow, 0);
    std::sort(out.begin(), out.end(), [](const Dissection& a, const Dissection& b) { return a.subdivision < b.subdivision; });
    return out;
}

FinitePoset dissection_poset(int n)
{
    const std::vector<Dissection> all = dissection_oracle_d2(n);
    const std::size_t m = all.size();
    std::vector<std::string> keys;
    for (const auto& x : all) keys.push_back(x.subdivision.to_json());
    std::vector<Bitset> up(m, Bitset(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const auto& mine = all[i].diagonals;
            const auto& theirs = all[j].diagonals;
            const bool subset = std::all_of(theirs.begin(), theirs.end(), [&](LabelSet x) {
                return std::find(mine.begin(), mine.end(), x) != mine.end();
            });
            if (subset) up[i].set(j);
        }
    return FinitePoset::from_up_sets(std::move(keys), std::move(up));
}

} // namespace hstlab
