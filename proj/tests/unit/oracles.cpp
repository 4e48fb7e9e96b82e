#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace oracle {

namespace {

Rational power(int base, int e)
{
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

// Solves m x = rhs (square, nonsingular) by Gaussian elimination.
std::vector<Rational> solve(std::vector<std::vector<Rational>> m, std::vector<Rational> rhs)
{
    const std::size_t n = m.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw std::logic_error("oracle: singular system");
        std::swap(m[k], m[piv]);
        std::swap(rhs[k], rhs[piv]);
        for (std::size_t r = k + 1; r < n; ++r) {
            const Rational f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
            rhs[r] -= f * rhs[k];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t k = n; k-- > 0;) {
        Rational s = rhs[k];
        for (std::size_t c = k + 1; c < n; ++c) s -= m[k][c] * x[c];
        x[k] = s / m[k][k];
    }
    return x;
}

} // namespace

FacetClass hull_facet_class(LabelSet facet, LabelSet vertices, int d)
{
    // Hyperplane x_d = sum_{c<d} a_c x_c + b through the d points of the facet.
    const std::vector<int> f = facet.labels();
    std::vector<std::vector<Rational>> m;
    std::vector<Rational> rhs;
    for (int v : f) {
        std::vector<Rational> row;
        for (int c = 1; c < d; ++c) row.push_back(power(v, c));
        row.emplace_back(1);
        m.push_back(row);
        rhs.push_back(power(v, d));
    }
    const std::vector<Rational> coef = solve(m, rhs);
    bool above = false;
    bool below = false;
    (vertices - facet).for_each([&](int v) {
        Rational plane = coef.back();
        for (int c = 1; c < d; ++c) plane += coef[static_cast<std::size_t>(c - 1)] * power(v, c);
        const Rational height = power(v, d) - plane;
        if (height > 0) above = true;
        if (height < 0) below = true;
    });
    if (above && below) return FacetClass::NotAFacet;
    return below ? FacetClass::Upper : FacetClass::Lower;
}

bool geometrically_admissible(LabelSet a, LabelSet b, int d)
{
    // Variables: weights on a's vertices, then on b's. Maximize the weight on a \ b.
    const std::vector<int> va = a.labels();
    const std::vector<int> vb = b.labels();
    const std::size_t na = va.size();
    const std::size_t cols = na + vb.size();
    std::vector<hstlab::LinearConstraint> cons;
    for (int c = 1; c <= d; ++c) {
        hstlab::LinearConstraint row{std::vector<Rational>(cols), hstlab::Relation::Equal, 0};
        for (std::size_t j = 0; j < na; ++j) row.coefficients[j] = power(va[j], c);
        for (std::size_t j = 0; j < vb.size(); ++j) row.coefficients[na + j] = -power(vb[j], c);
        cons.push_back(row);
    }
    hstlab::LinearConstraint sa{std::vector<Rational>(cols), hstlab::Relation::Equal, 1};
    hstlab::LinearConstraint sb{std::vector<Rational>(cols), hstlab::Relation::Equal, 1};
    for (std::size_t j = 0; j < na; ++j) sa.coefficients[j] = 1;
    for (std::size_t j = na; j < cols; ++j) sb.coefficients[j] = 1;
    cons.push_back(sa);
    cons.push_back(sb);
    for (std::size_t j = 0; j < cols; ++j) {
        hstlab::LinearConstraint nonneg{std::vector<Rational>(cols), hstlab::Relation::GreaterEqual, 0};
        nonneg.coefficients[j] = 1;
        cons.push_back(nonneg);
    }
    hstlab::AffineFunctional objective{std::vector<Rational>(cols), 0};
    for (std::size_t j = 0; j < na; ++j)
        if (!b.contains(va[j])) objective.gradient[j] = 1;
    const hstlab::LpResult r = hstlab::exact_lp(hstlab::Sense::Maximize, objective, cons);
    if (r.status == hstlab::LpStatus::Infeasible) return true;
    return r.value == 0;
}

Rational segment_lift(int p, int q, const Rational& x)
{
    return Rational(p + q) * x - Rational(p * q);
}

std::uint64_t catalan(int n)
{
    std::uint64_t c = 1;
    for (int k = 0; k < n; ++k) c = c * 2 * static_cast<std::uint64_t>(2 * k + 1) / static_cast<std::uint64_t>(k + 2);
    return c;
}

std::uint64_t polygon_dissections(int n)
{
    // Large Schroeder numbers r(m) = 1, 2, 6, 22, ...; an n-gon has r(n-2)/2 dissections.
    std::vector<std::uint64_t> r{1, 2};
    for (std::uint64_t m = 2; m <= static_cast<std::uint64_t>(n - 2); ++m)
        r.push_back((3 * (2 * m - 1) * r[m - 1] - (m - 2) * r[m - 2]) / (m + 1));
    return r[static_cast<std::size_t>(n - 2)] / 2;
}

PolygonTamari polygon_tamari(int n)
{
    std::vector<LabelSet> diagonals;
    for (int a = 1; a <= n; ++a)
        for (int b = a + 2; b <= n; ++b)
            if (!(a == 1 && b == n)) diagonals.push_back(LabelSet{a, b});
    auto crosses = [](LabelSet x, LabelSet y) {
        const int p = x.min_label(), q = x.max_label(), r = y.min_label(), s = y.max_label();
        return (p < r && r < q && q < s) || (r < p && p < s && s < q);
    };

    PolygonTamari out;
    std::vector<LabelSet> chosen;
    auto grow = [&](auto&& self, std::size_t next) -> void {
        if (static_cast<int>(chosen.size()) == n - 3) {
            out.triangulations.push_back(chosen);
            return;
        }
        for (std::size_t k = next; k < diagonals.size(); ++k) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](LabelSet c) { return crosses(c, diagonals[k]); })) continue;
            chosen.push_back(diagonals[k]);
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    grow(grow, 0);

    const std::size_t m = out.triangulations.size();
    std::map<std::vector<LabelSet>, std::size_t> index;
    for (std::size_t i = 0; i < m; ++i) index[out.triangulations[i]] = i;
    auto is_edge = [&](const std::vector<LabelSet>& t, int a, int b) {
        if (a > b) std::swap(a, b);
        if (b == a + 1 || (a == 1 && b == n)) return true;
        return std::find(t.begin(), t.end(), LabelSet{a, b}) != t.end();
    };

    out.leq.assign(m, std::vector<bool>(m, false));
    std::vector<std::vector<std::size_t>> up(m);
    for (std::size_t i = 0; i < m; ++i) {
        const auto& t = out.triangulations[i];
        for (LabelSet diag : t) {
            const int a = diag.min_label();
            const int c = diag.max_label();
            int b = 0;
            int e = 0;
            for (int v = 1; v <= n; ++v) {
                if (v == a || v == c || !is_edge(t, a, v) || !is_edge(t, v, c)) continue;
                if (v > a && v < c) b = v;
                else e = v;
            }
            if (e < c) continue;  // {a, c} is the upper diagonal of its quadrilateral
            std::vector<LabelSet> flipped;
            for (LabelSet x : t)
                if (x != diag) flipped.push_back(x);
            flipped.push_back(LabelSet{b, e});
            std::sort(flipped.begin(), flipped.end());
            up[i].push_back(index.at(flipped));
        }
    }
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> stack{i};
        while (!stack.empty()) {
            const std::size_t x = stack.back();
            stack.pop_back();
            if (out.leq[i][x]) continue;
            out.leq[i][x] = true;
            for (std::size_t y : up[x]) stack.push_back(y);
        }
    }
    return out;
}

} // namespace oracle
