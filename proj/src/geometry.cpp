#include "hstlab/geometry.hpp"

#include <stdexcept>
#include <string>

#include "hstlab/combinatorics.hpp"

namespace hstlab {

namespace {

mpz_class power(int base, int exponent)
{
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
    return r;
}

void require_size(Simplex s, int size, const char* what)
{
    if (s.size() != size)
        throw std::invalid_argument(std::string(what) + ": " + s.to_string() + " must have " + std::to_string(size) +
                                    " labels");
}

// Columns are barycentric weights over the labels of `first` followed by
// those of `second`; rows enforce sum first_w p_w = sum second_w p_w and
// that both weight vectors sum to one.
struct OverlapSystem {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<int> labels;  // column -> vertex label
    std::size_t split = 0;    // first column belonging to `second`
};

OverlapSystem overlap_system(Simplex first, Simplex second, int d)
{
    OverlapSystem sys;
    first.for_each([&](int v) { sys.labels.push_back(v); });
    sys.split = sys.labels.size();
    second.for_each([&](int v) { sys.labels.push_back(v); });
    const std::size_t cols = sys.labels.size();

    for (int c = 1; c <= d; ++c) {
        std::vector<Rational> row(cols);
        for (std::size_t j = 0; j < cols; ++j) {
            Rational coord(power(sys.labels[j], c));
            row[j] = j < sys.split ? coord : Rational(-coord);
        }
        sys.a.push_back(std::move(row));
        sys.b.emplace_back(0);
    }
    std::vector<Rational> first_sum(cols, Rational(0));
    std::vector<Rational> second_sum(cols, Rational(0));
    for (std::size_t j = 0; j < cols; ++j) (j < sys.split ? first_sum : second_sum)[j] = 1;
    sys.a.push_back(std::move(first_sum));
    sys.b.emplace_back(1);
    sys.a.push_back(std::move(second_sum));
    sys.b.emplace_back(1);
    return sys;
}

// Objective sign * (lift_second - lift_first) on an OverlapSystem.
std::vector<Rational> lift_difference(const OverlapSystem& sys, int d, int sign)
{
    std::vector<Rational> c(sys.labels.size());
    for (std::size_t j = 0; j < c.size(); ++j) {
        Rational h(power(sys.labels[j], d + 1));
        c[j] = (j < sys.split ? -h : h) * sign;
    }
    return c;
}

} // namespace

MomentPoint moment_point(int label, int d)
{
    if (label < 1) throw std::invalid_argument("moment_point: label must be positive");
    MomentPoint p;
    p.reserve(static_cast<std::size_t>(d));
    for (int c = 1; c <= d; ++c) p.emplace_back(power(label, c));
    return p;
}

mpz_class normalized_volume(Simplex s, int d)
{
    require_size(s, d + 1, "normalized_volume");
    const std::vector<int> v = s.labels();
    // Bareiss fraction-free elimination on the integer edge-vector matrix.
    std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(d), std::vector<mpz_class>(static_cast<std::size_t>(d)));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
                power(v[static_cast<std::size_t>(r + 1)], c + 1) - power(v[0], c + 1);
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < static_cast<std::size_t>(d); ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < m.size() && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == m.size()) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < m.size(); ++i) {
            for (std::size_t j = k + 1; j < m.size(); ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    mpz_class det = d == 0 ? mpz_class(1) : mpz_class(m.back().back() * sign);
    return abs(det);
}

mpz_class hull_volume(LabelSet vertices, int d)
{
    mpz_class total = 0;
    for (Simplex s : gale_facets_of(vertices, d + 1, FacetClass::Lower)) total += normalized_volume(s, d);
    return total;
}

AffineFunctional lift_functional(Simplex s, int d)
{
    require_size(s, d + 1, "lift_functional");
    const std::vector<int> v = s.labels();
    const std::size_t n = static_cast<std::size_t>(d) + 1;
    // Unknowns (g_1..g_d, offset); row for vertex w: sum g_c w^c + offset = w^(d+1).
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c) m[r][c] = power(v[r], static_cast<int>(c) + 1);
        m[r][n - 1] = 1;
        m[r][n] = power(v[r], d + 1);
    }
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        while (piv < n && m[piv][k] == 0) ++piv;
        if (piv == n) throw std::logic_error("lift_functional: singular system");
        std::swap(m[k], m[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == k || m[r][k] == 0) continue;
            const Rational f = m[r][k] / m[k][k];
            for (std::size_t c = k; c <= n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    AffineFunctional h;
    for (std::size_t c = 0; c + 1 < n; ++c) h.gradient.push_back(m[c][n] / m[c][c]);
    h.offset = m[n - 1][n] / m[n - 1][n - 1];
    return h;
}

const char* to_string(HeightRelation r) noexcept
{
    switch (r) {
    case HeightRelation::Below: return "below";
    case HeightRelation::Above: return "above";
    case HeightRelation::Equal: return "equal";
    case HeightRelation::Incomparable: return "incomparable";
    case HeightRelation::Crossing: return "crossing";
    }
    return "?";
}

bool interiors_overlap(Simplex s, Simplex s_prime, int d)
{
    require_size(s, d + 1, "interiors_overlap");
    require_size(s_prime, d + 1, "interiors_overlap");
    // Substitute w = w' + eps for every weight and maximize eps >= 0.
    OverlapSystem sys = overlap_system(s, s_prime, d);
    const std::size_t cols = sys.labels.size();
    for (auto& row : sys.a) {
        Rational eps_coef = 0;
        for (std::size_t j = 0; j < cols; ++j) eps_coef += row[j];
        row.push_back(eps_coef);
    }
    std::vector<Rational> c(cols + 1, Rational(0));
    c[cols] = 1;
    const LpResult r = maximize_standard_form(c, sys.a, sys.b);
    if (r.status == LpStatus::Unbounded) throw std::logic_error("interiors_overlap: unbounded slack");
    return r.status == LpStatus::Optimal && r.value > 0;
}

HeightRelation relative_height(Simplex s, Simplex s_prime, int d)
{
    if (!interiors_overlap(s, s_prime, d)) return HeightRelation::Incomparable;
    const OverlapSystem sys = overlap_system(s, s_prime, d);
    const LpResult hi = maximize_standard_form(lift_difference(sys, d, 1), sys.a, sys.b);
    const LpResult lo = maximize_standard_form(lift_difference(sys, d, -1), sys.a, sys.b);
    if (hi.status != LpStatus::Optimal || lo.status != LpStatus::Optimal)
        throw std::logic_error("relative_height: overlap LP not optimal");
    const Rational max = hi.value;
    const Rational min = -lo.value;
    if (min == 0 && max == 0) return HeightRelation::Equal;
    if (min >= 0) return HeightRelation::Below;
    if (max <= 0) return HeightRelation::Above;
    return HeightRelation::Crossing;
}

LpResult max_lift_excess(Simplex sigma, Simplex s, int d)
{
    require_size(s, d + 1, "max_lift_excess");
    if (sigma.empty() || sigma.size() > d + 1) throw std::invalid_argument("max_lift_excess: bad sigma " + sigma.to_string());
    const OverlapSystem sys = overlap_system(sigma, s, d);
    // lift_sigma - lift_s = -(lift_second - lift_first)
    return maximize_standard_form(lift_difference(sys, d, -1), sys.a, sys.b);
}

bool submerged(Simplex sigma, const std::vector<Simplex>& triangulation, int d)
{
    for (Simplex s : triangulation) {
        const LpResult r = max_lift_excess(sigma, s, d);
        if (r.status == LpStatus::Optimal && r.value > 0) return false;
    }
    return true;
}

} // namespace hstlab
