#include "hstlab/lp.hpp"

#include <stdexcept>

namespace hstlab {

Rational AffineFunctional::operator()(std::span<const Rational> x) const
{
    if (x.size() != gradient.size()) throw std::invalid_argument("affine functional: dimension mismatch");
    Rational v = offset;
    for (std::size_t i = 0; i < x.size(); ++i) v += gradient[i] * x[i];
    return v;
}

const char* to_string(LpStatus s) noexcept
{
    switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
    }
    return "?";
}

namespace {

class Tableau {
public:
    Tableau(std::span<const std::vector<Rational>> a, std::span<const Rational> b, std::size_t num_vars)
        : vars_(num_vars), rows_(a.size())
    {
        const std::size_t m = a.size();
        cols_ = num_vars + m;
        for (std::size_t i = 0; i < m; ++i) {
            if (a[i].size() != num_vars) throw std::invalid_argument("lp: ragged constraint matrix");
            auto& row = rows_[i];
            row.assign(cols_ + 1, Rational(0));
            const bool flip = b[i] < 0;
            for (std::size_t j = 0; j < num_vars; ++j) row[j] = flip ? Rational(-a[i][j]) : a[i][j];
            row[num_vars + i] = 1;
            row[cols_] = flip ? Rational(-b[i]) : b[i];
            basis_.push_back(num_vars + i);
        }
    }

    // Phase 1: drive the artificial variables to zero. Returns false if infeasible.
    bool phase_one()
    {
        cost_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = vars_; j < cols_; ++j) cost_[j] = -1;
        for (const auto& row : rows_)
            for (std::size_t j = 0; j <= cols_; ++j) cost_[j] += row[j];
        if (!run(cols_)) throw std::logic_error("lp: phase one cannot be unbounded");
        if (cost_[cols_] != 0) return false;

        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < vars_) {
                ++i;
                continue;
            }
            std::size_t col = vars_;
            for (std::size_t j = 0; j < vars_; ++j)
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col == vars_) {
                // Redundant equality.
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, col);
            ++i;
        }
        return true;
    }

    // Phase 2: maximize c over the original variables. Returns false if unbounded.
    bool phase_two(std::span<const Rational> c)
    {
        cost_.assign(cols_ + 1, Rational(0));
        for (std::size_t j = 0; j < vars_; ++j) cost_[j] = c[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rational cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= cols_; ++j) cost_[j] -= cb * rows_[i][j];
        }
        return run(vars_);
    }

    Rational value() const { return -cost_[cols_]; }

    std::vector<Rational> point() const
    {
        std::vector<Rational> x(vars_, Rational(0));
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < vars_) x[basis_[i]] = rows_[i][cols_];
        return x;
    }

private:
    // Bland's rule over columns [0, allowed). Returns false when unbounded.
    bool run(std::size_t allowed)
    {
        while (true) {
            std::size_t entering = allowed;
            for (std::size_t j = 0; j < allowed; ++j)
                if (cost_[j] > 0) {
                    entering = j;
                    break;
                }
            if (entering == allowed) return true;

            std::size_t leaving = rows_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& coef = rows_[i][entering];
                if (coef <= 0) continue;
                Rational ratio = rows_[i][cols_] / coef;
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == rows_.size()) return false;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t col)
    {
        auto& prow = rows_[r];
        const Rational p = prow[col];
        for (auto& v : prow) v /= p;
        auto eliminate = [&](std::vector<Rational>& row) {
            if (row[col] == 0) return;
            const Rational factor = row[col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (prow[j] != 0) row[j] -= factor * prow[j];
        };
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (i != r) eliminate(rows_[i]);
        eliminate(cost_);
        basis_[r] = col;
    }

    std::size_t vars_;
    std::size_t cols_ = 0;
    std::vector<std::vector<Rational>> rows_;
    std::vector<Rational> cost_;
    std::vector<std::size_t> basis_;
};

} // namespace

LpResult maximize_standard_form(std::span<const Rational> c, std::span<const std::vector<Rational>> a,
                                std::span<const Rational> b)
{
    if (a.size() != b.size()) throw std::invalid_argument("lp: row count mismatch");
    Tableau t(a, b, c.size());
    LpResult result;
    if (!t.phase_one()) {
        result.status = LpStatus::Infeasible;
        return result;
    }
    if (!t.phase_two(c)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.value = t.value();
    result.point = t.point();
    return result;
}

LpResult exact_lp(Sense sense, const AffineFunctional& objective, std::span<const LinearConstraint> constraints)
{
    const std::size_t k = objective.gradient.size();
    std::size_t slacks = 0;
    for (const auto& con : constraints) {
        if (con.coefficients.size() != k) throw std::invalid_argument("lp: constraint dimension mismatch");
        if (con.relation != Relation::Equal) ++slacks;
    }
    // Columns: x+ (k), x- (k), slacks.
    const std::size_t num_vars = 2 * k + slacks;
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::size_t slack = 0;
    for (const auto& con : constraints) {
        std::vector<Rational> row(num_vars, Rational(0));
        for (std::size_t j = 0; j < k; ++j) {
            row[j] = con.coefficients[j];
            row[k + j] = -con.coefficients[j];
        }
        if (con.relation == Relation::LessEqual) row[2 * k + slack++] = 1;
        if (con.relation == Relation::GreaterEqual) row[2 * k + slack++] = -1;
        a.push_back(std::move(row));
        b.push_back(con.rhs);
    }
    const Rational sign = sense == Sense::Maximize ? 1 : -1;
    std::vector<Rational> c(num_vars, Rational(0));
    for (std::size_t j = 0; j < k; ++j) {
        c[j] = sign * objective.gradient[j];
        c[k + j] = -sign * objective.gradient[j];
    }
    LpResult r = maximize_standard_form(c, a, b);
    if (r.status != LpStatus::Optimal) return r;
    std::vector<Rational> x(k);
    for (std::size_t j = 0; j < k; ++j) x[j] = r.point[j] - r.point[k + j];
    r.value = sign * r.value + objective.offset;
    r.point = std::move(x);
    return r;
}

} // namespace hstlab
