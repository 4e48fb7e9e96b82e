#pragma once

#include <span>
#include <vector>

#include <gmpxx.h>

namespace hstlab {

/// Exact rationals (always in lowest terms with positive denominator).
using Rational = mpq_class;

/// x -> gradient . x + offset
struct AffineFunctional {
    std::vector<Rational> gradient;
    Rational offset;

    Rational operator()(std::span<const Rational> x) const;
};

enum class Relation { LessEqual, GreaterEqual, Equal };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

const char* to_string(LpStatus s) noexcept;

/// coefficients . x (relation) rhs
struct LinearConstraint {
    std::vector<Rational> coefficients;
    Relation relation = Relation::LessEqual;
    Rational rhs;
};

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;               ///< objective value, meaningful when Optimal
    std::vector<Rational> point;  ///< an optimal point, meaningful when Optimal
};

/**
 * Optimizes an affine objective over free variables subject to linear
 * constraints, exactly. Infeasible and unbounded programs are reported in the
 * status rather than thrown.
 */
LpResult exact_lp(Sense sense, const AffineFunctional& objective, std::span<const LinearConstraint> constraints);

/**
 * Standard form: maximize c.x subject to A x = b, x >= 0, with A given row-wise.
 * Two-phase primal simplex on a dense rational tableau with Bland's rule.
 */
LpResult maximize_standard_form(std::span<const Rational> c, std::span<const std::vector<Rational>> a,
                                std::span<const Rational> b);

} // namespace hstlab
