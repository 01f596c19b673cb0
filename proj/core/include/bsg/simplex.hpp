#pragma once

#include <vector>

#include "bsg/rational.hpp"

namespace bsg {

/// Dense exact-rational linear program. All variables are nonnegative;
/// rows carry their own relation. Built for desk-scale master problems
/// (at most a few hundred rows and columns).
struct RationalLP {
    enum class Rel { LE, EQ, GE };

    int num_vars = 0;
    std::vector<std::vector<Rational>> A;
    std::vector<Rational> b;
    std::vector<Rel> rel;
    std::vector<Rational> c;
    bool maximize = false;

    explicit RationalLP(int vars) : num_vars(vars), c(static_cast<size_t>(vars), Rational(0)) {}

    void add_row(std::vector<Rational> row, Rel r, Rational rhs);
};

enum class LPStatus { Optimal, Infeasible, Unbounded };

/// Exact optimum with dual certificates.
///
/// Dual sign convention: duals * b equals the objective; for minimization
/// duals are >= 0 on GE rows and <= 0 on LE rows, mirrored for
/// maximization; EQ rows are unconstrained. Reduced costs c - duals * A
/// are >= 0 for minimization and <= 0 for maximization, with equality on
/// every variable that is strictly positive.
struct LPSolution {
    LPStatus status = LPStatus::Optimal;
    Rational objective;
    std::vector<Rational> x;
    std::vector<Rational> row_duals;
};

/// Two-phase primal simplex with Bland's rule; terminates on every input
/// and returns exact rational certificates.
LPSolution simplex_solve(const RationalLP& lp);

}  // namespace bsg
