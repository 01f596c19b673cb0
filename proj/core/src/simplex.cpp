#include "bsg/simplex.hpp"

#include <algorithm>

#include "bsg/errors.hpp"

namespace bsg {

void RationalLP::add_row(std::vector<Rational> row, Rel r, Rational rhs) {
    if (static_cast<int>(row.size()) != num_vars)
        throw InvalidInstanceError("LP row width does not match the variable count");
    A.push_back(std::move(row));
    rel.push_back(r);
    b.push_back(std::move(rhs));
}

namespace {

/// Dense tableau over the standard-form program min c'x, Ax = b, x >= 0.
/// Column layout: [structurals][slacks/surpluses][artificials]; the last
/// column of each row holds the rhs. basis[i] is the column basic in row i.
struct Tableau {
    size_t rows = 0, cols = 0;
    std::vector<std::vector<Rational>> t;  // rows x (cols+1)
    std::vector<Rational> z;               // cols+1 reduced-cost row, z[cols] = -objective
    std::vector<int> basis;

    void pivot(size_t pr, size_t pc) {
        Rational piv = t[pr][pc];
        for (auto& cell : t[pr]) cell /= piv;
        for (size_t r = 0; r < rows; ++r) {
            if (r == pr || t[r][pc].is_zero()) continue;
            Rational factor = t[r][pc];
            for (size_t c = 0; c <= cols; ++c) t[r][c] -= factor * t[pr][c];
        }
        if (!z[pc].is_zero()) {
            Rational factor = z[pc];
            for (size_t c = 0; c <= cols; ++c) z[c] -= factor * t[pr][c];
        }
        basis[pr] = static_cast<int>(pc);
    }

    /// Bland's rule: smallest eligible entering column, smallest basic
    /// index among ratio ties. Returns false when optimal, throws on
    /// unbounded rays.
    bool step(const std::vector<char>& eligible) {
        size_t enter = cols;
        for (size_t c = 0; c < cols; ++c) {
            if (!eligible[c]) continue;
            if (z[c].sign() < 0) {
                enter = c;
                break;
            }
        }
        if (enter == cols) return false;

        size_t leave = rows;
        Rational best_ratio;
        for (size_t r = 0; r < rows; ++r) {
            if (t[r][enter].sign() <= 0) continue;
            Rational ratio = t[r][cols] / t[r][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[r] < basis[leave])) {
                leave = r;
                best_ratio = ratio;
            }
        }
        if (leave == rows) throw GuardExceededError("unbounded ray");  // caught by caller
        pivot(leave, enter);
        return true;
    }

    void set_costs(const std::vector<Rational>& cost) {
        z.assign(cols + 1, Rational(0));
        for (size_t c = 0; c < cols; ++c) z[c] = cost[c];
        for (size_t r = 0; r < rows; ++r) {
            const Rational& cb = cost[static_cast<size_t>(basis[r])];
            if (cb.is_zero()) continue;
            for (size_t c = 0; c <= cols; ++c) z[c] -= cb * t[r][c];
        }
    }
};

}  // namespace

LPSolution simplex_solve(const RationalLP& lp) {
    size_t m = lp.A.size();
    size_t n = static_cast<size_t>(lp.num_vars);

    // normalize to b >= 0, remembering flips for the dual signs
    std::vector<std::vector<Rational>> A = lp.A;
    std::vector<Rational> b = lp.b;
    std::vector<RationalLP::Rel> rel = lp.rel;
    std::vector<int> flip(m, 1);
    for (size_t r = 0; r < m; ++r) {
        if (b[r].sign() < 0) {
            flip[r] = -1;
            b[r] = -b[r];
            for (auto& v : A[r]) v = -v;
            if (rel[r] == RationalLP::Rel::LE) rel[r] = RationalLP::Rel::GE;
            else if (rel[r] == RationalLP::Rel::GE) rel[r] = RationalLP::Rel::LE;
        }
    }

    size_t n_slack = 0;
    for (auto r : rel)
        if (r != RationalLP::Rel::EQ) ++n_slack;
    size_t n_art = 0;
    for (auto r : rel)
        if (r != RationalLP::Rel::LE) ++n_art;

    Tableau tab;
    tab.rows = m;
    tab.cols = n + n_slack + n_art;
    tab.t.assign(m, std::vector<Rational>(tab.cols + 1, Rational(0)));
    tab.basis.assign(m, -1);

    std::vector<int> unit_col(m, -1);  // initial identity column per row, for duals
    size_t slack_at = n, art_at = n + n_slack;
    for (size_t r = 0; r < m; ++r) {
        for (size_t c = 0; c < n; ++c) tab.t[r][c] = A[r][c];
        tab.t[r][tab.cols] = b[r];
        if (rel[r] == RationalLP::Rel::LE) {
            tab.t[r][slack_at] = Rational(1);
            tab.basis[r] = static_cast<int>(slack_at);
            unit_col[r] = static_cast<int>(slack_at);
            ++slack_at;
        } else if (rel[r] == RationalLP::Rel::GE) {
            tab.t[r][slack_at] = Rational(-1);
            ++slack_at;
            tab.t[r][art_at] = Rational(1);
            tab.basis[r] = static_cast<int>(art_at);
            unit_col[r] = static_cast<int>(art_at);
            ++art_at;
        } else {
            tab.t[r][art_at] = Rational(1);
            tab.basis[r] = static_cast<int>(art_at);
            unit_col[r] = static_cast<int>(art_at);
            ++art_at;
        }
    }

    LPSolution sol;

    // phase 1: drive the artificials to zero
    if (n_art > 0) {
        std::vector<Rational> cost(tab.cols, Rational(0));
        for (size_t c = n + n_slack; c < tab.cols; ++c) cost[c] = Rational(1);
        tab.set_costs(cost);
        std::vector<char> eligible(tab.cols, 1);
        try {
            while (tab.step(eligible)) {}
        } catch (const GuardExceededError&) {
            throw VerificationError("phase-1 subproblem reported an unbounded ray");
        }
        Rational art_value = -tab.z[tab.cols];
        if (!art_value.is_zero()) {
            sol.status = LPStatus::Infeasible;
            return sol;
        }
        // pivot leftover artificials out of the basis where possible
        for (size_t r = 0; r < m; ++r) {
            if (tab.basis[r] < static_cast<int>(n + n_slack)) continue;
            size_t pc = tab.cols;
            for (size_t c = 0; c < n + n_slack; ++c) {
                if (!tab.t[r][c].is_zero()) {
                    pc = c;
                    break;
                }
            }
            if (pc < tab.cols) tab.pivot(r, pc);
            // otherwise the row is redundant; its artificial stays basic at zero
        }
    }

    // phase 2 with the real costs
    std::vector<Rational> cost(tab.cols, Rational(0));
    for (size_t c = 0; c < n; ++c) cost[c] = lp.maximize ? -lp.c[c] : lp.c[c];
    tab.set_costs(cost);
    std::vector<char> eligible(tab.cols, 1);
    for (size_t c = n + n_slack; c < tab.cols; ++c) eligible[c] = 0;
    try {
        while (tab.step(eligible)) {}
    } catch (const GuardExceededError&) {
        sol.status = LPStatus::Unbounded;
        return sol;
    }

    sol.status = LPStatus::Optimal;
    sol.x.assign(n, Rational(0));
    for (size_t r = 0; r < m; ++r) {
        if (tab.basis[r] >= 0 && tab.basis[r] < static_cast<int>(n))
            sol.x[static_cast<size_t>(tab.basis[r])] = tab.t[r][tab.cols];
    }
    Rational obj = -tab.z[tab.cols];
    sol.objective = lp.maximize ? -obj : obj;

    // duals from the prices under the initial identity columns
    sol.row_duals.assign(m, Rational(0));
    for (size_t r = 0; r < m; ++r) {
        // price = -z[unit_col] since those columns carried zero phase-2 cost
        Rational price = -tab.z[static_cast<size_t>(unit_col[r])];
        if (lp.maximize) price = -price;
        if (flip[r] < 0) price = -price;
        sol.row_duals[r] = price;
    }
    return sol;
}

}  // namespace bsg
