#include "doctest.h"

#include "bsg/line_solver.hpp"
#include "bsg/oracle.hpp"
#include "bsg/simplex.hpp"
#include "bsg/simulate.hpp"

using namespace bsg;

TEST_CASE("one variable, one bound") {
    RationalLP lp(1);
    lp.maximize = true;
    lp.c[0] = Rational(1);
    lp.add_row({Rational(1)}, RationalLP::Rel::LE, Rational(1));
    auto sol = simplex_solve(lp);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.objective == Rational(1));
    CHECK(sol.x[0] == Rational(1));
    CHECK(sol.row_duals[0] == Rational(1));  // duals * b reproduces the objective
}

TEST_CASE("redundant rows do not move the optimum") {
    RationalLP lp(2);
    lp.maximize = true;
    lp.c = {Rational(3), Rational(2)};
    lp.add_row({Rational(1), Rational(1)}, RationalLP::Rel::LE, Rational(4));
    lp.add_row({Rational(1), Rational(0)}, RationalLP::Rel::LE, Rational(2));
    auto base = simplex_solve(lp);
    REQUIRE(base.status == LPStatus::Optimal);
    CHECK(base.objective == Rational(10));  // x = (2, 2)

    lp.add_row({Rational(2), Rational(2)}, RationalLP::Rel::LE, Rational(8));  // duplicate of row 1
    auto again = simplex_solve(lp);
    REQUIRE(again.status == LPStatus::Optimal);
    CHECK(again.objective == base.objective);
}

TEST_CASE("infeasible and unbounded are distinguished") {
    RationalLP bad(1);
    bad.c[0] = Rational(1);
    bad.add_row({Rational(1)}, RationalLP::Rel::LE, Rational(-1));
    CHECK(simplex_solve(bad).status == LPStatus::Infeasible);

    RationalLP free(1);
    free.maximize = true;
    free.c[0] = Rational(1);
    free.add_row({Rational(-1)}, RationalLP::Rel::LE, Rational(1));
    CHECK(simplex_solve(free).status == LPStatus::Unbounded);
}

TEST_CASE("equality rows and mixed relations") {
    // min x + y st x + y = 2, x - y >= 0  -> optimum 2 at any point, duals * b == 2
    RationalLP lp(2);
    lp.c = {Rational(1), Rational(1)};
    lp.add_row({Rational(1), Rational(1)}, RationalLP::Rel::EQ, Rational(2));
    lp.add_row({Rational(1), Rational(-1)}, RationalLP::Rel::GE, Rational(0));
    auto sol = simplex_solve(lp);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.objective == Rational(2));
    CHECK(sol.x[0] + sol.x[1] == Rational(2));
    CHECK(sol.row_duals[0] * Rational(2) + sol.row_duals[1] * Rational(0) == Rational(2));
}

TEST_CASE("the full strategy matrix of the 5-vertex line prices at one half") {
    auto inst = TreeInstance::path(5, 2);
    auto catalog = enumerate_strategies(inst);
    RationalLP lp(1 + 5);
    lp.c[0] = Rational(1);
    for (size_t i = 0; i < catalog.size(); ++i) {
        std::vector<Rational> row(6, Rational(0));
        row[0] = Rational(-1);
        for (int v = 0; v < 5; ++v)
            row[static_cast<size_t>(1 + v)] = Rational(catalog.profile(i)[static_cast<size_t>(v)]);
        lp.add_row(std::move(row), RationalLP::Rel::LE, Rational(0));
    }
    std::vector<Rational> sum_row(6, Rational(1));
    sum_row[0] = Rational(0);
    lp.add_row(std::move(sum_row), RationalLP::Rel::EQ, Rational(1));
    auto sol = simplex_solve(lp);
    REQUIRE(sol.status == LPStatus::Optimal);
    CHECK(sol.objective == Rational(1, 2));
    CHECK(sol.objective == compute_hw(5, 2).value);
}

TEST_CASE("random LPs satisfy strong duality and complementary slackness") {
    SplitMix64 rng(83);
    int solved = 0;
    for (int round = 0; round < 300; ++round) {
        int nv = 1 + static_cast<int>(rng.below(4));
        int nr = 1 + static_cast<int>(rng.below(4));
        RationalLP lp(nv);
        lp.maximize = rng.below(2) == 0;
        for (auto& ci : lp.c) ci = Rational(static_cast<long long>(rng.below(11)) - 5);
        for (int r = 0; r < nr; ++r) {
            std::vector<Rational> row;
            for (int v = 0; v < nv; ++v)
                row.push_back(Rational(static_cast<long long>(rng.below(9)) - 4));
            auto rel = static_cast<RationalLP::Rel>(rng.below(3));
            lp.add_row(std::move(row), rel, Rational(static_cast<long long>(rng.below(13)) - 4));
        }
        auto sol = simplex_solve(lp);
        if (sol.status != LPStatus::Optimal) continue;
        ++solved;

        // primal feasibility
        for (size_t r = 0; r < lp.A.size(); ++r) {
            Rational lhs(0);
            for (int v = 0; v < nv; ++v) lhs += lp.A[r][static_cast<size_t>(v)] * sol.x[static_cast<size_t>(v)];
            if (lp.rel[r] == RationalLP::Rel::LE) CHECK(lhs <= lp.b[r]);
            if (lp.rel[r] == RationalLP::Rel::GE) CHECK(lhs >= lp.b[r]);
            if (lp.rel[r] == RationalLP::Rel::EQ) CHECK(lhs == lp.b[r]);
        }
        // strong duality
        Rational dual_obj(0);
        for (size_t r = 0; r < lp.A.size(); ++r) dual_obj += sol.row_duals[r] * lp.b[r];
        CHECK(dual_obj == sol.objective);
        // dual feasibility and complementary slackness on the variables
        for (int v = 0; v < nv; ++v) {
            Rational reduced = lp.c[static_cast<size_t>(v)];
            for (size_t r = 0; r < lp.A.size(); ++r)
                reduced -= sol.row_duals[r] * lp.A[r][static_cast<size_t>(v)];
            if (lp.maximize) CHECK(reduced <= Rational(0));
            else CHECK(reduced >= Rational(0));
            if (sol.x[static_cast<size_t>(v)].sign() > 0) CHECK(reduced == Rational(0));
        }
        // dual sign conditions per row
        for (size_t r = 0; r < lp.A.size(); ++r) {
            if (lp.rel[r] == RationalLP::Rel::EQ) continue;
            bool ge = lp.rel[r] == RationalLP::Rel::GE;
            int want = (lp.maximize == ge) ? -1 : 1;
            CHECK(sol.row_duals[r].sign() * want >= 0);
        }
    }
    CHECK(solved > 50);
}
