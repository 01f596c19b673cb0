#include "doctest.h"

#include "bsg/equilibrium.hpp"
#include "bsg/line_solver.hpp"
#include "bsg/oracle.hpp"
#include "bsg/simulate.hpp"

using namespace bsg;

TEST_CASE("column generation reproduces the closed-form line value") {
    auto inst = TreeInstance::path(11, 3);
    auto eq = solve_equilibrium(inst);
    CHECK(eq.value == Rational(3, 5));
    CHECK(eq.value == game_value_line(11, 3).value);
    CHECK(eq.hider.is_distribution());
    CHECK(eq.seeker.is_distribution());

    auto inst12 = TreeInstance::path(12, 3);
    CHECK(solve_equilibrium(inst12).value == Rational(5, 9));
}

TEST_CASE("one query cannot pin the center of a 3-star") {
    TreeInstance star(4, 1, {{0, 1}, {0, 2}, {0, 3}});
    auto eq = solve_equilibrium(star);
    CHECK(eq.value == Rational(0));
}

TEST_CASE("hider best response against known mixes") {
    auto sol = game_value_line(11, 3);
    auto inst = TreeInstance::path(11, 3);
    auto [v, val] = hider_best_response(sol.seeker, inst);
    CHECK(val == Rational(3, 5));
    CHECK(v != 0);  // vertex 0 is covered more often than the rest

    SeekerMixedStrategy lone;
    lone.n = 11;
    lone.k = 3;
    lone.add(sol.seeker.support[0].tree, Rational(1));
    auto [v2, val2] = hider_best_response(lone, inst);
    (void)v2;
    CHECK(val2 == Rational(0));
}

TEST_CASE("random mixes never beat the equilibrium value") {
    SplitMix64 rng(17);
    for (int round = 0; round < 15; ++round) {
        int n = 3 + static_cast<int>(rng.below(6));
        int k = 1 + static_cast<int>(rng.below(3));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(v))), v});
        TreeInstance inst(n, k, std::move(edges));
        auto eq = solve_equilibrium(inst);

        auto catalog = enumerate_strategies(inst);
        SeekerMixedStrategy x;
        x.n = n;
        x.k = k;
        size_t picks = 1 + rng.below(3);
        for (size_t i = 0; i < picks; ++i)
            x.add(std::make_shared<SearchTree>(catalog.materialize(rng.below(catalog.size()))),
                  Rational(1, static_cast<long long>(picks)));
        auto [v, val] = hider_best_response(x, inst);
        (void)v;
        CHECK(val <= eq.value);
    }
}

TEST_CASE("certificates meet exactly and bound both sides") {
    SplitMix64 rng(19);
    for (int round = 0; round < 10; ++round) {
        int n = 3 + static_cast<int>(rng.below(6));
        int k = 1 + static_cast<int>(rng.below(3));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(v))), v});
        TreeInstance inst(n, k, std::move(edges));
        auto eq = solve_equilibrium(inst);
        for (const auto& p : eq.seeker_payoff_by_vertex) CHECK(p >= eq.value);
        for (const auto& p : eq.hider_payoff_by_column) CHECK(p <= eq.value);
        CHECK(expected_profit(eq.seeker, eq.hider, inst.profit) == eq.value);
    }
}

TEST_CASE("scaling the profit table scales the value and keeps the supports") {
    SplitMix64 rng(29);
    for (int round = 0; round < 8; ++round) {
        int n = 3 + static_cast<int>(rng.below(5));
        int k = 1 + static_cast<int>(rng.below(3));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(v))), v});
        std::vector<long long> p(static_cast<size_t>(k));
        long long cur = 1;
        for (int t = k - 1; t >= 0; --t) {
            p[static_cast<size_t>(t)] = cur;
            cur += static_cast<long long>(rng.below(3));
        }
        std::vector<long long> p3 = p;
        for (auto& v : p3) v *= 3;

        TreeInstance a(n, k, edges, p);
        TreeInstance b(n, k, edges, p3);
        auto ea = solve_equilibrium(a);
        auto eb = solve_equilibrium(b);
        CHECK(eb.value == Rational(3) * ea.value);
        CHECK(ea.seeker.size() == eb.seeker.size());
        CHECK(ea.hider.y == eb.hider.y);
    }
}
