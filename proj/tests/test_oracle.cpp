#include <bit>
#include <set>

#include "doctest.h"

#include "bsg/equilibrium.hpp"
#include "bsg/line_solver.hpp"
#include "bsg/oracle.hpp"
#include "bsg/simulate.hpp"

using namespace bsg;

namespace {

/// Decompose a coverage bitmask into its cyclic runs on n vertices.
std::vector<ModInterval> mask_runs(uint64_t mask, long long n) {
    std::vector<ModInterval> runs;
    if (mask == 0) return runs;
    std::vector<char> in(static_cast<size_t>(n));
    for (long long v = 0; v < n; ++v) in[static_cast<size_t>(v)] = (mask >> v) & 1;
    for (long long v = 0; v < n; ++v) {
        long long prev = (v + n - 1) % n;
        if (!in[static_cast<size_t>(v)] || in[static_cast<size_t>(prev)]) continue;
        long long len = 0;
        while (len < n && in[static_cast<size_t>((v + len) % n)]) ++len;
        runs.push_back(ModInterval(v, len, n));
    }
    return runs;
}

}  // namespace

TEST_CASE("profile counts on tiny paths") {
    auto c2 = enumerate_strategies(TreeInstance::path(2, 1));
    CHECK(c2.size() == 2);  // empty, and query-the-edge

    // the middle-edge query covers nothing, so it collapses onto the empty profile
    auto c4 = enumerate_strategies(TreeInstance::path(4, 1));
    CHECK(c4.size() == 3);
    CHECK(c4.distinct_h_profiles() == 3);
}

TEST_CASE("witness trees are faithful to their profiles") {
    SplitMix64 rng(37);
    for (int round = 0; round < 12; ++round) {
        int n = 2 + static_cast<int>(rng.below(8));
        int k = 1 + static_cast<int>(rng.below(3));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(v))), v});
        TreeInstance inst(n, k, std::move(edges));
        auto catalog = enumerate_strategies(inst);
        for (size_t i = 0; i < catalog.size(); ++i) {
            auto t = catalog.materialize(i);
            CHECK(t.height() <= k);
            validate_search_tree(t, inst);
            auto h = discovery_times(t, n, k);
            for (int v = 0; v < n; ++v)
                CHECK(inst.p(h[static_cast<size_t>(v)]) == catalog.profile(i)[static_cast<size_t>(v)]);
        }
    }
}

TEST_CASE("leaf-count law on line catalogs") {
    for (long long n : {9LL, 11LL, 12LL}) {
        LineCoverageEnumerator full(3, /*reduced=*/false);
        auto sets = full.sets(n);
        auto maxima = maximal_masks(sets);
        std::set<uint64_t> maximal(maxima.begin(), maxima.end());
        for (uint64_t m : sets) {
            long long leaves = std::popcount(m);
            long long v = 1;
            // one leaf per uncovered run on the line
            bool inrun = !(m & 1);
            if (inrun) ++leaves;
            for (; v < n; ++v) {
                bool cov = (m >> v) & 1;
                if (!cov && !inrun) ++leaves;
                inrun = !cov;
            }
            CHECK(leaves <= 8);
            if (maximal.count(m)) CHECK(leaves == 8);
        }
    }
}

TEST_CASE("maximal coverage masks match the structural conditions both ways") {
    for (long long n = 9; n <= 14; ++n) {
        LineCoverageEnumerator full(3, /*reduced=*/false);
        auto m = maximal_masks(full.sets(n));
        std::set<uint64_t> oracle_maximal(m.begin(), m.end());

        std::set<uint64_t> accepted;
        for (uint64_t mask = 1; mask < (1ULL << n); ++mask) {
            auto runs = mask_runs(mask, n);
            if (runs.empty()) continue;
            if (is_maximal_covered_set(runs, n, 3)) accepted.insert(mask);
        }
        CAPTURE(n);
        CHECK(oracle_maximal == accepted);
    }
}

TEST_CASE("reduced enumeration keeps every maximal set and only realizable ones") {
    for (long long n = 9; n <= 13; ++n) {
        LineCoverageEnumerator full(3, false), reduced(3, true);
        std::set<uint64_t> all(full.sets(n).begin(), full.sets(n).end());
        auto red = reduced.sets(n);
        for (uint64_t m : red) CHECK(all.count(m));
        auto maxima = maximal_masks(full.sets(n));
        std::set<uint64_t> redset(red.begin(), red.end());
        for (uint64_t m : maxima) CHECK(redset.count(m));
    }
}

TEST_CASE("value oracle agrees with the closed form on small lines") {
    CHECK(full_matrix_value_line(5, 2).value == Rational(1, 2));
    CHECK(full_matrix_value_line(11, 3).value == Rational(3, 5));
    CHECK(full_matrix_value_line(12, 3).value == Rational(5, 9));
    CHECK(full_matrix_value_line(9, 3).value == Rational(3, 4));
}

TEST_CASE("value oracle handles the degenerate budgets the closed form refuses") {
    CHECK(full_matrix_value_line(2, 1).value == Rational(1));
    CHECK(full_matrix_value_line(4, 1).value == Rational(0));  // hider sits mid-path
    CHECK(full_matrix_value_line(3, 1).value == Rational(0));  // the middle needs both edges
    CHECK(full_matrix_value_line(3, 2).value == Rational(1));
    CHECK(full_matrix_value_line(7, 3).value == Rational(1));  // n <= 2^k
}

TEST_CASE("tree-mode and line-mode oracles agree on small paths") {
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; k <= 3; ++k) {
            auto tree = full_matrix_value(TreeInstance::path(n, k));
            auto line = full_matrix_value_line(n, k);
            CAPTURE(n);
            CAPTURE(k);
            CHECK(tree.value == line.value);
        }
}

TEST_CASE("full matrix on the 3-star: the center decides the game") {
    TreeInstance star(4, 2, {{0, 1}, {0, 2}, {0, 3}});
    auto res = full_matrix_value(star);
    // two queries can never isolate the degree-3 center, so the hider
    // parks there and the value is zero (regression-pinned solver output)
    CHECK(res.value == Rational(0));
    auto eq = solve_equilibrium(star);
    CHECK(eq.value == res.value);
}

TEST_CASE("brute-force best response basics") {
    auto inst = TreeInstance::path(6, 2);
    auto catalog = enumerate_strategies(inst);
    auto [v1, t1] = brute_force_best_response(HiderDistribution::point_mass(6, 0), catalog);
    CHECK(v1 == Rational(1));
    (void)t1;

    auto inst4 = TreeInstance::path(4, 1);
    auto catalog4 = enumerate_strategies(inst4);
    auto [v2, t2] = brute_force_best_response(HiderDistribution::uniform(4), catalog4);
    CHECK(v2 == Rational(1, 4));
    (void)t2;
}

TEST_CASE("full matrix equals column generation on random trees") {
    SplitMix64 rng(43);
    for (int round = 0; round < 10; ++round) {
        int n = 3 + static_cast<int>(rng.below(6));
        int k = 1 + static_cast<int>(rng.below(3));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(v))), v});
        TreeInstance inst(n, k, std::move(edges));
        auto full = full_matrix_value(inst);
        auto eq = solve_equilibrium(inst);
        CHECK(full.value == eq.value);

        // the returned pair is an equilibrium certificate on its own
        auto payoff = full.seeker.payoff_by_vertex(inst.profit);
        for (const auto& p : payoff) CHECK(p >= full.value);
        auto [bval, btree] = brute_force_best_response(full.hider, enumerate_strategies(inst));
        (void)btree;
        CHECK(bval == full.value);
    }
}

TEST_CASE("guards trip before the exponential blowup") {
    CHECK_THROWS_AS(enumerate_strategies(TreeInstance::path(17, 6),
                                         StrategyCatalog::Limits{16, 6, 1000}),
                    GuardExceededError);
    CHECK_THROWS_AS(full_matrix_value_line(49, 3), GuardExceededError);
}
