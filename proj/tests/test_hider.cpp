#include <numeric>

#include "doctest.h"

#include "bsg/line_solver.hpp"
#include "bsg/simulate.hpp"

using namespace bsg;

TEST_CASE("residue hider on gcd > 1 instances") {
    auto y11 = hider_noncoprime(11, 3);
    std::vector<Rational> want = {0, Rational(1, 5), 0, Rational(1, 5), 0, Rational(1, 5),
                                  0, Rational(1, 5), 0, Rational(1, 5), 0};
    CHECK(y11.y == want);

    auto y9 = hider_noncoprime(9, 3);
    Rational sum(0);
    for (long long v = 0; v < 9; ++v) {
        if (v % 2 == 0) CHECK(y9.y[static_cast<size_t>(v)] == Rational(0));
        else CHECK(y9.y[static_cast<size_t>(v)] == Rational(1, 4));
        sum += y9.y[static_cast<size_t>(v)];
    }
    CHECK(sum == Rational(1));

    CHECK_THROWS_AS(hider_noncoprime(12, 3), InvalidInstanceError);  // coprime instance
}

TEST_CASE("endpoints always carry zero mass") {
    for (int k = 2; k <= 4; ++k)
        for (long long n = (1LL << k) + 1; n <= 40; ++n) {
            auto sol = game_value_line(n, k);
            CHECK(sol.hider.y.front() == Rational(0));
            CHECK(sol.hider.y.back() == Rational(0));
            CHECK(sol.hider.is_distribution());
        }
}

TEST_CASE("segment hider for 12,3 matches the known masses") {
    auto [y, layout] = hider_coprime(12, 3);
    std::vector<Rational> want = {0,
                                  Rational(1, 9),  Rational(1, 9),  Rational(1, 9),
                                  Rational(1, 9),  Rational(1, 18), Rational(1, 18),
                                  Rational(1, 9),  Rational(1, 9),  Rational(1, 9),
                                  Rational(1, 9),  0};
    CHECK(y.y == want);
    CHECK(layout.r == 1);
    CHECK(layout.t == 5);
    CHECK(static_cast<long long>(layout.segments.size()) == layout.w);
    CHECK(layout.segments.back().start + layout.segments.back().length - 1 == 10);
    CHECK_THROWS_AS(hider_coprime(11, 3), InvalidInstanceError);  // shared factor
}

TEST_CASE("segment hider for 38,4: short/long pattern on the first 14 vertices") {
    auto [y, layout] = hider_coprime(38, 4);
    CHECK(layout.r == 1);
    std::vector<long long> starts, lens;
    for (const auto& s : layout.segments) {
        if (s.start > 14) break;
        starts.push_back(s.start);
        lens.push_back(s.length);
    }
    CHECK(starts == std::vector<long long>{1, 2, 3, 4, 6, 7, 8, 9, 11, 12, 13});
    CHECK(lens == std::vector<long long>{1, 1, 1, 2, 1, 1, 1, 2, 1, 1, 2});
    for (const auto& s : layout.segments) {
        if (s.length == 1) CHECK(s.mass_per_vertex == Rational(1, 29));
        else CHECK(s.mass_per_vertex == Rational(1, 58));
    }
    // period: mass pattern repeats c = 14 apart
    CHECK(y.y[1] == y.y[15]);
    for (long long v = 1; v <= 38 - 2 - 14; ++v) CHECK(y.y[static_cast<size_t>(v)] == y.y[static_cast<size_t>(v + 14)]);
}

TEST_CASE("verifier passes both constructions across the sweep") {
    for (int k = 2; k <= 4; ++k)
        for (long long n = (1LL << k) + 1; n <= 40; ++n) {
            auto sol = game_value_line(n, k);
            auto rep = verify_hider(sol.hider, n, k);
            CAPTURE(n);
            CAPTURE(k);
            if (!rep.ok) CAPTURE(rep.failures.front());
            CHECK(rep.ok);
        }
}

TEST_CASE("verifier rejects a shifted mass") {
    auto [y, layout] = hider_coprime(12, 3);
    (void)layout;
    // move mass from vertex 1 to vertex 5
    Rational delta(1, 108);
    y.y[1] -= delta;
    y.y[5] += delta;
    auto rep = verify_hider(y, 12, 3);
    CHECK_FALSE(rep.ok);
}

TEST_CASE("verifier reports a witness for each broken residue") {
    auto y = hider_noncoprime(11, 3);
    y.y[2] = Rational(1, 5);
    y.y[3] = Rational(0);
    auto rep = verify_hider(y, 11, 3);
    CHECK_FALSE(rep.ok);
    CHECK(!rep.failures.empty());
}

TEST_CASE("random small mass moves are caught at high rate") {
    int caught = 0, total = 0;
    SplitMix64 rng(99);
    for (auto [n, k] : std::vector<std::pair<long long, int>>{{11, 3}, {12, 3}, {38, 4}, {20, 4}}) {
        auto sol = game_value_line(n, k);
        auto b = compute_hw(n, k);
        long long c = (1LL << k) - 2;
        Rational delta(1, 2 * b.w * c);
        for (int round = 0; round < 50; ++round) {
            long long i = static_cast<long long>(rng.below(static_cast<uint64_t>(n)));
            long long j = static_cast<long long>(rng.below(static_cast<uint64_t>(n)));
            if (i == j) continue;
            auto y = sol.hider;
            y.y[static_cast<size_t>(i)] -= delta;
            y.y[static_cast<size_t>(j)] += delta;
            ++total;
            if (!verify_hider(y, n, k).ok) ++caught;
        }
    }
    CHECK(caught * 100 >= total * 95);
}
