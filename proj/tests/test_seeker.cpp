#include "doctest.h"

#include "bsg/line_solver.hpp"

using namespace bsg;

namespace {

std::vector<long long> unit_profit(int k) {
    std::vector<long long> p(static_cast<size_t>(k) + 2, 1);
    p[0] = 0;
    p[static_cast<size_t>(k) + 1] = 0;
    return p;
}

}  // namespace

TEST_CASE("point mass on the empty strategy earns nothing") {
    SeekerMixedStrategy x;
    x.n = 6;
    x.k = 3;
    x.add(std::make_shared<SearchTree>(build_strategy_from_partition({0, 6}, 3)), Rational(1));
    auto y = HiderDistribution::uniform(6);
    CHECK(expected_profit(x, y, unit_profit(3)) == Rational(0));
}

TEST_CASE("equilibrium pair values on small lines") {
    auto sol11 = game_value_line(11, 3);
    CHECK(expected_profit(sol11.seeker, sol11.hider, unit_profit(3)) == Rational(3, 5));

    auto sol12 = game_value_line(12, 3);
    CHECK(expected_profit(sol12.seeker, sol12.hider, unit_profit(3)) == Rational(5, 9));
}

TEST_CASE("profit is bilinear under support rescaling") {
    auto sol = game_value_line(12, 3);
    auto y = HiderDistribution::uniform(12);
    auto base = expected_profit(sol.seeker, y, unit_profit(3));

    // double one weight, renormalize, and recompute directly
    SeekerMixedStrategy scaled = sol.seeker;
    scaled.weights[0] *= Rational(2);
    Rational total(0);
    for (const auto& w : scaled.weights) total += w;
    for (auto& w : scaled.weights) w /= total;
    Rational direct(0);
    for (size_t i = 0; i < scaled.size(); ++i) {
        SeekerMixedStrategy solo;
        solo.n = scaled.n;
        solo.k = scaled.k;
        solo.add(scaled.support[i].tree, Rational(1));
        direct += scaled.weights[i] * expected_profit(solo, y, unit_profit(3));
    }
    CHECK(expected_profit(scaled, y, unit_profit(3)) == direct);
    CHECK(base == expected_profit(sol.seeker, y, unit_profit(3)));
}

TEST_CASE("seeker validation") {
    SeekerMixedStrategy x;
    x.n = 4;
    x.k = 1;
    x.add(std::make_shared<SearchTree>(build_strategy_from_partition({0, 1, 4}, 1)), Rational(1, 2));
    CHECK_THROWS_AS(x.validate(), InvalidInstanceError);  // weights sum to 1/2
    x.add(std::make_shared<SearchTree>(build_strategy_from_partition({0, 3, 4}, 1)), Rational(1, 2));
    x.validate();
}
