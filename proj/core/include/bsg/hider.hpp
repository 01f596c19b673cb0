#pragma once

#include <vector>

#include "bsg/errors.hpp"
#include "bsg/rational.hpp"

namespace bsg {

/// A mixed strategy for the hider: one exact probability per vertex.
struct HiderDistribution {
    std::vector<Rational> y;

    HiderDistribution() = default;
    explicit HiderDistribution(std::vector<Rational> probs) : y(std::move(probs)) {}

    static HiderDistribution uniform(int n) {
        std::vector<Rational> v(static_cast<size_t>(n), Rational(1, n));
        return HiderDistribution(std::move(v));
    }

    static HiderDistribution point_mass(int n, int v) {
        std::vector<Rational> p(static_cast<size_t>(n), Rational(0));
        p[static_cast<size_t>(v)] = Rational(1);
        return HiderDistribution(std::move(p));
    }

    int n() const { return static_cast<int>(y.size()); }

    bool is_distribution() const {
        Rational sum(0);
        for (const auto& v : y) {
            if (v.sign() < 0) return false;
            sum += v;
        }
        return sum == Rational(1);
    }

    void validate() const {
        if (y.empty()) throw InvalidInstanceError("empty hider distribution");
        if (!is_distribution())
            throw InvalidInstanceError("hider probabilities must be nonnegative and sum to 1");
    }
};

}  // namespace bsg
