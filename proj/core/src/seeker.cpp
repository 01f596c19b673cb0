#include "bsg/seeker.hpp"

namespace bsg {

void SeekerMixedStrategy::validate() const {
    if (support.size() != weights.size())
        throw InvalidInstanceError("seeker strategy support/weight size mismatch");
    if (!is_distribution())
        throw InvalidInstanceError("seeker weights must be nonnegative and sum to 1");
    for (const auto& e : support) {
        if (!e.tree) throw InvalidInstanceError("seeker strategy entry without a tree");
        if (e.tree->height() > k) throw InvalidInstanceError("supported strategy exceeds the budget");
    }
}

std::vector<Rational> SeekerMixedStrategy::payoff_by_vertex(
    const std::vector<long long>& profit) const {
    std::vector<Rational> acc(static_cast<size_t>(n), Rational(0));
    for (size_t i = 0; i < support.size(); ++i) {
        if (weights[i].is_zero()) continue;
        auto h = discovery_times(*support[i].tree, n, k);
        for (long long v = 0; v < n; ++v) {
            long long p = profit[static_cast<size_t>(h[static_cast<size_t>(v)])];
            if (p != 0) acc[static_cast<size_t>(v)] += weights[i] * Rational(p);
        }
    }
    return acc;
}

Rational expected_profit(const SeekerMixedStrategy& x, const HiderDistribution& y,
                         const std::vector<long long>& profit) {
    if (y.n() != x.n) throw InvalidInstanceError("strategy/distribution size mismatch");
    auto per_vertex = x.payoff_by_vertex(profit);
    Rational total(0);
    for (long long v = 0; v < x.n; ++v)
        total += y.y[static_cast<size_t>(v)] * per_vertex[static_cast<size_t>(v)];
    return total;
}

}  // namespace bsg
