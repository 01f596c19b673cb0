#include "bsg/simulate.hpp"

#include <cmath>

namespace bsg {

uint64_t SplitMix64::below(uint64_t m) {
    if (m == 0) throw InvalidInstanceError("uniform draw below zero");
    uint64_t limit = UINT64_MAX - UINT64_MAX % m;
    uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % m;
}

DiscreteSampler::DiscreteSampler(const std::vector<Rational>& probs) {
    denom_ = 1;
    for (const auto& p : probs) {
        if (p.sign() < 0) throw InvalidInstanceError("negative probability");
        denom_ = lcm(denom_, p.den());
    }
    mpz_class acc = 0;
    for (const auto& p : probs) {
        acc += p.num() * (denom_ / p.den());
        cumulative_.push_back(acc);
    }
    if (acc != denom_) throw InvalidInstanceError("probabilities do not sum to 1");
}

size_t DiscreteSampler::sample(SplitMix64& rng) const {
    mpz_class draw;
    if (denom_.fits_ulong_p()) {
        draw = static_cast<unsigned long>(rng.below(denom_.get_ui()));
    } else {
        // assemble a uniform value below the denominator by rejection on
        // fixed-width blocks
        size_t bits = mpz_sizeinbase(denom_.get_mpz_t(), 2);
        while (true) {
            mpz_class x = 0;
            for (size_t got = 0; got < bits; got += 64) {
                x <<= 64;
                x += mpz_class(static_cast<unsigned long>(rng.next() >> (64 - std::min<size_t>(64, bits - got))));
            }
            if (x < denom_) {
                draw = x;
                break;
            }
        }
    }
    size_t lo = 0, hi = cumulative_.size() - 1;
    while (lo < hi) {
        size_t mid = (lo + hi) / 2;
        if (draw < cumulative_[mid]) hi = mid;
        else lo = mid + 1;
    }
    return lo;
}

SimulationReport simulate(const SeekerMixedStrategy& x, const HiderDistribution& y,
                          const std::vector<long long>& profit, long long trials, uint64_t seed) {
    if (trials <= 0) throw InvalidInstanceError("simulation needs a positive trial count");
    x.validate();
    y.validate();
    if (y.n() != x.n) throw InvalidInstanceError("strategy/distribution size mismatch");

    // per-entry discovery times and coverage, computed once
    std::vector<std::vector<int>> times;
    times.reserve(x.size());
    for (const auto& e : x.support) times.push_back(discovery_times(*e.tree, x.n, x.k));

    DiscreteSampler strategy_sampler(x.weights);
    DiscreteSampler vertex_sampler(y.y);
    SplitMix64 rng(seed);

    SimulationReport rep;
    rep.trials = trials;
    rep.seed = seed;
    rep.theoretical_value = expected_profit(x, y, profit);
    rep.vertex_coverage.assign(static_cast<size_t>(x.n), 0.0);

    long double sum = 0, sumsq = 0;
    for (long long trial = 0; trial < trials; ++trial) {
        size_t si = strategy_sampler.sample(rng);
        size_t v = vertex_sampler.sample(rng);
        long long p = profit[static_cast<size_t>(times[si][v])];
        sum += static_cast<long double>(p);
        sumsq += static_cast<long double>(p) * static_cast<long double>(p);
        const auto& h = times[si];
        for (long long u = 0; u < x.n; ++u)
            if (h[static_cast<size_t>(u)] <= x.k) rep.vertex_coverage[static_cast<size_t>(u)] += 1.0;
    }
    for (auto& c : rep.vertex_coverage) c /= static_cast<double>(trials);
    double mean = static_cast<double>(sum / trials);
    double var = static_cast<double>(sumsq / trials) - mean * mean;
    rep.empirical_value = mean;
    rep.standard_error = std::sqrt(std::max(0.0, var) / static_cast<double>(trials));
    return rep;
}

}  // namespace bsg
