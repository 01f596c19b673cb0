#pragma once

#include <cstdint>

#include "bsg/seeker.hpp"

namespace bsg {

/// Seedable counter-based generator (splitmix64): the i-th output is a
/// pure function of seed and i, so runs are reproducible and streams can
/// be split by offsetting the counter.
class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw in [0, m) by rejection; no modulo bias.
    uint64_t below(uint64_t m);

  private:
    uint64_t state_;
};

/// Exact sampler for a rational distribution: draws an integer uniform
/// below the common denominator and walks the cumulative numerators.
class DiscreteSampler {
  public:
    explicit DiscreteSampler(const std::vector<Rational>& probs);
    size_t sample(SplitMix64& rng) const;

  private:
    mpz_class denom_;
    std::vector<mpz_class> cumulative_;
};

struct SimulationReport {
    long long trials = 0;
    uint64_t seed = 0;
    double empirical_value = 0;           // mean per-trial profit (hit rate under unit profit)
    Rational theoretical_value;
    double standard_error = 0;            // of the per-trial profit mean
    std::vector<double> vertex_coverage;  // fraction of sampled strategies covering v
};

/// Plays `trials` independent rounds: sample a strategy from x, a hider
/// vertex from y, record the profit of the resulting discovery time.
/// Deterministic given the seed.
SimulationReport simulate(const SeekerMixedStrategy& x, const HiderDistribution& y,
                          const std::vector<long long>& profit, long long trials, uint64_t seed);

}  // namespace bsg
