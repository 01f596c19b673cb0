#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "bsg/seeker.hpp"
#include "bsg/simplex.hpp"

namespace bsg {

/// Exhaustive catalog of every search strategy of height <= k on a small
/// instance, deduplicated by payoff profile (p applied to the discovery
/// times). Each profile keeps one explicit witness tree, materialized on
/// demand from the recursion that produced it.
class StrategyCatalog {
  public:
    struct Limits {
        int max_n = 16;
        int max_k = 6;
        size_t max_stored_profiles = 4'000'000;
    };

    static StrategyCatalog build(const TreeInstance& inst, Limits limits);
    static StrategyCatalog build(const TreeInstance& inst) { return build(inst, Limits{}); }

    size_t size() const { return profiles_.size(); }
    const std::vector<long long>& profile(size_t i) const { return profiles_[i]; }
    SearchTree materialize(size_t i) const;

    /// Distinct discovery-time vectors at the root component, before the
    /// profit collapse.
    size_t distinct_h_profiles() const;

    const TreeInstance& instance() const { return inst_; }

  private:
    struct Variant {
        std::vector<uint8_t> h;  // per component vertex; 255 = not covered
        int split = -1;          // edge (global index / local cut); -1 = leaf
        int li = 0, ri = 0;
        uint64_t lkey = 0, rkey = 0;
    };

    TreeInstance inst_;  // owned copy; catalogs outlive their builders
    bool canonical_ = false;  // sorted-path instance: components keyed by length
    uint64_t root_key_ = 0;
    std::unordered_map<uint64_t, std::vector<Variant>> memo_;
    std::vector<std::vector<long long>> profiles_;
    std::vector<std::pair<uint64_t, int>> witnesses_;  // (key, variant) per profile

    friend class CatalogBuilder;
};

/// All strategies on small instances (n=2 -> empty + query; the empty
/// strategy is its own profile).
StrategyCatalog enumerate_strategies(const TreeInstance& inst,
                                     StrategyCatalog::Limits limits = {});

/// Best payoff over the whole catalog: exhaustive scan.
std::pair<Rational, SearchTree> brute_force_best_response(const HiderDistribution& y,
                                                          const StrategyCatalog& catalog);

/// Covered-vertex bitmasks of line strategies, enumerated by composing
/// sub-path results. In reduced mode every kept mask is still realizable
/// and every inclusion-maximal covered set is kept, which is exactly what
/// the value LP needs; full mode keeps every distinct covered set.
class LineCoverageEnumerator {
  public:
    LineCoverageEnumerator(int k, bool reduced);

    /// Covered sets of height-<=budget strategies on a path of len vertices.
    const std::vector<uint64_t>& sets(long long len, int budget);
    const std::vector<uint64_t>& sets(long long len) { return sets(len, k_); }

  private:
    int k_;
    bool reduced_;
    std::unordered_map<uint64_t, std::vector<uint64_t>> memo_;
};

/// Inclusion-maximal members of a family of bitmasks.
std::vector<uint64_t> maximal_masks(std::vector<uint64_t> masks);

/// Exact optimum of the full strategy-vs-vertex LP, with equilibrium
/// certificates. Row generation keeps the simplex small; termination is
/// decided by an exhaustive exact scan over every row, so the result is
/// the optimum of the complete matrix.
struct FullMatrixResult {
    Rational value;
    HiderDistribution hider;
    SeekerMixedStrategy seeker;
    size_t rows = 0;
    int iterations = 0;
};

FullMatrixResult full_matrix_value(const TreeInstance& inst, StrategyCatalog::Limits limits = {});

/// Unit-profit line specialisation backed by the coverage enumerator;
/// handles any k >= 0 and n up to the 64-bit mask width.
FullMatrixResult full_matrix_value_line(long long n, int k);

}  // namespace bsg
