#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "bsg/errors.hpp"
#include "bsg/hider.hpp"

namespace bsg {

/// Line-graph instance: vertices 0..n-1, edges {v, v+1}, query budget k.
/// The derived capacity c = 2^k - 2 is the number of interior vertices a
/// single budget-k strategy can pin down exactly.
struct LineInstance {
    long long n = 0;
    int k = 0;
    long long c = 0;

    LineInstance(long long n_, int k_);
};

/// General tree instance with a non-increasing profit table.
///
/// `profit[t]` for t in 1..k+1 is the seeker's profit when the target is
/// identified with exactly t queries; profit[k+1] is always 0 and profit[0]
/// is unused. An absent profit table means unit profit.
struct TreeInstance {
    int n = 0;
    int k = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<long long> profit;                     // size k+2, index by query count
    std::optional<HiderDistribution> hider;
    std::vector<std::vector<std::pair<int, int>>> adj;  // (neighbor, edge index), input order

    TreeInstance() = default;
    TreeInstance(int n_, int k_, std::vector<std::pair<int, int>> edges_,
                 std::vector<long long> profit_1_to_k = {},
                 std::optional<HiderDistribution> hider_ = std::nullopt);

    /// Line graph 0-1-2-...-(n-1) with unit profit.
    static TreeInstance path(int n_, int k_);

    long long p(int t) const { return profit[static_cast<size_t>(t)]; }
    int edge_count() const { return static_cast<int>(edges.size()); }

    /// True when the edge list is exactly {i, i+1} for consecutive vertices.
    bool is_sorted_path() const;

    /// Index of the edge between u and v, or -1.
    int edge_index(int u, int v) const;
};

}  // namespace bsg
