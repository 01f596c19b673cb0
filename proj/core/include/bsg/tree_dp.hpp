#pragma once

#include "bsg/labeling.hpp"
#include "bsg/search_tree.hpp"

namespace bsg {

/// Result of the bottom-up best-response computation: the optimal expected
/// profit over all valid labelings, one arg-max labeling, and the table
/// footprint for the size assertion.
struct BestResponse {
    Rational value;
    ValidLabeling labeling;
    size_t peak_table_entries = 0;
    size_t table_entry_bound = 0;  // 2n * 2^(k+1)
};

/// Maximizes Sum_v y_v * p(h_f(v)) over valid labelings with a two-table
/// dynamic program over visibility masks. Ties are broken by preferring
/// numerically larger masks ("first maximum wins" under descending submask
/// enumeration), which keeps reconstruction deterministic and the returned
/// labeling maximal. O(n^2 4^k) time, O(n 2^k) table entries.
BestResponse best_response_dp(const TreeInstance& instance, const HiderDistribution& y);

/// Turns a valid labeling into a search strategy: query the unique
/// maximum-label edge, recurse into both components. Height is at most k
/// and every vertex satisfies p(h_T(v)) >= p(h_f(v)). The all-zero
/// labeling maps to the single-leaf strategy.
SearchTree labeling_to_strategy(const ValidLabeling& f, const TreeInstance& instance, int k);

/// Canonical labeling of a strategy: a queried edge gets k minus the depth
/// of its query node, unqueried edges get 0. The output is always valid
/// and reproduces the strategy's discovery times exactly.
ValidLabeling strategy_to_labeling(const SearchTree& t, const TreeInstance& instance, int k);

}  // namespace bsg
