#pragma once

#include "bsg/seeker.hpp"
#include "bsg/simplex.hpp"
#include "bsg/tree_dp.hpp"

namespace bsg {

/// Exact Nash equilibrium with primal and dual certificates. The bound
/// min_v seeker_payoff_by_vertex[v] == value == max_j hider_payoff_by_column[j]
/// holds exactly on return.
struct EquilibriumResult {
    Rational value;
    SeekerMixedStrategy seeker;
    HiderDistribution hider;
    int iterations = 0;
    std::vector<Rational> seeker_payoff_by_vertex;
    std::vector<Rational> hider_payoff_by_column;
};

/// Pure best response of the hider against a fixed seeker mix: the vertex
/// minimizing the expected payoff, with its value.
std::pair<int, Rational> hider_best_response(const SeekerMixedStrategy& x,
                                             const TreeInstance& instance);

/// Column generation over the strategy LP: restricted masters solved with
/// the exact simplex, new columns produced by the best-response dynamic
/// program, terminating when the master value matches the best response
/// exactly. The first column is the best response to the uniform hider.
EquilibriumResult solve_equilibrium(const TreeInstance& instance, int max_iters = 500);

}  // namespace bsg
