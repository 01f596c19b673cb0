#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bsg/hider.hpp"
#include "bsg/search_tree.hpp"

namespace bsg {

/// A mixed strategy for the seeker: explicit search trees with exact
/// weights. Entries built by the line solver also remember the compact
/// start-vertex descriptor of their covered run.
struct SeekerMixedStrategy {
    struct Entry {
        std::optional<long long> line_start;
        std::shared_ptr<const SearchTree> tree;
    };

    long long n = 0;
    int k = 0;
    std::vector<Entry> support;
    std::vector<Rational> weights;

    void add(std::shared_ptr<const SearchTree> tree, Rational weight,
             std::optional<long long> line_start = std::nullopt) {
        support.push_back({line_start, std::move(tree)});
        weights.push_back(std::move(weight));
    }

    size_t size() const { return support.size(); }

    bool is_distribution() const {
        Rational sum(0);
        for (const auto& w : weights) {
            if (w.sign() < 0) return false;
            sum += w;
        }
        return sum == Rational(1);
    }

    void validate() const;

    /// Per-vertex payoff Sum_T x_T * p(h_T(v)).
    std::vector<Rational> payoff_by_vertex(const std::vector<long long>& profit) const;
};

/// Exact expected profit Sum_T Sum_v y_v * x_T * p(h_T(v)).
Rational expected_profit(const SeekerMixedStrategy& x, const HiderDistribution& y,
                         const std::vector<long long>& profit);

}  // namespace bsg
