#include "bsg/instance.hpp"

#include <algorithm>
#include <numeric>

namespace bsg {

LineInstance::LineInstance(long long n_, int k_) : n(n_), k(k_) {
    if (n < 2) throw InvalidInstanceError("line instance needs at least 2 vertices");
    if (k < 0 || k > 60) throw InvalidInstanceError("query budget out of range");
    c = (1LL << k) - 2;
}

TreeInstance::TreeInstance(int n_, int k_, std::vector<std::pair<int, int>> edges_,
                           std::vector<long long> profit_1_to_k,
                           std::optional<HiderDistribution> hider_)
    : n(n_), k(k_), edges(std::move(edges_)), hider(std::move(hider_)) {
    if (n < 1) throw InvalidInstanceError("tree instance needs at least 1 vertex");
    if (k < 0 || k > 30) throw InvalidInstanceError("query budget out of range");
    if (static_cast<int>(edges.size()) != n - 1)
        throw InvalidInstanceError("a tree on n vertices has exactly n-1 edges");

    adj.assign(static_cast<size_t>(n), {});
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        auto [u, v] = edges[static_cast<size_t>(i)];
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw InvalidInstanceError("edge endpoint out of range");
        adj[static_cast<size_t>(u)].push_back({v, i});
        adj[static_cast<size_t>(v)].push_back({u, i});
    }

    // connectivity (with n-1 edges this also rules out cycles)
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, ei] : adj[static_cast<size_t>(u)]) {
            (void)ei;
            if (!seen[static_cast<size_t>(v)]) {
                seen[static_cast<size_t>(v)] = 1;
                ++count;
                stack.push_back(v);
            }
        }
    }
    if (count != n) throw InvalidInstanceError("edge list does not form a connected tree");

    profit.assign(static_cast<size_t>(k) + 2, 0);
    if (profit_1_to_k.empty()) {
        for (int t = 1; t <= k; ++t) profit[static_cast<size_t>(t)] = 1;
    } else {
        if (static_cast<int>(profit_1_to_k.size()) != k)
            throw InvalidInstanceError("profit table must have exactly k entries");
        for (int t = 1; t <= k; ++t) profit[static_cast<size_t>(t)] = profit_1_to_k[static_cast<size_t>(t - 1)];
    }
    for (int t = 1; t <= k; ++t) {
        if (p(t) < 0) throw InvalidInstanceError("profit values must be nonnegative");
        if (p(t) < p(t + 1)) throw InvalidInstanceError("profit table must be non-increasing");
    }

    if (hider) {
        if (hider->n() != n) throw InvalidInstanceError("hider distribution size mismatch");
        hider->validate();
    }
}

TreeInstance TreeInstance::path(int n_, int k_) {
    std::vector<std::pair<int, int>> es;
    es.reserve(static_cast<size_t>(n_ > 0 ? n_ - 1 : 0));
    for (int v = 0; v + 1 < n_; ++v) es.push_back({v, v + 1});
    return TreeInstance(n_, k_, std::move(es));
}

bool TreeInstance::is_sorted_path() const {
    for (int i = 0; i < edge_count(); ++i) {
        auto [u, v] = edges[static_cast<size_t>(i)];
        if (std::min(u, v) != i || std::max(u, v) != i + 1) return false;
    }
    return true;
}

int TreeInstance::edge_index(int u, int v) const {
    for (auto [w, ei] : adj[static_cast<size_t>(u)])
        if (w == v) return ei;
    return -1;
}

}  // namespace bsg
