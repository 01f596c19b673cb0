#include "bsg/search_tree.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bsg {

int SearchTree::height() const {
    if (root_ < 0) return 0;
    std::function<int(int)> rec = [&](int i) -> int {
        const Node& nd = nodes_[static_cast<size_t>(i)];
        if (nd.is_leaf()) return 0;
        return 1 + std::max(rec(nd.left), rec(nd.right));
    };
    return rec(root_);
}

int SearchTree::leaf_count() const {
    if (root_ < 0) return 0;
    std::function<int(int)> rec = [&](int i) -> int {
        const Node& nd = nodes_[static_cast<size_t>(i)];
        if (nd.is_leaf()) return 1;
        return rec(nd.left) + rec(nd.right);
    };
    return rec(root_);
}

std::vector<long long> covered_set(const SearchTree& t) {
    std::vector<long long> out;
    if (t.root() < 0) return out;
    std::function<void(int)> rec = [&](int i) {
        const auto& nd = t.node(i);
        if (nd.is_leaf()) {
            if (nd.leaf.is_singleton()) out.push_back(nd.leaf.singleton_vertex());
            return;
        }
        rec(nd.left);
        rec(nd.right);
    };
    rec(t.root());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> discovery_times(const SearchTree& t, long long n, int k) {
    std::vector<int> h(static_cast<size_t>(n), k + 1);
    if (t.root() < 0) return h;
    std::function<void(int, int)> rec = [&](int i, int depth) {
        const auto& nd = t.node(i);
        if (nd.is_leaf()) {
            if (nd.leaf.is_singleton()) h[static_cast<size_t>(nd.leaf.singleton_vertex())] = depth;
            return;
        }
        rec(nd.left, depth + 1);
        rec(nd.right, depth + 1);
    };
    rec(t.root(), 0);
    return h;
}

namespace {

std::set<int> component_of(const TreeInstance& g, const std::set<int>& inside, int start,
                           int banned_u, int banned_v) {
    std::set<int> comp;
    std::vector<int> stack = {start};
    comp.insert(start);
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (auto [v, ei] : g.adj[static_cast<size_t>(u)]) {
            (void)ei;
            if ((u == banned_u && v == banned_v) || (u == banned_v && v == banned_u)) continue;
            if (!inside.count(v) || comp.count(v)) continue;
            comp.insert(v);
            stack.push_back(v);
        }
    }
    return comp;
}

}  // namespace

void validate_search_tree(const SearchTree& t, const TreeInstance& instance) {
    if (t.root() < 0) throw VerificationError("search tree has no root");
    std::set<int> all;
    for (int v = 0; v < instance.n; ++v) all.insert(v);

    std::function<void(int, const std::set<int>&)> rec = [&](int i, const std::set<int>& comp) {
        const auto& nd = t.node(i);
        if (nd.is_leaf()) {
            auto vs = nd.leaf.all_vertices();
            std::set<int> got(vs.begin(), vs.end());
            std::set<int> want(comp.begin(), comp.end());
            if (got != want) throw VerificationError("leaf vertex set does not match its component");
            return;
        }
        if (!comp.count(nd.query_u) || !comp.count(nd.query_v))
            throw VerificationError("query edge outside current component");
        if (instance.edge_index(nd.query_u, nd.query_v) < 0)
            throw VerificationError("query edge not in the instance graph");
        auto cu = component_of(instance, comp, nd.query_u, nd.query_u, nd.query_v);
        auto cv = component_of(instance, comp, nd.query_v, nd.query_u, nd.query_v);
        if (cu.size() + cv.size() != comp.size())
            throw VerificationError("query split does not partition the component");
        rec(nd.left, cu);
        rec(nd.right, cv);
    };
    rec(t.root(), all);
}

}  // namespace bsg
