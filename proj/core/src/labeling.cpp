#include "bsg/labeling.hpp"

#include <algorithm>

namespace bsg {

Orientation orient(const TreeInstance& instance, int root) {
    Orientation o;
    o.root = root;
    int n = instance.n;
    o.parent.assign(static_cast<size_t>(n), -1);
    o.parent_edge.assign(static_cast<size_t>(n), -1);
    o.children.assign(static_cast<size_t>(n), {});

    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    std::vector<int> stack = {root};
    std::vector<char> seen(static_cast<size_t>(n), 0);
    seen[static_cast<size_t>(root)] = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        order.push_back(u);
        for (auto [v, ei] : instance.adj[static_cast<size_t>(u)]) {
            if (seen[static_cast<size_t>(v)]) continue;
            seen[static_cast<size_t>(v)] = 1;
            o.parent[static_cast<size_t>(v)] = u;
            o.parent_edge[static_cast<size_t>(v)] = ei;
            o.children[static_cast<size_t>(u)].push_back({v, ei});
            stack.push_back(v);
        }
    }
    o.postorder.assign(order.rbegin(), order.rend());
    return o;
}

static void require_labeling(const ValidLabeling& f, const TreeInstance& instance) {
    if (static_cast<int>(f.size()) != instance.edge_count())
        throw InvalidInstanceError("labeling size does not match the edge count");
    for (int l : f)
        if (l < 0 || l > instance.k) throw InvalidInstanceError("edge label out of range");
}

VisibilityData visibility_sequences(const ValidLabeling& f, const TreeInstance& instance,
                                    const Orientation& o) {
    require_labeling(f, instance);
    VisibilityData vis;
    vis.edge_mask.assign(static_cast<size_t>(instance.edge_count()), 0);
    vis.vertex_mask.assign(static_cast<size_t>(instance.n), 0);
    for (int v : o.postorder) {
        uint32_t s = 0;
        for (auto [w, ei] : o.children[static_cast<size_t>(v)]) {
            (void)w;
            s |= vis.edge_mask[static_cast<size_t>(ei)];
        }
        vis.vertex_mask[static_cast<size_t>(v)] = s;
        int pe = o.parent_edge[static_cast<size_t>(v)];
        if (pe >= 0) {
            int l = f[static_cast<size_t>(pe)];
            // labels below l are screened by the edge itself
            uint32_t shown = s & ~((1u << l) - 1u);
            vis.edge_mask[static_cast<size_t>(pe)] = shown | (1u << l);
        }
    }
    return vis;
}

std::vector<int> mask_labels(uint32_t mask) {
    std::vector<int> out;
    for (int l = 0; l < 32; ++l)
        if (mask & (1u << l)) out.push_back(l);
    return out;
}

bool labeling_is_valid(const ValidLabeling& f, const TreeInstance& instance) {
    Orientation o = orient(instance, 0);
    VisibilityData vis = visibility_sequences(f, instance, o);
    for (int v = 0; v < instance.n; ++v) {
        int pe = o.parent_edge[static_cast<size_t>(v)];
        if (pe >= 0) {
            int l = f[static_cast<size_t>(pe)];
            if (l > 0 && (vis.vertex_mask[static_cast<size_t>(v)] & (1u << l))) return false;
        }
        uint32_t acc = 0;
        for (auto [w, ei] : o.children[static_cast<size_t>(v)]) {
            (void)w;
            uint32_t le = vis.edge_mask[static_cast<size_t>(ei)];
            if (le & acc & ~1u) return false;
            acc |= le;
        }
    }
    return true;
}

bool labeling_is_valid_pairwise(const ValidLabeling& f, const TreeInstance& instance) {
    require_labeling(f, instance);
    int m = instance.edge_count();
    Orientation o = orient(instance, 0);
    std::vector<int> depth(static_cast<size_t>(instance.n), 0);
    {
        std::vector<int> stack = {0};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [w, ei] : o.children[static_cast<size_t>(u)]) {
                (void)ei;
                depth[static_cast<size_t>(w)] = depth[static_cast<size_t>(u)] + 1;
                stack.push_back(w);
            }
        }
    }
    // vertex path between a and b via parent pointers
    auto vertex_path = [&](int a, int b) {
        std::vector<int> left, right;
        while (a != b) {
            if (depth[static_cast<size_t>(a)] >= depth[static_cast<size_t>(b)]) {
                left.push_back(a);
                a = o.parent[static_cast<size_t>(a)];
            } else {
                right.push_back(b);
                b = o.parent[static_cast<size_t>(b)];
            }
        }
        left.push_back(a);
        left.insert(left.end(), right.rbegin(), right.rend());
        return left;
    };

    for (int e1 = 0; e1 < m; ++e1) {
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            int l = f[static_cast<size_t>(e1)];
            if (l == 0 || f[static_cast<size_t>(e2)] != l) continue;
            // connecting path: from the near endpoint of e1 to the near
            // endpoint of e2; interior edges must screen the pair
            auto [a1, b1] = instance.edges[static_cast<size_t>(e1)];
            auto [a2, b2] = instance.edges[static_cast<size_t>(e2)];
            std::vector<int> best;
            for (int u : {a1, b1})
                for (int v : {a2, b2}) {
                    auto p = vertex_path(u, v);
                    if (best.empty() || p.size() < best.size()) best = p;
                }
            bool screened = false;
            for (size_t i = 0; i + 1 < best.size(); ++i) {
                int ei = instance.edge_index(best[i], best[i + 1]);
                if (f[static_cast<size_t>(ei)] > l) screened = true;
            }
            if (!screened) return false;
        }
    }
    return true;
}

std::vector<int> labeling_discovery_times(const ValidLabeling& f, const TreeInstance& instance) {
    require_labeling(f, instance);
    std::vector<int> h(static_cast<size_t>(instance.n), instance.k + 1);
    for (int v = 0; v < instance.n; ++v) {
        int minl = instance.k + 1;
        for (auto [w, ei] : instance.adj[static_cast<size_t>(v)]) {
            (void)w;
            minl = std::min(minl, f[static_cast<size_t>(ei)]);
        }
        if (minl <= instance.k) h[static_cast<size_t>(v)] = instance.k + 1 - minl;
    }
    return h;
}

Rational labeling_profit(const ValidLabeling& f, const TreeInstance& instance,
                         const HiderDistribution& y) {
    auto h = labeling_discovery_times(f, instance);
    Rational total(0);
    for (int v = 0; v < instance.n; ++v) {
        long long p = instance.p(h[static_cast<size_t>(v)]);
        if (p != 0) total += y.y[static_cast<size_t>(v)] * Rational(p);
    }
    return total;
}

}  // namespace bsg
