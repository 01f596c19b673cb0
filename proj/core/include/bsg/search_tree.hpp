#pragma once

#include <vector>

#include "bsg/instance.hpp"
#include "bsg/mod_interval.hpp"

namespace bsg {

/// Vertex set attached to a leaf of a search tree. Line strategies keep
/// interval runs; general tree strategies keep sorted vertex lists.
struct LeafSet {
    std::vector<ModInterval> intervals;  // used on line instances
    std::vector<int> vertices;           // used on general trees
    bool interval_form = false;

    static LeafSet from_intervals(std::vector<ModInterval> iv) {
        LeafSet s;
        s.intervals = std::move(iv);
        s.interval_form = true;
        return s;
    }
    static LeafSet from_vertices(std::vector<int> vs) {
        LeafSet s;
        s.vertices = std::move(vs);
        return s;
    }

    long long size() const {
        if (!interval_form) return static_cast<long long>(vertices.size());
        long long t = 0;
        for (const auto& iv : intervals) t += iv.cardinality();
        return t;
    }

    bool is_singleton() const { return size() == 1; }

    /// The unique vertex of a singleton leaf.
    long long singleton_vertex() const {
        if (!interval_form) return vertices.front();
        for (const auto& iv : intervals)
            if (!iv.empty()) return iv.start;
        throw VerificationError("singleton_vertex on empty leaf");
    }

    std::vector<long long> all_vertices() const {
        if (!interval_form) return {vertices.begin(), vertices.end()};
        std::vector<long long> out;
        for (const auto& iv : intervals)
            for (long long v : iv.vertices()) out.push_back(v);
        return out;
    }
};

/// A search strategy: a rooted binary tree whose internal nodes query edges
/// of the instance graph and whose leaves carry the vertex sets that remain
/// consistent with all answers. The left child corresponds to the component
/// of the smaller-indexed query endpoint.
class SearchTree {
  public:
    struct Node {
        int query_u = -1, query_v = -1;  // internal iff query_u >= 0
        int left = -1, right = -1;
        LeafSet leaf;

        bool is_leaf() const { return query_u < 0; }
    };

    SearchTree() = default;

    int add_leaf(LeafSet s) {
        nodes_.push_back(Node{});
        nodes_.back().leaf = std::move(s);
        return static_cast<int>(nodes_.size()) - 1;
    }
    int add_query(int u, int v, int left, int right) {
        Node nd;
        nd.query_u = u;
        nd.query_v = v;
        nd.left = left;
        nd.right = right;
        nodes_.push_back(nd);
        return static_cast<int>(nodes_.size()) - 1;
    }
    void set_root(int r) { root_ = r; }

    int root() const { return root_; }
    bool empty_strategy() const { return root_ < 0 || nodes_[static_cast<size_t>(root_)].is_leaf(); }
    const Node& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
    int node_count() const { return static_cast<int>(nodes_.size()); }

    int height() const;
    int leaf_count() const;

  private:
    std::vector<Node> nodes_;
    int root_ = -1;
};

/// Vertices the strategy identifies unequivocally: the singleton leaf sets.
std::vector<long long> covered_set(const SearchTree& t);

/// Per-vertex discovery times in {1..k+1}: the root-to-leaf depth for
/// vertices covered as singletons, k+1 for everything else. A singleton
/// root (only possible on a one-vertex component) yields 0.
std::vector<int> discovery_times(const SearchTree& t, long long n, int k);

/// Recursive well-formedness check against the instance: each query edge
/// must lie inside the node's current component and the children must carry
/// the two components of the split; leaf sets must match exactly.
void validate_search_tree(const SearchTree& t, const TreeInstance& instance);

}  // namespace bsg
