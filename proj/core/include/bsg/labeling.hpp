#pragma once

#include <cstdint>
#include <vector>

#include "bsg/instance.hpp"

namespace bsg {

/// Edge labels in {0..k} indexed by the instance's edge order. Encodes a
/// search strategy: an edge labeled l is queried with l units of budget
/// still available; label 0 means "never queried".
using ValidLabeling = std::vector<int>;

/// Rooted orientation of the instance tree; children keep the adjacency
/// (input) order.
struct Orientation {
    int root = 0;
    std::vector<int> parent;      // -1 at the root
    std::vector<int> parent_edge; // edge index towards the parent, -1 at the root
    std::vector<std::vector<std::pair<int, int>>> children;  // (child, edge index)
    std::vector<int> postorder;   // children listed before their parent
};

Orientation orient(const TreeInstance& instance, int root = 0);

/// Label sets visible along directed paths, as (k+1)-bit masks: a label
/// survives until some strictly larger label screens it.
struct VisibilityData {
    std::vector<uint32_t> edge_mask;    // L(e), by edge index
    std::vector<uint32_t> vertex_mask;  // S(u) = union of outgoing L(e)
};

VisibilityData visibility_sequences(const ValidLabeling& f, const TreeInstance& instance,
                                    const Orientation& o);

/// Ascending list of labels in a visibility mask.
std::vector<int> mask_labels(uint32_t mask);

/// Local validity test under one fixed orientation: an incoming positive
/// label must not reappear below its endpoint, and sibling sequences may
/// share only label 0.
bool labeling_is_valid(const ValidLabeling& f, const TreeInstance& instance);

/// Direct pairwise test: equal positive labels need a strictly larger
/// label somewhere on their connecting path. Quadratic; reference check.
bool labeling_is_valid_pairwise(const ValidLabeling& f, const TreeInstance& instance);

/// Discovery time induced by a labeling: k+1 minus the smallest incident
/// label.
std::vector<int> labeling_discovery_times(const ValidLabeling& f, const TreeInstance& instance);

/// Sum of y_v * p(h_f(v)).
Rational labeling_profit(const ValidLabeling& f, const TreeInstance& instance,
                         const HiderDistribution& y);

}  // namespace bsg
