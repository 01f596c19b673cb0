#include "doctest.h"

#include "bsg/labeling.hpp"
#include "bsg/simulate.hpp"

using namespace bsg;

namespace {

/// 17-vertex out-tree used for the visibility checks: root 0 with four
/// children, deep chain under child 1, branching under child 2.
TreeInstance visibility_example() {
    std::vector<std::pair<int, int>> edges = {
        {0, 1}, {0, 2}, {0, 3}, {0, 4},   // e1..e4
        {1, 5}, {5, 6}, {5, 7},           // chain under v1
        {2, 8}, {2, 9}, {8, 10}, {9, 11}, {9, 12},
        {3, 13}, {3, 14},
        {4, 15}, {15, 16}};
    return TreeInstance(17, 6, std::move(edges));
}

ValidLabeling visibility_labels() {
    return {0, 1, 0, 3, 6, 5, 4, 2, 0, 1, 0, 0, 0, 0, 2, 1};
}

}  // namespace

TEST_CASE("visibility sequences on the four-branch example") {
    auto inst = visibility_example();
    auto f = visibility_labels();
    auto o = orient(inst, 0);
    auto vis = visibility_sequences(f, inst, o);

    CHECK(mask_labels(vis.edge_mask[0]) == std::vector<int>{0, 6});
    CHECK(mask_labels(vis.edge_mask[1]) == std::vector<int>{1, 2});
    CHECK(mask_labels(vis.edge_mask[2]) == std::vector<int>{0});
    CHECK(mask_labels(vis.edge_mask[3]) == std::vector<int>{3});
    CHECK(mask_labels(vis.vertex_mask[0]) == std::vector<int>{0, 1, 2, 3, 6});

    CHECK(labeling_is_valid(f, inst));
    CHECK(labeling_is_valid_pairwise(f, inst));
}

TEST_CASE("leaf edge sees only its own label") {
    auto inst = TreeInstance::path(2, 3);
    ValidLabeling f = {2};
    auto vis = visibility_sequences(f, inst, orient(inst, 0));
    CHECK(mask_labels(vis.edge_mask[0]) == std::vector<int>{2});
}

TEST_CASE("all-zero labeling is valid, unscreened repeats are not") {
    auto p4 = TreeInstance::path(4, 2);
    CHECK(labeling_is_valid({0, 0, 0}, p4));
    CHECK(labeling_is_valid_pairwise({0, 0, 0}, p4));

    CHECK_FALSE(labeling_is_valid({1, 0, 1}, p4));
    CHECK_FALSE(labeling_is_valid_pairwise({1, 0, 1}, p4));

    CHECK(labeling_is_valid({1, 2, 1}, p4));
    CHECK(labeling_is_valid_pairwise({1, 2, 1}, p4));
}

TEST_CASE("local and pairwise validity agree on random labelings") {
    SplitMix64 rng(31);
    for (int round = 0; round < 400; ++round) {
        int n = 2 + static_cast<int>(rng.below(9));
        int k = 1 + static_cast<int>(rng.below(4));
        std::vector<std::pair<int, int>> edges;
        for (int v = 1; v < n; ++v)
            edges.push_back({static_cast<int>(rng.below(static_cast<uint64_t>(v))), v});
        TreeInstance inst(n, k, std::move(edges));
        ValidLabeling f(static_cast<size_t>(n - 1));
        for (auto& l : f) l = static_cast<int>(rng.below(static_cast<uint64_t>(k + 1)));
        CHECK(labeling_is_valid(f, inst) == labeling_is_valid_pairwise(f, inst));
    }
}

TEST_CASE("labeling discovery times take the smallest incident label") {
    auto p4 = TreeInstance::path(4, 2);
    ValidLabeling f = {1, 2, 0};
    auto h = labeling_discovery_times(f, p4);
    // vertex 0: labels {1} -> 2; vertex 1: {1,2} -> 2; vertex 2: {2,0} -> 3; vertex 3: {0} -> 3
    CHECK(h == std::vector<int>{2, 2, 3, 3});
}
