#include <algorithm>

#include "doctest.h"

#include "bsg/line_solver.hpp"
#include "bsg/simulate.hpp"

using namespace bsg;

TEST_CASE("single-node strategy covers nothing") {
    SearchTree t;
    t.set_root(t.add_leaf(LeafSet::from_intervals({ModInterval(0, 5, 5)})));
    CHECK(covered_set(t).empty());
    CHECK(t.height() == 0);
    CHECK(t.leaf_count() == 1);
    auto h = discovery_times(t, 5, 3);
    for (int v = 0; v < 5; ++v) CHECK(h[v] == 4);
}

TEST_CASE("eight-leaf strategy covering two runs across the border") {
    // leaves: {0},{1},{2},{3,4,5},{6},{7},{8,9},{10}
    auto t = build_strategy_from_partition({0, 1, 2, 3, 6, 7, 8, 10, 11}, 3);
    CHECK(covered_set(t) == std::vector<long long>{0, 1, 2, 6, 7, 10});
    CHECK(t.leaf_count() == 8);
    CHECK(t.height() == 3);
    auto h = discovery_times(t, 11, 3);
    for (long long v : {3, 4, 5, 8, 9}) CHECK(h[v] == 4);
    for (long long v : {0, 1, 2, 6, 7, 10}) CHECK(h[v] <= 3);
    validate_search_tree(t, TreeInstance::path(11, 3));
}

TEST_CASE("interior two-run strategy and its pinned root split") {
    auto t = build_strategy_from_partition({0, 2, 3, 4, 6, 7, 8, 9, 11}, 3);
    CHECK(covered_set(t) == std::vector<long long>{2, 3, 6, 7, 8});
    // eight leaves force the split between the 4th and 5th interval
    CHECK(t.node(t.root()).query_u == 5);
    CHECK(t.node(t.root()).query_v == 6);
    validate_search_tree(t, TreeInstance::path(11, 3));
}

TEST_CASE("discovery times on tiny paths") {
    auto single = build_strategy_from_partition({0, 1, 2}, 1);
    CHECK(discovery_times(single, 2, 1) == std::vector<int>{1, 1});

    auto pendant = build_strategy_from_partition({0, 1, 4}, 1);
    CHECK(discovery_times(pendant, 4, 1) == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("trivial partition is the empty strategy") {
    auto t = build_strategy_from_partition({0, 9}, 3);
    CHECK(t.empty_strategy());
    CHECK(covered_set(t).empty());
}

TEST_CASE("full binary search covers every vertex") {
    auto t = build_strategy_from_partition({0, 1, 2, 3, 4}, 2);
    CHECK(covered_set(t) == std::vector<long long>{0, 1, 2, 3});
    CHECK(t.height() == 2);
}

TEST_CASE("partitions beyond 2^k intervals are rejected") {
    CHECK_THROWS_AS(build_strategy_from_partition({0, 1, 2, 3, 4, 5}, 2), InvalidInstanceError);
}

TEST_CASE("random partitions: leaves partition V, height within budget") {
    SplitMix64 rng(23);
    for (int round = 0; round < 300; ++round) {
        int k = 1 + static_cast<int>(rng.below(4));
        long long n = 2 + static_cast<long long>(rng.below(14));
        std::vector<long long> bounds = {0, n};
        long long max_leaves = 1LL << k;
        while (static_cast<long long>(bounds.size()) - 1 < max_leaves && rng.below(3) != 0) {
            long long cut = 1 + static_cast<long long>(rng.below(static_cast<uint64_t>(n - 1)));
            if (std::find(bounds.begin(), bounds.end(), cut) == bounds.end()) bounds.push_back(cut);
        }
        std::sort(bounds.begin(), bounds.end());
        auto t = build_strategy_from_partition(bounds, k);
        CHECK(t.height() <= k);
        CHECK(t.leaf_count() == static_cast<int>(bounds.size()) - 1);
        CHECK((1LL << t.height()) >= t.leaf_count());
        validate_search_tree(t, TreeInstance::path(static_cast<int>(n), k));

        // covered = exactly the unit-width cells of the partition
        std::vector<long long> want;
        for (size_t i = 0; i + 1 < bounds.size(); ++i)
            if (bounds[i + 1] - bounds[i] == 1) want.push_back(bounds[i]);
        CHECK(covered_set(t) == want);
    }
}

TEST_CASE("validation rejects a tree with a foreign query edge") {
    SearchTree t;
    int l1 = t.add_leaf(LeafSet::from_vertices({0}));
    int l2 = t.add_leaf(LeafSet::from_vertices({1, 2}));
    t.set_root(t.add_query(0, 2, l1, l2));  // {0,2} is not an edge of the path
    CHECK_THROWS_AS(validate_search_tree(t, TreeInstance::path(3, 1)), VerificationError);
}
