#pragma once

#include <string>
#include <vector>

#include "bsg/hider.hpp"
#include "bsg/mod_interval.hpp"
#include "bsg/seeker.hpp"

namespace bsg {

/// Output of the O(log n) parameter computation for a line instance.
/// h and w satisfy h*(n-1) - w*c = 1 when gcd(c, n-1) = 1 and = 0 otherwise,
/// with 0 < w <= n-2 minimal. h/w is the game value whenever n > 2^k.
struct BezoutResult {
    long long h = 0;
    long long w = 0;
    long long g = 0;  // gcd(c, n-1)
    Rational value;
    long long ops = 0;  // integer operations spent, for the O(log n) guard
};

/// The uneven hider construction for coprime instances: consecutive blocks
/// ("segments") of length r or r+1, each carrying total mass exactly 1/w,
/// distributed uniformly inside the block.
struct SegmentLayout {
    struct Segment {
        long long start = 0;
        long long length = 0;
        Rational mass_per_vertex;
    };
    long long r = 0;  // short segment length, floor(c/h)
    long long t = 0;  // (n-1) mod c
    long long w = 0;
    std::vector<Segment> segments;
};

/// Outcome of the hider property verifier. Failed checks carry a witness.
struct HiderReport {
    bool ok = true;
    std::vector<std::string> failures;

    void fail(std::string msg) {
        ok = false;
        failures.push_back(std::move(msg));
    }
};

/// Full equilibrium description of a line instance.
struct LineSolution {
    Rational value;
    BezoutResult bezout;
    std::vector<long long> seeker_starts;
    SeekerMixedStrategy seeker;
    HiderDistribution hider;
    bool trivial = false;  // n <= 2^k: plain binary search wins everywhere
};

/// Solves h*(n-1) - w*c in {0, 1} for the minimal positive w via the
/// extended Euclidean algorithm. Requires k >= 2 and n > 2^k.
BezoutResult compute_hw(long long n, int k);
inline BezoutResult compute_hw(const LineInstance& li) { return compute_hw(li.n, li.k); }

/// Start vertices of the greedy covering family, in insertion order:
/// 0, then (t*c mod (n-1)) + 1 for t = 1..w-1.
std::vector<long long> seeker_starts(long long n, int k);

/// Reference implementation of the greedy insertion loop (O(w) time);
/// kept for cross-checking the closed-form enumeration.
std::vector<long long> seeker_starts_reference(long long n, int k);

/// The uniform mixture over the covering family, with its strategies
/// materialized. Requires k >= 2 and n > 2^k.
SeekerMixedStrategy greedy_seeker(long long n, int k);

/// Start vertex of the t-th strategy without running the loop. O(log n).
long long sample_seeker(long long n, int k, long long t);

/// Builds the search tree whose leaves are exactly the intervals
/// [boundaries[i], boundaries[i+1]-1]. Requires boundaries.front() == 0,
/// boundaries.back() == n and at most 2^k leaves. When more than 2^(k-1)
/// leaves remain the split is pinned at index 2^(k-1), otherwise balanced.
SearchTree build_strategy_from_partition(const std::vector<long long>& boundaries, int k);

/// The budget-k strategy covering the longest run starting at v: c+1
/// vertices when the run touches vertex 0 or n-1, c vertices otherwise.
/// v = 1 admits no such strategy and is rejected.
SearchTree efficient_strategy(long long v, long long n, int k);

/// Covered run of efficient_strategy(v) as a modular interval.
ModInterval efficient_covered_interval(long long v, long long n, int k);

/// Exact test of the three structural conditions characterizing maximal
/// covered sets: no run starts at 1 or ends at n-2, cyclic gaps of at
/// least 2, and total length c+1-s (c+2-s when 0 or n-1 is covered).
/// Overlapping input intervals are rejected; touching ones are merged.
bool is_maximal_covered_set(std::vector<ModInterval> intervals, long long n, int k);

/// Hider construction when d = gcd(c, n-1) > 1: zero mass on multiples of
/// d, 1/(w(d-1)) elsewhere.
HiderDistribution hider_noncoprime(long long n, int k);

/// Hider construction when gcd(c, n-1) = 1: the greedy segment layout.
std::pair<HiderDistribution, SegmentLayout> hider_coprime(long long n, int k);

/// Checks every structural property the hider constructions guarantee:
/// cumulative-mass bracketing, segment indexing, periodicity, extremal and
/// spread inequalities, and merge monotonicity. Works on any candidate y;
/// violations are reported with witnesses rather than thrown.
HiderReport verify_hider(const HiderDistribution& y, long long n, int k);

/// Value plus both equilibrium strategies. Requires k >= 2; instances with
/// n <= 2^k short-circuit to value 1 with a full binary search.
LineSolution game_value_line(long long n, int k);
inline LineSolution game_value_line(const LineInstance& li) { return game_value_line(li.n, li.k); }

}  // namespace bsg
