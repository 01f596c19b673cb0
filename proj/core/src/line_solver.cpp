#include "bsg/line_solver.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

namespace bsg {

namespace {

void require_closed_form_domain(long long n, int k) {
    LineInstance li(n, k);  // validates n and k ranges
    if (k < 2) throw InvalidInstanceError("closed-form line solver needs k >= 2");
    if (n <= li.c + 2) throw InvalidInstanceError("closed-form line solver needs n > 2^k");
}

}  // namespace

BezoutResult compute_hw(long long n, int k) {
    require_closed_form_domain(n, k);
    BezoutResult res;
    long long c = (1LL << k) - 2;
    long long m = n - 1;

    // extended Euclid on (m, c): old_s*m + old_t*c == old_r
    long long old_r = m, r = c;
    long long old_s = 1, s = 0;
    while (r != 0) {
        long long q = old_r / r;
        long long tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        res.ops += 6;
    }
    res.g = old_r;
    if (res.g > 1) {
        res.h = c / res.g;
        res.w = m / res.g;
        res.ops += 2;
    } else {
        // smallest h > 0 with h*m == 1 (mod c); then w = (h*m - 1)/c
        long long h = ((old_s % c) + c) % c;
        if (h == 0) h = c;  // c == 1 never happens here (k >= 2), kept for safety
        mpz_class prod = mpz_class(static_cast<long>(h)) * mpz_class(static_cast<long>(m));
        mpz_class wz = (prod - 1) / mpz_class(static_cast<long>(c));
        res.h = h;
        res.w = wz.get_si();
        res.ops += 6;
    }
    res.value = Rational(res.h, res.w);
    if (res.w <= 0 || res.w > n - 2) throw VerificationError("minimal multiplier out of range");
    return res;
}

long long sample_seeker(long long n, int k, long long t) {
    BezoutResult bz = compute_hw(n, k);
    if (t < 0 || t >= bz.w) throw InvalidInstanceError("sample index out of range");
    if (t == 0) return 0;
    long long c = (1LL << k) - 2;
    mpz_class prod = mpz_class(static_cast<long>(t)) * mpz_class(static_cast<long>(c));
    mpz_class rem = prod % mpz_class(static_cast<long>(n - 1));
    return rem.get_si() + 1;
}

std::vector<long long> seeker_starts(long long n, int k) {
    BezoutResult bz = compute_hw(n, k);
    long long c = (1LL << k) - 2;
    long long m = n - 1;
    std::vector<long long> starts;
    starts.reserve(static_cast<size_t>(bz.w));
    starts.push_back(0);
    long long pos = 0;
    for (long long t = 1; t < bz.w; ++t) {
        pos = (pos + c) % m;  // pos == t*c mod (n-1)
        starts.push_back(pos + 1);
    }
    return starts;
}

std::vector<long long> seeker_starts_reference(long long n, int k) {
    require_closed_form_domain(n, k);
    long long c = (1LL << k) - 2;
    long long m = n - 1;
    std::vector<long long> starts = {0};
    long long v = c + 1;
    while (v != 0 && v != 1) {
        starts.push_back(v);
        v = (v + c) % m;
    }
    return starts;
}

SeekerMixedStrategy greedy_seeker(long long n, int k) {
    BezoutResult bz = compute_hw(n, k);
    SeekerMixedStrategy x;
    x.n = n;
    x.k = k;
    Rational weight(1, bz.w);
    for (long long v : seeker_starts(n, k))
        x.add(std::make_shared<SearchTree>(efficient_strategy(v, n, k)), weight, v);
    return x;
}

SearchTree build_strategy_from_partition(const std::vector<long long>& boundaries, int k) {
    if (boundaries.size() < 2 || boundaries.front() != 0)
        throw InvalidInstanceError("partition must start at 0");
    for (size_t i = 0; i + 1 < boundaries.size(); ++i)
        if (boundaries[i] >= boundaries[i + 1])
            throw InvalidInstanceError("partition boundaries must be strictly increasing");
    long long n = boundaries.back();
    long long j = static_cast<long long>(boundaries.size()) - 1;
    if (k < 0 || (k < 62 && j > (1LL << k)))
        throw InvalidInstanceError("partition has more intervals than 2^k");

    SearchTree t;
    // build(lo, hi) covers leaves lo..hi-1 of the partition
    auto rec = [&](auto&& self, long long lo, long long hi, int budget) -> int {
        long long cnt = hi - lo;
        if (cnt == 1) {
            long long a = boundaries[static_cast<size_t>(lo)];
            long long b = boundaries[static_cast<size_t>(lo + 1)];
            return t.add_leaf(LeafSet::from_intervals({ModInterval(a, b - a, n)}));
        }
        long long half = budget >= 62 ? cnt : (1LL << (budget - 1));
        long long i = cnt > half ? lo + half : lo + (cnt + 1) / 2;
        long long cut = boundaries[static_cast<size_t>(i)];
        int left = self(self, lo, i, budget - 1);
        int right = self(self, i, hi, budget - 1);
        return t.add_query(static_cast<int>(cut - 1), static_cast<int>(cut), left, right);
    };
    t.set_root(rec(rec, 0, j, k));
    return t;
}

ModInterval efficient_covered_interval(long long v, long long n, int k) {
    require_closed_form_domain(n, k);
    if (v == 1) throw InvalidInstanceError("no maximal-run strategy starts at vertex 1");
    if (v < 0 || v >= n) throw InvalidInstanceError("start vertex out of range");
    long long c = (1LL << k) - 2;
    ModInterval longer(v, c + 1, n);
    if (longer.contains(0) || longer.contains(n - 1)) return longer;
    return ModInterval(v, c, n);
}

SearchTree efficient_strategy(long long v, long long n, int k) {
    ModInterval cov = efficient_covered_interval(v, n, k);
    std::vector<char> covered(static_cast<size_t>(n), 0);
    for (long long u : cov.vertices()) covered[static_cast<size_t>(u)] = 1;

    std::vector<long long> boundaries = {0};
    for (long long i = 1; i < n; ++i)
        if (covered[static_cast<size_t>(i)] || covered[static_cast<size_t>(i - 1)])
            boundaries.push_back(i);
    boundaries.push_back(n);
    return build_strategy_from_partition(boundaries, k);
}

bool is_maximal_covered_set(std::vector<ModInterval> intervals, long long n, int k) {
    if (k < 2 || k > 60) throw InvalidInstanceError("budget out of range");
    long long c = (1LL << k) - 2;
    std::erase_if(intervals, [](const ModInterval& iv) { return iv.empty(); });
    if (intervals.empty()) return false;
    for (const auto& iv : intervals)
        if (iv.modulus != n) throw InvalidInstanceError("interval modulus mismatch");
    for (size_t i = 0; i < intervals.size(); ++i)
        for (size_t j = i + 1; j < intervals.size(); ++j)
            if (!intervals[i].disjoint_from(intervals[j]))
                throw InvalidInstanceError("covered-set intervals overlap");

    std::sort(intervals.begin(), intervals.end(),
              [](const ModInterval& a, const ModInterval& b) { return a.start < b.start; });

    // merge cyclically adjacent runs so the description is minimal
    bool merged = true;
    while (merged && intervals.size() > 1) {
        merged = false;
        for (size_t i = 0; i < intervals.size(); ++i) {
            size_t j = (i + 1) % intervals.size();
            long long end_next = (intervals[i].start + intervals[i].length) % n;
            if (end_next == intervals[j].start) {
                long long total = intervals[i].length + intervals[j].length;
                if (total >= n) return false;  // whole cycle cannot be a covered set here
                intervals[i].length = total;
                intervals.erase(intervals.begin() + static_cast<long>(j));
                std::sort(intervals.begin(), intervals.end(),
                          [](const ModInterval& a, const ModInterval& b) { return a.start < b.start; });
                merged = true;
                break;
            }
        }
    }

    long long s = static_cast<long long>(intervals.size());
    const ModInterval& first = intervals.front();
    const ModInterval& last = intervals.back();

    if (first.start == 1) return false;
    if (last.start + last.length - 1 == n - 2) return false;

    for (size_t i = 0; i + 1 < intervals.size(); ++i)
        if (intervals[i + 1].start - (intervals[i].start + intervals[i].length) < 2) return false;
    if (first.start + n - (last.start + last.length) < 2) return false;

    long long total = 0;
    bool touches_border = false;
    for (const auto& iv : intervals) {
        total += iv.length;
        if (iv.contains(0) || iv.contains(n - 1)) touches_border = true;
    }
    long long want = touches_border ? c + 2 - s : c + 1 - s;
    return total == want;
}

LineSolution game_value_line(long long n, int k) {
    if (k < 2) throw InvalidInstanceError("closed-form line solver needs k >= 2");
    if (k > 60) throw InvalidInstanceError("query budget out of range");
    LineSolution sol;
    if (n <= (1LL << k)) {
        // every vertex can be pinned down: plain binary search, value 1
        sol.trivial = true;
        sol.value = Rational(1);
        std::vector<long long> bounds;
        for (long long i = 0; i <= n; ++i) bounds.push_back(i);
        auto tree = std::make_shared<SearchTree>(build_strategy_from_partition(bounds, k));
        sol.seeker.n = n;
        sol.seeker.k = k;
        sol.seeker.add(tree, Rational(1), 0);
        sol.seeker_starts = {0};
        sol.hider = HiderDistribution::uniform(static_cast<int>(n));
        return sol;
    }

    sol.bezout = compute_hw(n, k);
    sol.value = sol.bezout.value;
    sol.seeker_starts = seeker_starts(n, k);
    sol.seeker = greedy_seeker(n, k);
    if (sol.bezout.g > 1) {
        sol.hider = hider_noncoprime(n, k);
    } else {
        sol.hider = hider_coprime(n, k).first;
    }
    return sol;
}

}  // namespace bsg
