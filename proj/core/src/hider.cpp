#include <numeric>
#include <sstream>

#include "bsg/line_solver.hpp"

namespace bsg {

namespace {

long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

std::string witness(const char* check, long long a, long long b = -1) {
    std::ostringstream os;
    os << check << " at " << a;
    if (b >= 0) os << "," << b;
    return os.str();
}

}  // namespace

HiderDistribution hider_noncoprime(long long n, int k) {
    BezoutResult bz = compute_hw(n, k);
    if (bz.g <= 1) throw InvalidInstanceError("capacity and n-1 are coprime; use the segment construction");
    long long d = bz.g;
    long long w = (n - 1) / d;
    std::vector<Rational> y(static_cast<size_t>(n), Rational(0));
    for (long long v = 0; v < n; ++v)
        if (v % d != 0) y[static_cast<size_t>(v)] = Rational(1, w * (d - 1));
    return HiderDistribution(std::move(y));
}

std::pair<HiderDistribution, SegmentLayout> hider_coprime(long long n, int k) {
    BezoutResult bz = compute_hw(n, k);
    if (bz.g != 1) throw InvalidInstanceError("capacity and n-1 share a factor; use the residue construction");
    long long c = (1LL << k) - 2;
    long long h = bz.h, w = bz.w;

    SegmentLayout layout;
    layout.r = c / h;
    layout.t = (n - 1) % c;
    layout.w = w;

    // ideal cumulative mass: ideal(v) = v*h/(w*c)
    auto ideal = [&](long long v) { return Rational(v, 1) * Rational(h, w * c); };
    Rational budget_step(1, w);

    std::vector<Rational> y(static_cast<size_t>(n), Rational(0));
    Rational cum(0);
    long long v = 1;
    while (v <= n - 2) {
        long long len = layout.r;
        if (ideal(v + layout.r) <= cum + budget_step) len = layout.r + 1;
        if (!(ideal(v + len - 1) <= cum + budget_step))
            throw VerificationError("segment rule admits no feasible length");
        if (v + len - 1 > n - 2) throw VerificationError("segment overruns the last interior vertex");
        Rational mass(1, len * w);
        for (long long i = v; i < v + len; ++i) y[static_cast<size_t>(i)] = mass;
        layout.segments.push_back({v, len, mass});
        cum += budget_step;
        v += len;
    }
    if (static_cast<long long>(layout.segments.size()) != w)
        throw VerificationError("segment construction produced the wrong number of segments");
    if (v != n - 1) throw VerificationError("segments do not end at the last interior vertex");
    return {HiderDistribution(std::move(y)), layout};
}

namespace {

/// Integer-scaled view of a candidate hider vector: y_v * scale must be an
/// integer for every vertex, otherwise the mass grid is already wrong.
struct ScaledHider {
    bool ok = true;
    long long bad_vertex = -1;
    std::vector<long long> s;       // y_v * scale
    std::vector<long long> prefix;  // prefix[i] = sum of s[0..i-1]

    ScaledHider(const HiderDistribution& y, long long scale) {
        s.reserve(y.y.size());
        for (size_t v = 0; v < y.y.size(); ++v) {
            Rational scaled = y.y[v] * Rational(scale);
            if (scaled.den() != 1) {
                ok = false;
                bad_vertex = static_cast<long long>(v);
                return;
            }
            mpz_class num = scaled.num();
            if (!num.fits_slong_p()) {
                ok = false;
                bad_vertex = static_cast<long long>(v);
                return;
            }
            s.push_back(num.get_si());
        }
        prefix.assign(s.size() + 1, 0);
        for (size_t i = 0; i < s.size(); ++i) prefix[i + 1] = prefix[i] + s[i];
    }

    // sum over the plain range [a, a+len-1]
    long long range(long long a, long long len) const {
        return prefix[static_cast<size_t>(a + len)] - prefix[static_cast<size_t>(a)];
    }

    // sum over [a, a+len-1] with indices taken modulo m (m = n-1 drops the
    // final zero-mass vertex and wraps back to vertex 0)
    long long mod_range(long long a, long long len, long long m) const {
        if (a + len <= m) return prefix[static_cast<size_t>(a + len)] - prefix[static_cast<size_t>(a)];
        long long head = prefix[static_cast<size_t>(m)] - prefix[static_cast<size_t>(a)];
        return head + prefix[static_cast<size_t>(a + len - m)];
    }
};

void check_merge_monotone(HiderReport& rep, const ScaledHider& sc, long long m, long long max_pair) {
    // gluing two disjoint runs into one run of combined length + 1 never
    // loses mass
    for (long long l1 = 1; l1 + 1 <= max_pair; ++l1) {
        for (long long l2 = 1; l1 + l2 <= max_pair && l1 + l2 + 1 <= m; ++l2) {
            for (long long u = 0; u < m; ++u) {
                ModInterval a(u, l1, m);
                long long glued = sc.mod_range(u, l1 + l2 + 1, m);
                long long left = sc.mod_range(u, l1, m);
                for (long long v = 0; v < m; ++v) {
                    ModInterval b(v, l2, m);
                    if (!a.disjoint_from(b)) continue;
                    if (left + sc.mod_range(v, l2, m) > glued) {
                        rep.fail(witness("merge monotonicity", u, v));
                        return;
                    }
                }
            }
        }
    }
}

void verify_common(HiderReport& rep, const HiderDistribution& y, long long n) {
    if (static_cast<long long>(y.y.size()) != n) {
        rep.fail("distribution size mismatch");
        return;
    }
    if (!y.is_distribution()) rep.fail("not a probability distribution");
    if (!y.y.front().is_zero()) rep.fail("vertex 0 must carry zero mass");
    if (!y.y.back().is_zero()) rep.fail("last vertex must carry zero mass");
}

void verify_noncoprime(HiderReport& rep, const HiderDistribution& y, long long n, long long d) {
    long long m = n - 1;
    long long w = m / d;
    ScaledHider sc(y, w * (d - 1));
    if (!sc.ok) {
        rep.fail(witness("mass not on the 1/(w(d-1)) grid", sc.bad_vertex));
        return;
    }
    for (long long v = 0; v < n; ++v) {
        long long want = (v % d == 0) ? 0 : 1;
        if (sc.s[static_cast<size_t>(v)] != want) {
            rep.fail(witness("residue pattern", v));
            return;
        }
    }
    // any run of length len captures len minus (number of multiples of d) units
    for (long long v = 0; v < m; ++v) {
        for (long long len = 1; len <= m; ++len) {
            long long got = sc.mod_range(v, len, m);
            long long lo = len - (len + d - 1) / d;
            long long hi = len - len / d;
            if (got != lo && got != hi) {
                rep.fail(witness("shift bound", v, len));
                return;
            }
        }
    }
    check_merge_monotone(rep, sc, m, m - 1);
}

void verify_coprime(HiderReport& rep, const HiderDistribution& y, long long n, int k,
                    const BezoutResult& bz) {
    long long c = (1LL << k) - 2;
    long long h = bz.h, w = bz.w;
    long long r = c / h;
    long long t = (n - 1) % c;
    long long scale = w * c * r * (r + 1);
    if (scale <= 0 || scale > (1LL << 40) || n * scale > (1LL << 62))
        throw GuardExceededError("hider verifier scale exceeds the integer budget");

    ScaledHider sc(y, scale);
    if (!sc.ok) {
        rep.fail(witness("mass not on the segment grid", sc.bad_vertex));
        return;
    }
    long long mass_short = c * (r + 1);  // (1/(r w)) * scale
    long long mass_long = c * r;         // (1/((r+1) w)) * scale

    // parse the segment structure directly from the masses
    std::vector<long long> seg_of(static_cast<size_t>(n), 0);
    std::vector<long long> seg_len, seg_start;
    {
        long long v = 1;
        while (v <= n - 2) {
            long long mv = sc.s[static_cast<size_t>(v)];
            long long len = 0;
            if (mv == mass_short) len = r;
            else if (mv == mass_long) len = r + 1;
            else {
                rep.fail(witness("segment mass", v));
                return;
            }
            if (v + len - 1 > n - 2) {
                rep.fail(witness("segment overruns interior", v));
                return;
            }
            for (long long i = v; i < v + len; ++i) {
                if (sc.s[static_cast<size_t>(i)] != mv) {
                    rep.fail(witness("segment uniformity", i));
                    return;
                }
                seg_of[static_cast<size_t>(i)] = static_cast<long long>(seg_len.size()) + 1;
            }
            seg_start.push_back(v);
            seg_len.push_back(len);
            v += len;
        }
    }

    auto ideal = [&](long long v) { return v * h * r * (r + 1); };  // ideal(v) * scale
    auto cum = [&](long long v) { return sc.range(1, v); };         // mass of [1, v]

    // cumulative mass brackets the ideal line
    for (long long v = 1; v <= n - 2; ++v) {
        if (!(ideal(v) <= cum(v))) { rep.fail(witness("cumulative lower bracket", v)); break; }
        if (!(cum(v) < ideal(v + 1))) { rep.fail(witness("cumulative upper bracket", v)); break; }
    }

    // closed-form segment index
    for (long long v = 1; v <= n - 2; ++v) {
        long long want = (v * h + c - 1) / c;
        if (seg_of[static_cast<size_t>(v)] != want) { rep.fail(witness("segment index formula", v)); break; }
    }

    // the ideal line is met exactly at multiples of the capacity; when h == 1
    // the cumulative mass rides the ideal line everywhere, so only the
    // "multiples hit it" direction remains meaningful
    for (long long v = 1; v <= n - 2; ++v) {
        bool eq = cum(v) == ideal(v);
        bool mult = (v % c == 0);
        if (mult && !eq) { rep.fail(witness("ideal line missed at capacity multiple", v)); break; }
        if (h > 1 && eq && !mult) { rep.fail(witness("ideal line met off a capacity multiple", v)); break; }
    }

    // periodicity with period c
    for (long long v = 1; v <= n - 2 - c; ++v) {
        if (sc.s[static_cast<size_t>(v)] != sc.s[static_cast<size_t>(v + c)]) {
            rep.fail(witness("periodicity", v));
            break;
        }
    }

    // segment count and placement
    if (static_cast<long long>(seg_len.size()) != w) rep.fail("segment count");
    if (!seg_start.empty() && seg_start.front() != 1) rep.fail("first segment start");
    if (!seg_start.empty() && seg_start.back() + seg_len.back() - 1 != n - 2) rep.fail("last segment end");

    // placement of short and long segments around 1, t-1, t and c
    if (!seg_len.empty() && seg_len.front() != r) rep.fail("segment at vertex 1 should be short");
    if (h > 1) {
        for (size_t i = 0; i < seg_start.size(); ++i) {
            long long endv = seg_start[i] + seg_len[i] - 1;
            if (endv == t - 1 && seg_len[i] != r) rep.fail("segment ending before t should be short");
            if (seg_start[i] == t && seg_len[i] != r + 1) rep.fail("segment starting at t should be long");
            if (endv == c && seg_len[i] != r + 1) rep.fail("segment ending at c should be long");
        }
    }

    // runs anchored at 1 carry the most mass, runs anchored at t the least
    for (long long len = 1; len <= c; ++len) {
        long long top = sc.range(1, len);
        bool have_bottom = t + len - 1 <= n - 2;
        long long bottom = have_bottom ? sc.range(t, len) : 0;
        for (long long v = 1; v + len - 1 <= n - 2; ++v) {
            long long cur = sc.range(v, len);
            if (cur > top) { rep.fail(witness("extremal upper", v, len)); return; }
            if (have_bottom && cur < bottom) { rep.fail(witness("extremal lower", v, len)); return; }
        }
    }

    // one extra vertex at t compensates the deficit
    for (long long len = 1; len <= c && t + len <= n - 2; ++len) {
        if (sc.range(1, len) > sc.range(t, len + 1)) {
            rep.fail(witness("spread", len));
            break;
        }
    }

    check_merge_monotone(rep, sc, n - 1, c);
}

}  // namespace

HiderReport verify_hider(const HiderDistribution& y, long long n, int k) {
    if (k < 2 || k > 60 || n <= (1LL << k))
        throw InvalidInstanceError("hider verifier needs k >= 2 and n > 2^k");
    HiderReport rep;
    verify_common(rep, y, n);
    if (!rep.ok) return rep;

    long long c = (1LL << k) - 2;
    long long d = gcd_ll(c, n - 1);
    if (d > 1) {
        verify_noncoprime(rep, y, n, d);
    } else {
        verify_coprime(rep, y, n, k, compute_hw(n, k));
    }
    return rep;
}

}  // namespace bsg
