#include "bsg/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <unordered_set>

#include "bsg/line_solver.hpp"

namespace bsg {

namespace {

constexpr uint64_t kCanonicalTag = 1ULL << 62;

uint64_t mask_key(uint32_t mask, int budget) {
    return (static_cast<uint64_t>(mask) << 8) | static_cast<uint64_t>(budget);
}
uint64_t canon_key(long long len, int budget) {
    return kCanonicalTag | (static_cast<uint64_t>(len) << 8) | static_cast<uint64_t>(budget);
}

struct ByteVecHash {
    size_t operator()(const std::vector<uint8_t>& v) const {
        size_t h = 1469598103934665603ull;
        for (uint8_t b : v) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace

class CatalogBuilder {
  public:
    CatalogBuilder(StrategyCatalog& cat, StrategyCatalog::Limits limits)
        : cat_(cat), limits_(limits), inst_(cat.inst_) {}

    void run() {
        if (cat_.canonical_) {
            cat_.root_key_ = canon_key(inst_.n, inst_.k);
            enumerate_canon(inst_.n, inst_.k);
        } else {
            if (inst_.n > limits_.max_n || inst_.k > limits_.max_k)
                throw GuardExceededError("strategy enumeration guard: instance too large");
            uint32_t full = (inst_.n >= 32) ? 0 : ((1u << inst_.n) - 1u);
            cat_.root_key_ = mask_key(full, inst_.k);
            enumerate_mask(full, inst_.k);
        }
        collapse_profiles();
    }

  private:
    using Variant = StrategyCatalog::Variant;

    StrategyCatalog& cat_;
    StrategyCatalog::Limits limits_;
    const TreeInstance& inst_;
    size_t stored_ = 0;

    void bump(size_t extra) {
        stored_ += extra;
        if (stored_ > limits_.max_stored_profiles)
            throw GuardExceededError("strategy enumeration guard: profile budget exhausted");
    }

    const std::vector<Variant>& enumerate_canon(long long len, int budget) {
        uint64_t key = canon_key(len, budget);
        auto it = cat_.memo_.find(key);
        if (it != cat_.memo_.end()) return it->second;

        std::vector<Variant> out;
        std::unordered_set<std::vector<uint8_t>, ByteVecHash> seen;
        auto push = [&](Variant v) {
            if (seen.insert(v.h).second) {
                out.push_back(std::move(v));
                bump(1);
            }
        };

        if (len == 1) {
            push(Variant{{0}, -1, 0, 0, 0, 0});
        } else {
            push(Variant{std::vector<uint8_t>(static_cast<size_t>(len), 255), -1, 0, 0, 0, 0});
            if (budget >= 1) {
                for (long long cut = 0; cut + 1 < len; ++cut) {
                    const auto& ls = enumerate_canon(cut + 1, budget - 1);
                    const auto& rs = enumerate_canon(len - cut - 1, budget - 1);
                    for (int li = 0; li < static_cast<int>(ls.size()); ++li) {
                        for (int ri = 0; ri < static_cast<int>(rs.size()); ++ri) {
                            Variant v;
                            v.h.resize(static_cast<size_t>(len));
                            merge_depths(ls[static_cast<size_t>(li)].h, v.h, 0);
                            merge_depths(rs[static_cast<size_t>(ri)].h, v.h, cut + 1);
                            v.split = static_cast<int>(cut);
                            v.li = li;
                            v.ri = ri;
                            v.lkey = canon_key(cut + 1, budget - 1);
                            v.rkey = canon_key(len - cut - 1, budget - 1);
                            push(std::move(v));
                        }
                    }
                }
            }
        }
        return cat_.memo_.emplace(key, std::move(out)).first->second;
    }

    static void merge_depths(const std::vector<uint8_t>& child, std::vector<uint8_t>& parent,
                             long long offset) {
        for (size_t i = 0; i < child.size(); ++i) {
            uint8_t h = child[i];
            parent[static_cast<size_t>(offset) + i] = (h == 255) ? 255 : static_cast<uint8_t>(h + 1);
        }
    }

    std::vector<int> mask_vertices(uint32_t mask) const {
        std::vector<int> vs;
        for (int v = 0; v < inst_.n; ++v)
            if (mask & (1u << v)) vs.push_back(v);
        return vs;
    }

    uint32_t side_mask(uint32_t mask, int anchor, int banned_edge) const {
        uint32_t side = 1u << anchor;
        std::vector<int> stack = {anchor};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (auto [v, ei] : inst_.adj[static_cast<size_t>(u)]) {
                if (ei == banned_edge) continue;
                uint32_t bit = 1u << v;
                if (!(mask & bit) || (side & bit)) continue;
                side |= bit;
                stack.push_back(v);
            }
        }
        return side;
    }

    const std::vector<Variant>& enumerate_mask(uint32_t mask, int budget) {
        uint64_t key = mask_key(mask, budget);
        auto it = cat_.memo_.find(key);
        if (it != cat_.memo_.end()) return it->second;

        auto verts = mask_vertices(mask);
        std::vector<Variant> out;
        std::unordered_set<std::vector<uint8_t>, ByteVecHash> seen;
        auto push = [&](Variant v) {
            if (seen.insert(v.h).second) {
                out.push_back(std::move(v));
                bump(1);
            }
        };

        if (verts.size() == 1) {
            push(Variant{{0}, -1, 0, 0, 0, 0});
        } else {
            push(Variant{std::vector<uint8_t>(verts.size(), 255), -1, 0, 0, 0, 0});
            if (budget >= 1) {
                for (int ei = 0; ei < inst_.edge_count(); ++ei) {
                    auto [eu, ev] = inst_.edges[static_cast<size_t>(ei)];
                    if (!(mask & (1u << eu)) || !(mask & (1u << ev))) continue;
                    uint32_t left = side_mask(mask, eu, ei);
                    uint32_t right = mask & ~left;
                    const auto& ls = enumerate_mask(left, budget - 1);
                    const auto& rs = enumerate_mask(right, budget - 1);
                    // positions of each side's vertices inside this component
                    std::vector<size_t> lpos, rpos;
                    for (size_t i = 0; i < verts.size(); ++i) {
                        if (left & (1u << verts[i])) lpos.push_back(i);
                        else rpos.push_back(i);
                    }
                    for (int li = 0; li < static_cast<int>(ls.size()); ++li) {
                        for (int ri = 0; ri < static_cast<int>(rs.size()); ++ri) {
                            Variant v;
                            v.h.assign(verts.size(), 255);
                            const auto& lh = ls[static_cast<size_t>(li)].h;
                            const auto& rh = rs[static_cast<size_t>(ri)].h;
                            for (size_t i = 0; i < lpos.size(); ++i)
                                v.h[lpos[i]] = (lh[i] == 255) ? 255 : static_cast<uint8_t>(lh[i] + 1);
                            for (size_t i = 0; i < rpos.size(); ++i)
                                v.h[rpos[i]] = (rh[i] == 255) ? 255 : static_cast<uint8_t>(rh[i] + 1);
                            v.split = ei;
                            v.li = li;
                            v.ri = ri;
                            v.lkey = mask_key(left, budget - 1);
                            v.rkey = mask_key(right, budget - 1);
                            push(std::move(v));
                        }
                    }
                }
            }
        }
        return cat_.memo_.emplace(key, std::move(out)).first->second;
    }

    void collapse_profiles() {
        const auto& roots = cat_.memo_.at(cat_.root_key_);
        std::map<std::vector<long long>, int> dedup;
        for (int i = 0; i < static_cast<int>(roots.size()); ++i) {
            std::vector<long long> profile(static_cast<size_t>(inst_.n));
            for (int v = 0; v < inst_.n; ++v) {
                uint8_t h = roots[static_cast<size_t>(i)].h[static_cast<size_t>(v)];
                profile[static_cast<size_t>(v)] = (h == 255) ? 0 : inst_.p(h);
            }
            auto [it, fresh] = dedup.insert({profile, static_cast<int>(cat_.profiles_.size())});
            (void)it;
            if (fresh) {
                cat_.profiles_.push_back(std::move(profile));
                cat_.witnesses_.push_back({cat_.root_key_, i});
            }
        }
    }
};

StrategyCatalog StrategyCatalog::build(const TreeInstance& inst, Limits limits) {
    if (inst.n < 2) throw InvalidInstanceError("catalog needs at least 2 vertices");
    StrategyCatalog cat;
    cat.inst_ = inst;
    cat.canonical_ = inst.is_sorted_path();
    CatalogBuilder(cat, limits).run();
    return cat;
}

StrategyCatalog enumerate_strategies(const TreeInstance& inst, StrategyCatalog::Limits limits) {
    return StrategyCatalog::build(inst, limits);
}

size_t StrategyCatalog::distinct_h_profiles() const { return memo_.at(root_key_).size(); }

SearchTree StrategyCatalog::materialize(size_t i) const {
    SearchTree t;
    // rebuild the witness recursion; components are tracked as global
    // vertex lists (sorted)
    std::function<int(uint64_t, int, std::vector<int>)> rec =
        [&](uint64_t key, int vi, std::vector<int> comp) -> int {
        const Variant& v = memo_.at(key)[static_cast<size_t>(vi)];
        if (v.split < 0) {
            if (inst_.is_sorted_path())
                return t.add_leaf(LeafSet::from_intervals(
                    {ModInterval(comp.front(), static_cast<long long>(comp.size()), inst_.n)}));
            return t.add_leaf(LeafSet::from_vertices(comp));
        }
        int eu, ev;
        std::vector<int> lc, rc;
        if (key & kCanonicalTag) {
            long long base = comp.front();
            eu = static_cast<int>(base + v.split);
            ev = eu + 1;
            for (int u : comp) (u <= eu ? lc : rc).push_back(u);
        } else {
            eu = inst_.edges[static_cast<size_t>(v.split)].first;
            ev = inst_.edges[static_cast<size_t>(v.split)].second;
            // left side = component of eu with the split edge removed
            std::vector<char> inl(static_cast<size_t>(inst_.n), 0);
            std::vector<int> stack = {eu};
            inl[static_cast<size_t>(eu)] = 1;
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [w, ei] : inst_.adj[static_cast<size_t>(u)]) {
                    if (ei == v.split || inl[static_cast<size_t>(w)]) continue;
                    if (!std::binary_search(comp.begin(), comp.end(), w)) continue;
                    inl[static_cast<size_t>(w)] = 1;
                    stack.push_back(w);
                }
            }
            for (int u : comp) (inl[static_cast<size_t>(u)] ? lc : rc).push_back(u);
        }
        int left = rec(v.lkey, v.li, std::move(lc));
        int right = rec(v.rkey, v.ri, std::move(rc));
        return t.add_query(eu, ev, left, right);
    };

    auto [key, vi] = witnesses_[i];
    std::vector<int> all(static_cast<size_t>(inst_.n));
    for (int v = 0; v < inst_.n; ++v) all[static_cast<size_t>(v)] = v;
    t.set_root(rec(key, vi, std::move(all)));
    return t;
}

std::pair<Rational, SearchTree> brute_force_best_response(const HiderDistribution& y,
                                                          const StrategyCatalog& catalog) {
    const TreeInstance& inst = catalog.instance();
    if (y.n() != inst.n) throw InvalidInstanceError("distribution size mismatch");
    Rational best(0);
    size_t best_i = 0;
    bool first = true;
    for (size_t i = 0; i < catalog.size(); ++i) {
        const auto& profile = catalog.profile(i);
        Rational val(0);
        for (int v = 0; v < inst.n; ++v) {
            long long p = profile[static_cast<size_t>(v)];
            if (p != 0) val += y.y[static_cast<size_t>(v)] * Rational(p);
        }
        if (first || val > best) {
            best = std::move(val);
            best_i = i;
            first = false;
        }
    }
    return {best, catalog.materialize(best_i)};
}

LineCoverageEnumerator::LineCoverageEnumerator(int k, bool reduced) : k_(k), reduced_(reduced) {
    if (k < 0 || k > 6) throw GuardExceededError("line coverage enumeration guard: k out of range");
}

const std::vector<uint64_t>& LineCoverageEnumerator::sets(long long len, int budget) {
    if (len < 1 || len > 48) throw GuardExceededError("line coverage enumeration guard: length");
    uint64_t key = (static_cast<uint64_t>(len) << 8) | static_cast<uint64_t>(budget);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;

    std::vector<uint64_t> out;
    if (len == 1) {
        out = {1};
    } else if (budget == 0) {
        out = {0};
    } else {
        std::unordered_set<uint64_t> cand;
        cand.insert(0);
        for (long long cut = 0; cut + 1 < len; ++cut) {
            const auto& ls = sets(cut + 1, budget - 1);
            const auto& rs = sets(len - cut - 1, budget - 1);
            for (uint64_t a : ls)
                for (uint64_t b : rs) cand.insert(a | (b << (cut + 1)));
        }
        if (reduced_) {
            // drop a mask when a one-vertex extension is also achievable;
            // inclusion-maximal covered sets always survive this filter
            for (uint64_t s : cand) {
                bool dominated = false;
                for (long long v = 0; v < len && !dominated; ++v)
                    if (!(s & (1ULL << v)) && cand.count(s | (1ULL << v))) dominated = true;
                if (!dominated) out.push_back(s);
            }
        } else {
            out.assign(cand.begin(), cand.end());
        }
        std::sort(out.begin(), out.end());
    }
    return memo_.emplace(key, std::move(out)).first->second;
}

std::vector<uint64_t> maximal_masks(std::vector<uint64_t> masks) {
    std::sort(masks.begin(), masks.end(), [](uint64_t a, uint64_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    std::vector<uint64_t> kept;
    for (uint64_t m : masks) {
        bool dominated = false;
        for (uint64_t s : kept) {
            if ((m & ~s) == 0 && m != s) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(m);
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

namespace {

/// Shared row-generation loop for the exact value LP. `row_value` must be
/// exact; `row_approx` is only a pruning hint for the scan order.
struct RowOracleLP {
    int n;
    size_t rows;
    std::function<Rational(size_t, const std::vector<Rational>&)> row_value;
    std::function<double(size_t, const std::vector<double>&)> row_approx;

    struct Out {
        Rational value;
        std::vector<Rational> y;
        std::vector<Rational> x;  // over active rows
        std::vector<size_t> active;
        int iterations = 0;
    };

    Out solve(std::function<std::vector<Rational>(size_t)> row_coeffs) const {
        Out out;
        out.active = {0};
        for (int iter = 1;; ++iter) {
            // mixing master over the active strategies: maximize the
            // worst-vertex payoff; the vertex duals carry the hider
            size_t m = out.active.size();
            RationalLP lp(static_cast<int>(1 + m));
            lp.maximize = true;
            lp.c[0] = Rational(1);
            std::vector<std::vector<Rational>> cols;
            cols.reserve(m);
            for (size_t idx : out.active) cols.push_back(row_coeffs(idx));
            for (int v = 0; v < n; ++v) {
                // z - sum x_j p_j(v) <= 0, slack-basic as written
                std::vector<Rational> row(1 + m, Rational(0));
                row[0] = Rational(1);
                for (size_t j = 0; j < m; ++j) row[1 + j] = -cols[j][static_cast<size_t>(v)];
                lp.add_row(std::move(row), RationalLP::Rel::LE, Rational(0));
            }
            {
                std::vector<Rational> row(1 + m, Rational(0));
                for (size_t j = 0; j < m; ++j) row[1 + j] = Rational(1);
                lp.add_row(std::move(row), RationalLP::Rel::EQ, Rational(1));
            }
            LPSolution ms = simplex_solve(lp);
            if (ms.status != LPStatus::Optimal)
                throw VerificationError("value LP master failed to solve");
            Rational t = ms.objective;

            // vertex duals are nonnegative and sum to at least 1; after
            // normalization they form a hider distribution that keeps
            // every active strategy at or below t
            std::vector<Rational> y;
            Rational ysum(0);
            for (int v = 0; v < n; ++v) {
                Rational yv = ms.row_duals[static_cast<size_t>(v)];
                if (yv.sign() < 0) throw VerificationError("vertex dual with the wrong sign");
                ysum += yv;
                y.push_back(std::move(yv));
            }
            if (ysum < Rational(1)) throw VerificationError("vertex duals sum below 1");
            for (auto& yv : y) yv /= ysum;

            // cheap scan first, exact confirmation after; adding a small
            // batch of violated rows per round keeps the master count low
            std::vector<double> yd;
            yd.reserve(y.size());
            for (const auto& q : y) yd.push_back(q.to_double());
            double td = t.to_double();
            constexpr size_t kBatch = 8;
            std::vector<std::pair<double, size_t>> top;
            for (size_t rix = 0; rix < rows; ++rix) {
                double gap = row_approx(rix, yd) - td;
                if (gap <= 1e-12) continue;
                top.push_back({gap, rix});
                std::push_heap(top.begin(), top.end(), std::greater<>{});
                if (top.size() > kBatch) {
                    std::pop_heap(top.begin(), top.end(), std::greater<>{});
                    top.pop_back();
                }
            }
            bool added = false;
            for (auto [gap, rix] : top) {
                (void)gap;
                if (row_value(rix, y) > t &&
                    std::find(out.active.begin(), out.active.end(), rix) == out.active.end()) {
                    out.active.push_back(rix);
                    added = true;
                }
            }
            if (!added) {
                // exhaustive exact pass decides termination
                size_t violated = rows;
                for (size_t rix = 0; rix < rows; ++rix) {
                    if (row_value(rix, y) > t) {
                        violated = rix;
                        break;
                    }
                }
                if (violated == rows) {
                    out.value = std::move(t);
                    out.y = std::move(y);
                    out.x.assign(ms.x.begin() + 1, ms.x.end());
                    out.iterations = iter;
                    return out;
                }
                if (std::find(out.active.begin(), out.active.end(), violated) != out.active.end())
                    throw VerificationError("active row reported as violated");
                out.active.push_back(violated);
            }
        }
    }
};

void finish_seeker_weights(std::vector<Rational>& x) {
    Rational total(0);
    for (auto& w : x) {
        if (w.sign() < 0) throw VerificationError("negative seeker weight from duals");
        total += w;
    }
    if (total > Rational(1)) throw VerificationError("seeker weights exceed 1");
    if (total < Rational(1) && !x.empty()) x[0] += Rational(1) - total;
}

}  // namespace

FullMatrixResult full_matrix_value(const TreeInstance& inst, StrategyCatalog::Limits limits) {
    StrategyCatalog catalog = StrategyCatalog::build(inst, limits);

    RowOracleLP lp;
    lp.n = inst.n;
    lp.rows = catalog.size();
    lp.row_value = [&](size_t i, const std::vector<Rational>& y) {
        const auto& profile = catalog.profile(i);
        Rational val(0);
        for (int v = 0; v < inst.n; ++v)
            if (profile[static_cast<size_t>(v)] != 0)
                val += y[static_cast<size_t>(v)] * Rational(profile[static_cast<size_t>(v)]);
        return val;
    };
    lp.row_approx = [&](size_t i, const std::vector<double>& y) {
        const auto& profile = catalog.profile(i);
        double val = 0;
        for (int v = 0; v < inst.n; ++v)
            val += y[static_cast<size_t>(v)] * static_cast<double>(profile[static_cast<size_t>(v)]);
        return val;
    };
    auto out = lp.solve([&](size_t i) {
        std::vector<Rational> coeffs;
        coeffs.reserve(static_cast<size_t>(inst.n));
        for (long long p : catalog.profile(i)) coeffs.push_back(Rational(p));
        return coeffs;
    });

    FullMatrixResult res;
    res.value = out.value;
    res.hider = HiderDistribution{out.y};
    res.rows = catalog.size();
    res.iterations = out.iterations;
    finish_seeker_weights(out.x);
    res.seeker.n = inst.n;
    res.seeker.k = inst.k;
    for (size_t j = 0; j < out.active.size(); ++j)
        res.seeker.add(std::make_shared<SearchTree>(catalog.materialize(out.active[j])), out.x[j]);
    return res;
}

FullMatrixResult full_matrix_value_line(long long n, int k) {
    if (n < 2 || n > 48) throw GuardExceededError("line value oracle guard: n out of range");
    LineCoverageEnumerator en(k, /*reduced=*/true);
    const auto& masks = en.sets(n);

    RowOracleLP lp;
    lp.n = static_cast<int>(n);
    lp.rows = masks.size();
    lp.row_value = [&](size_t i, const std::vector<Rational>& y) {
        Rational val(0);
        uint64_t m = masks[i];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            val += y[static_cast<size_t>(v)];
        }
        return val;
    };
    lp.row_approx = [&](size_t i, const std::vector<double>& y) {
        double val = 0;
        uint64_t m = masks[i];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            val += y[static_cast<size_t>(v)];
        }
        return val;
    };
    auto out = lp.solve([&](size_t i) {
        std::vector<Rational> coeffs(static_cast<size_t>(n), Rational(0));
        uint64_t m = masks[i];
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            coeffs[static_cast<size_t>(v)] = Rational(1);
        }
        return coeffs;
    });

    FullMatrixResult res;
    res.value = out.value;
    res.hider = HiderDistribution{out.y};
    res.rows = masks.size();
    res.iterations = out.iterations;
    finish_seeker_weights(out.x);
    res.seeker.n = n;
    res.seeker.k = k;
    for (size_t j = 0; j < out.active.size(); ++j) {
        // rebuild a witness tree from the covered mask: singletons for the
        // covered vertices, one leaf per uncovered run
        uint64_t m = masks[out.active[j]];
        std::vector<long long> bounds = {0};
        for (long long v = 1; v < n; ++v)
            if ((m >> v & 1) || (m >> (v - 1) & 1)) bounds.push_back(v);
        bounds.push_back(n);
        res.seeker.add(std::make_shared<SearchTree>(build_strategy_from_partition(bounds, k)),
                       out.x[j]);
    }
    return res;
}

}  // namespace bsg
