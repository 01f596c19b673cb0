#include "bsg/tree_dp.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace bsg {

namespace {

/// Profit value with an absorbing "impossible" state.
struct DpVal {
    bool finite = false;
    Rational v;

    static DpVal none() { return {}; }
    static DpVal of(Rational r) { return {true, std::move(r)}; }
};

bool improves(const DpVal& cand, const DpVal& best) {
    return cand.finite && (!best.finite || cand.v > best.v);
}

DpVal plus(const DpVal& a, const DpVal& b) {
    if (!a.finite || !b.finite) return DpVal::none();
    return DpVal::of(a.v + b.v);
}

struct DpContext {
    const TreeInstance& inst;
    const HiderDistribution& y;
    Orientation o;
    uint32_t full;                      // all masks range over [0, full]
    std::vector<std::vector<DpVal>> B;  // per vertex, for its parent edge
    size_t peak_entries = 0;
    size_t b_entries = 0;

    DpContext(const TreeInstance& inst_, const HiderDistribution& y_)
        : inst(inst_), y(y_), o(orient(inst_, 0)) {
        full = (inst.k >= 31) ? 0 : ((1u << (inst.k + 1)) - 1u);
        B.assign(static_cast<size_t>(inst.n), {});
    }

    Rational profit_at(int v, uint32_t min_mask_with_l1) const {
        int t = inst.k + 1 - std::countr_zero(min_mask_with_l1);
        long long p = inst.p(t);
        if (p == 0) return Rational(0);
        return y.y[static_cast<size_t>(v)] * Rational(p);
    }

    /// Layers 0..d of the per-vertex table: layer i is the best profit of
    /// labeling the first i child edges and their subtrees so that exactly
    /// the labels in the mask are visible at v.
    std::vector<std::vector<DpVal>> stack_for(int v) const {
        const auto& ch = o.children[static_cast<size_t>(v)];
        size_t d = ch.size();
        std::vector<std::vector<DpVal>> stack(d + 1, std::vector<DpVal>(full + 1));
        stack[0][0] = DpVal::of(Rational(0));
        for (size_t i = 1; i <= d; ++i) {
            const auto& bw = B[static_cast<size_t>(ch[i - 1].first)];
            for (uint32_t s = 0; s <= full; ++s) {
                DpVal best;
                // submasks in descending order; the first maximum wins
                uint32_t sub = s;
                while (true) {
                    if (bw[sub].finite) {
                        // the remaining edges may keep label 0 visible or not
                        uint32_t rest_keep0 = s & ~(sub & ~1u);
                        DpVal cand = plus(bw[sub], stack[i - 1][rest_keep0]);
                        if (improves(cand, best)) best = cand;
                        uint32_t rest = s & ~sub;
                        if (rest != rest_keep0) {
                            cand = plus(bw[sub], stack[i - 1][rest]);
                            if (improves(cand, best)) best = cand;
                        }
                    }
                    if (sub == 0) break;
                    sub = (sub - 1) & s;
                }
                stack[i][s] = best;
            }
        }
        return stack;
    }

    /// Table for the edge entering v, from the final layer of v's stack.
    std::vector<DpVal> edge_table(int v, const std::vector<DpVal>& final_layer) const {
        std::vector<DpVal> tbl(full + 1);  // tbl[0] stays impossible: edges are always labeled
        for (uint32_t L = 1; L <= full; ++L) {
            int l1 = std::countr_zero(L);
            DpVal best;
            if (l1 == 0) {
                // unqueried edge: v is not pinned down, no profit here
                best = final_layer[L];
                if (improves(final_layer[L & ~1u], best)) best = final_layer[L & ~1u];
            } else {
                uint32_t below = (1u << l1) - 1u;  // labels screened by l1
                uint32_t sub = below;
                while (true) {
                    uint32_t child_mask = (sub | L) & ~(1u << l1);
                    if (final_layer[child_mask].finite) {
                        DpVal cand = DpVal::of(final_layer[child_mask].v +
                                               profit_at(v, sub | (1u << l1)));
                        if (improves(cand, best)) best = cand;
                    }
                    if (sub == 0) break;
                    sub = (sub - 1) & below;
                }
            }
            tbl[L] = best;
        }
        return tbl;
    }
};

}  // namespace

BestResponse best_response_dp(const TreeInstance& instance, const HiderDistribution& y) {
    if (instance.n < 2) throw InvalidInstanceError("best response needs at least 2 vertices");
    if (instance.k > 16) throw GuardExceededError("visibility tables would not fit: k too large");
    if (static_cast<long long>(y.y.size()) != instance.n)
        throw InvalidInstanceError("hider distribution size mismatch");
    for (int t = 1; t <= instance.k; ++t)
        if (instance.p(t) < instance.p(t + 1))
            throw InvalidInstanceError("profit table must be non-increasing");
    if (instance.p(instance.k + 1) != 0)
        throw InvalidInstanceError("profit beyond the budget must be zero");

    DpContext ctx(instance, y);
    size_t masks = static_cast<size_t>(ctx.full) + 1;

    // bottom-up: per-vertex stacks are transient, edge tables persist
    for (int v : ctx.o.postorder) {
        auto stack = ctx.stack_for(v);
        size_t stack_entries = stack.size() * masks;
        ctx.peak_entries = std::max(ctx.peak_entries, ctx.b_entries + stack_entries);
        if (v != ctx.o.root) {
            ctx.B[static_cast<size_t>(v)] = ctx.edge_table(v, stack.back());
            ctx.b_entries += masks;
            ctx.peak_entries = std::max(ctx.peak_entries, ctx.b_entries + stack_entries);
        }
    }

    // aggregate at the root and pick the winning visibility mask
    auto root_stack = ctx.stack_for(ctx.o.root);
    const auto& final_layer = root_stack.back();
    DpVal best;
    uint32_t best_mask = 0;
    for (uint32_t s = ctx.full; s >= 1; --s) {
        if (!final_layer[s].finite) continue;
        DpVal cand = DpVal::of(final_layer[s].v + ctx.profit_at(ctx.o.root, s));
        if (improves(cand, best)) {
            best = cand;
            best_mask = s;
        }
    }
    if (!best.finite) throw VerificationError("no feasible labeling found");

    BestResponse out;
    out.value = best.v;
    out.peak_table_entries = ctx.peak_entries;
    out.table_entry_bound = 2 * static_cast<size_t>(instance.n) * masks;

    // reconstruction: replay the arg-max choices, recomputing stacks
    out.labeling.assign(static_cast<size_t>(instance.edge_count()), 0);

    std::function<void(int, uint32_t, const std::vector<std::vector<DpVal>>&)> assign_vertex =
        [&](int v, uint32_t s, const std::vector<std::vector<DpVal>>& stack) {
            const auto& ch = ctx.o.children[static_cast<size_t>(v)];
            for (size_t i = ch.size(); i >= 1; --i) {
                const DpVal& target = stack[i][s];
                if (!target.finite) throw VerificationError("reconstruction hit an impossible state");
                int w = ch[i - 1].first;
                int ei = ch[i - 1].second;
                const auto& bw = ctx.B[static_cast<size_t>(w)];
                bool found = false;
                uint32_t sub = s;
                while (!found) {
                    if (bw[sub].finite) {
                        for (uint32_t rest : {s & ~(sub & ~1u), s & ~sub}) {
                            DpVal cand = plus(bw[sub], stack[i - 1][rest]);
                            if (cand.finite && cand.v == target.v) {
                                out.labeling[static_cast<size_t>(ei)] = std::countr_zero(sub);
                                // descend into the child edge with mask sub
                                uint32_t L = sub;
                                int l1 = std::countr_zero(L);
                                auto child_stack = ctx.stack_for(w);
                                const auto& fl = child_stack.back();
                                uint32_t sw = 0;
                                bool ok = false;
                                if (l1 == 0) {
                                    for (uint32_t candidate : {L, L & ~1u}) {
                                        if (fl[candidate].finite && fl[candidate].v == bw[L].v) {
                                            sw = candidate;
                                            ok = true;
                                            break;
                                        }
                                    }
                                } else {
                                    uint32_t below = (1u << l1) - 1u;
                                    uint32_t s2 = below;
                                    while (true) {
                                        uint32_t child_mask = (s2 | L) & ~(1u << l1);
                                        if (fl[child_mask].finite &&
                                            fl[child_mask].v + ctx.profit_at(w, s2 | (1u << l1)) == bw[L].v) {
                                            sw = child_mask;
                                            ok = true;
                                            break;
                                        }
                                        if (s2 == 0) break;
                                        s2 = (s2 - 1) & below;
                                    }
                                }
                                if (!ok) throw VerificationError("edge-table reconstruction failed");
                                assign_vertex(w, sw, child_stack);
                                s = rest;
                                found = true;
                                break;
                            }
                        }
                    }
                    if (found) break;
                    if (sub == 0) throw VerificationError("vertex-table reconstruction failed");
                    sub = (sub - 1) & s;
                }
            }
            if (s != 0) throw VerificationError("leftover visibility labels after reconstruction");
        };

    assign_vertex(ctx.o.root, best_mask, root_stack);

    if (labeling_profit(out.labeling, instance, y) != out.value)
        throw VerificationError("reconstructed labeling does not achieve the table value");
    if (!labeling_is_valid(out.labeling, instance))
        throw VerificationError("reconstructed labeling is not valid");
    return out;
}

SearchTree labeling_to_strategy(const ValidLabeling& f, const TreeInstance& instance, int k) {
    if (static_cast<int>(f.size()) != instance.edge_count())
        throw InvalidInstanceError("labeling size does not match the edge count");
    SearchTree t;

    // recursive split at the unique maximum-label edge of the component
    std::function<int(const std::vector<int>&)> rec = [&](const std::vector<int>& comp) -> int {
        int best_edge = -1, best_label = 0;
        for (size_t i = 0; i < comp.size(); ++i) {
            int u = comp[i];
            for (auto [v, ei] : instance.adj[static_cast<size_t>(u)]) {
                if (u > v) continue;
                if (!std::binary_search(comp.begin(), comp.end(), v) ||
                    !std::binary_search(comp.begin(), comp.end(), u))
                    continue;
                if (f[static_cast<size_t>(ei)] > best_label) {
                    best_label = f[static_cast<size_t>(ei)];
                    best_edge = ei;
                }
            }
        }
        if (best_edge < 0) return t.add_leaf(LeafSet::from_vertices(comp));

        auto [eu, ev] = instance.edges[static_cast<size_t>(best_edge)];
        auto side = [&](int anchor) {
            std::vector<int> out = {anchor};
            std::vector<int> stack = {anchor};
            while (!stack.empty()) {
                int u = stack.back();
                stack.pop_back();
                for (auto [v, ei] : instance.adj[static_cast<size_t>(u)]) {
                    if (ei == best_edge) continue;
                    if (!std::binary_search(comp.begin(), comp.end(), v)) continue;
                    if (std::find(out.begin(), out.end(), v) != out.end()) continue;
                    out.push_back(v);
                    stack.push_back(v);
                }
            }
            std::sort(out.begin(), out.end());
            return out;
        };
        int left = rec(side(eu));
        int right = rec(side(ev));
        return t.add_query(eu, ev, left, right);
    };

    std::vector<int> all(static_cast<size_t>(instance.n));
    for (int v = 0; v < instance.n; ++v) all[static_cast<size_t>(v)] = v;
    t.set_root(rec(all));
    if (t.height() > k) throw VerificationError("reconstructed strategy exceeds the budget");
    return t;
}

ValidLabeling strategy_to_labeling(const SearchTree& t, const TreeInstance& instance, int k) {
    ValidLabeling f(static_cast<size_t>(instance.edge_count()), 0);
    if (t.root() < 0) return f;
    std::function<void(int, int)> rec = [&](int i, int depth) {
        const auto& nd = t.node(i);
        if (nd.is_leaf()) return;
        int ei = instance.edge_index(nd.query_u, nd.query_v);
        if (ei < 0) throw InvalidInstanceError("strategy queries an edge outside the graph");
        f[static_cast<size_t>(ei)] = k - depth;
        rec(nd.left, depth + 1);
        rec(nd.right, depth + 1);
    };
    rec(t.root(), 0);
    return f;
}

}  // namespace bsg
