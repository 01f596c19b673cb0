#include "bsg/equilibrium.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace bsg {

std::pair<int, Rational> hider_best_response(const SeekerMixedStrategy& x,
                                             const TreeInstance& instance) {
    auto payoff = x.payoff_by_vertex(instance.profit);
    int best = 0;
    for (int v = 1; v < instance.n; ++v)
        if (payoff[static_cast<size_t>(v)] < payoff[static_cast<size_t>(best)]) best = v;
    return {best, payoff[static_cast<size_t>(best)]};
}

namespace {

std::vector<long long> payoff_profile(const SearchTree& t, const TreeInstance& inst) {
    auto h = discovery_times(t, inst.n, inst.k);
    std::vector<long long> profile(static_cast<size_t>(inst.n));
    for (int v = 0; v < inst.n; ++v)
        profile[static_cast<size_t>(v)] = inst.p(h[static_cast<size_t>(v)]);
    return profile;
}

}  // namespace

EquilibriumResult solve_equilibrium(const TreeInstance& instance, int max_iters) {
    if (instance.n < 2) throw InvalidInstanceError("equilibrium needs at least 2 vertices");
    if (instance.k > 14)
        throw GuardExceededError("per-iteration tables would not fit: k too large");

    struct Column {
        std::vector<long long> profile;
        std::shared_ptr<const SearchTree> tree;
    };
    std::vector<Column> columns;
    std::map<std::vector<long long>, int> seen_profiles;

    auto add_column = [&](const ValidLabeling& f) {
        auto tree = std::make_shared<SearchTree>(labeling_to_strategy(f, instance, instance.k));
        auto profile = payoff_profile(*tree, instance);
        auto [it, fresh] = seen_profiles.insert({profile, static_cast<int>(columns.size())});
        if (!fresh) throw VerificationError("column generation produced a repeated payoff profile");
        columns.push_back({std::move(profile), std::move(tree)});
        return it->second;
    };

    add_column(best_response_dp(instance, HiderDistribution::uniform(instance.n)).labeling);

    Rational master_value;
    std::vector<Rational> master_y;
    std::vector<Rational> master_x;
    Rational response_value;

    for (int iter = 1; iter <= max_iters; ++iter) {
        // restricted dual master: vars (t, y_0..y_{n-1}), minimize t
        //   per column j:  sum_v profile_j[v] y_v - t <= 0
        //   sum_v y_v = 1
        RationalLP lp(1 + instance.n);
        lp.c[0] = Rational(1);
        for (const auto& col : columns) {
            std::vector<Rational> row(static_cast<size_t>(1 + instance.n), Rational(0));
            row[0] = Rational(-1);
            for (int v = 0; v < instance.n; ++v)
                row[static_cast<size_t>(1 + v)] = Rational(col.profile[static_cast<size_t>(v)]);
            lp.add_row(std::move(row), RationalLP::Rel::LE, Rational(0));
        }
        {
            std::vector<Rational> row(static_cast<size_t>(1 + instance.n), Rational(0));
            for (int v = 0; v < instance.n; ++v) row[static_cast<size_t>(1 + v)] = Rational(1);
            lp.add_row(std::move(row), RationalLP::Rel::EQ, Rational(1));
        }
        LPSolution ms = simplex_solve(lp);
        if (ms.status != LPStatus::Optimal)
            throw VerificationError("restricted master failed to solve");

        master_value = ms.objective;
        master_y.assign(ms.x.begin() + 1, ms.x.end());
        master_x.clear();
        for (size_t j = 0; j < columns.size(); ++j) master_x.push_back(-ms.row_duals[j]);

        HiderDistribution y{master_y};
        BestResponse br = best_response_dp(instance, y);
        response_value = br.value;
        if (response_value < master_value)
            throw VerificationError("best response fell below the master value");

        if (response_value == master_value) {
            EquilibriumResult res;
            res.value = master_value;
            res.iterations = iter;
            res.hider = std::move(y);

            // any weight the duals left on the table goes to the first
            // column; this only happens in zero-value games
            Rational total(0);
            for (auto& w : master_x) {
                if (w.sign() < 0) throw VerificationError("negative seeker weight from duals");
                total += w;
            }
            if (total > Rational(1)) throw VerificationError("seeker weights exceed 1");
            if (total < Rational(1)) master_x[0] += Rational(1) - total;

            res.seeker.n = instance.n;
            res.seeker.k = instance.k;
            for (size_t j = 0; j < columns.size(); ++j)
                res.seeker.add(columns[j].tree, master_x[j]);

            res.seeker_payoff_by_vertex.assign(static_cast<size_t>(instance.n), Rational(0));
            for (size_t j = 0; j < columns.size(); ++j)
                for (int v = 0; v < instance.n; ++v)
                    res.seeker_payoff_by_vertex[static_cast<size_t>(v)] +=
                        master_x[j] * Rational(columns[j].profile[static_cast<size_t>(v)]);
            for (const auto& col : columns) {
                Rational hp(0);
                for (int v = 0; v < instance.n; ++v)
                    hp += res.hider.y[static_cast<size_t>(v)] *
                          Rational(col.profile[static_cast<size_t>(v)]);
                res.hider_payoff_by_column.push_back(std::move(hp));
            }

            Rational min_payoff = res.seeker_payoff_by_vertex[0];
            for (const auto& p : res.seeker_payoff_by_vertex) min_payoff = std::min(min_payoff, p);
            Rational max_column(0);
            for (const auto& p : res.hider_payoff_by_column) max_column = std::max(max_column, p);
            if (min_payoff != res.value || max_column != res.value)
                throw VerificationError("equilibrium certificates do not meet exactly");
            return res;
        }

        add_column(br.labeling);
    }

    std::ostringstream os;
    os << "column generation did not close after " << max_iters
       << " iterations; bracket [" << master_value.to_string() << ", "
       << response_value.to_string() << "]";
    throw GuardExceededError(os.str());
}

}  // namespace bsg
