#include <iostream>

#include "CLI11.hpp"
#include "json.hpp"

#include "bsg/equilibrium.hpp"
#include "bsg/json_io.hpp"
#include "bsg/line_solver.hpp"
#include "bsg/oracle.hpp"
#include "bsg/simulate.hpp"

using nlohmann::json;
using namespace bsg;

namespace {

json tree_to_json(const SearchTree& t, int node) {
    const auto& nd = t.node(node);
    if (nd.is_leaf()) {
        json leaf = json::array();
        for (long long v : nd.leaf.all_vertices()) leaf.push_back(v);
        return json{{"leaf", leaf}};
    }
    return json{{"query", {nd.query_u, nd.query_v}},
                {"left", tree_to_json(t, nd.left)},
                {"right", tree_to_json(t, nd.right)}};
}

json tree_to_json(const SearchTree& t) { return tree_to_json(t, t.root()); }

/// Assembled from the closed-form parts; avoids materializing the w
/// strategy trees that the full LineSolution carries.
json line_solve_json(long long n, int k) {
    json j;
    j["n"] = n;
    j["k"] = k;
    if (n <= (1LL << k)) {
        j["value"] = "1";
        j["trivial"] = true;
        j["seeker_starts"] = std::vector<long long>{0};
        j["hider"] = rationals_to_json(HiderDistribution::uniform(static_cast<int>(n)).y);
        return j;
    }
    auto bz = compute_hw(n, k);
    j["value"] = bz.value.to_string();
    j["trivial"] = false;
    j["h"] = bz.h;
    j["w"] = bz.w;
    j["gcd"] = bz.g;
    j["seeker_starts"] = seeker_starts(n, k);
    HiderDistribution y = bz.g > 1 ? hider_noncoprime(n, k) : hider_coprime(n, k).first;
    j["hider"] = rationals_to_json(y.y);
    return j;
}

int cmd_line_solve(long long n, int k, bool as_json) {
    json j;
    if (k >= 2) {
        j = line_solve_json(n, k);
    } else {
        // degenerate budgets go through the exhaustive oracle
        auto res = full_matrix_value_line(n, k);
        j["n"] = n;
        j["k"] = k;
        j["value"] = res.value.to_string();
        j["oracle_route"] = true;
        j["hider"] = rationals_to_json(res.hider.y);
    }
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "line n=" << n << " k=" << k << "\n";
        std::cout << "value: " << j["value"].get<std::string>() << "\n";
        if (j.contains("h"))
            std::cout << "h=" << j["h"] << " w=" << j["w"] << " gcd=" << j["gcd"] << "\n";
        if (j.contains("seeker_starts")) {
            std::cout << "seeker starts:";
            for (auto& s : j["seeker_starts"]) std::cout << " " << s;
            std::cout << "\n";
        }
        std::cout << "hider:";
        for (auto& s : j["hider"]) std::cout << " " << s.get<std::string>();
        std::cout << "\n";
    }
    return 0;
}

int cmd_line_sample(long long n, int k, uint64_t seed, bool as_json) {
    auto bz = compute_hw(n, k);
    SplitMix64 rng(seed);
    long long t = static_cast<long long>(rng.below(static_cast<uint64_t>(bz.w)));
    long long start = sample_seeker(n, k, t);
    auto tree = efficient_strategy(start, n, k);

    json j;
    j["n"] = n;
    j["k"] = k;
    j["seed"] = seed;
    j["index"] = t;
    j["w"] = bz.w;
    j["start"] = start;
    j["covered"] = covered_set(tree);
    j["transcript"] = tree_to_json(tree);
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "drew index " << t << " of " << bz.w << " -> start vertex " << start << "\n";
        std::cout << "covered:";
        for (auto& v : j["covered"]) std::cout << " " << v;
        std::cout << "\ntranscript: " << j["transcript"].dump() << "\n";
    }
    return 0;
}

int cmd_line_hider(long long n, int k, bool as_json) {
    auto bz = compute_hw(n, k);
    json j;
    j["n"] = n;
    j["k"] = k;
    j["h"] = bz.h;
    j["w"] = bz.w;
    j["gcd"] = bz.g;
    HiderDistribution y;
    if (bz.g > 1) {
        y = hider_noncoprime(n, k);
        j["construction"] = "residue";
    } else {
        auto [yy, layout] = hider_coprime(n, k);
        y = yy;
        j["construction"] = "segments";
        j["r"] = layout.r;
        j["t"] = layout.t;
        json segs = json::array();
        for (const auto& s : layout.segments)
            segs.push_back({{"start", s.start},
                            {"length", s.length},
                            {"mass_per_vertex", s.mass_per_vertex.to_string()}});
        j["segments"] = segs;
    }
    j["hider"] = rationals_to_json(y.y);
    auto rep = verify_hider(y, n, k);
    j["verified"] = rep.ok;
    j["failures"] = rep.failures;
    std::cout << (as_json ? j.dump(2) : j.dump()) << "\n";
    return rep.ok ? 0 : 4;
}

int cmd_tree_best_response(const std::string& path) {
    auto inst = load_tree_instance(path);
    HiderDistribution y = inst.hider ? *inst.hider : HiderDistribution::uniform(inst.n);
    auto br = best_response_dp(inst, y);
    auto tree = labeling_to_strategy(br.labeling, inst, inst.k);

    json labeling;
    for (int ei = 0; ei < inst.edge_count(); ++ei) {
        auto [u, v] = inst.edges[static_cast<size_t>(ei)];
        labeling[std::to_string(u) + "-" + std::to_string(v)] = br.labeling[static_cast<size_t>(ei)];
    }
    json j;
    j["value"] = br.value.to_string();
    j["labeling"] = labeling;
    j["strategy"] = tree_to_json(tree);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_tree_solve(const std::string& path, int max_iters) {
    auto inst = load_tree_instance(path);
    auto eq = solve_equilibrium(inst, max_iters);
    json j;
    j["value"] = eq.value.to_string();
    j["iterations"] = eq.iterations;
    j["hider"] = rationals_to_json(eq.hider.y);
    json seeker = json::array();
    for (size_t i = 0; i < eq.seeker.size(); ++i) {
        if (eq.seeker.weights[i].is_zero()) continue;
        seeker.push_back({{"weight", eq.seeker.weights[i].to_string()},
                          {"strategy", tree_to_json(*eq.seeker.support[i].tree)}});
    }
    j["seeker"] = seeker;
    j["seeker_payoff_by_vertex"] = rationals_to_json(eq.seeker_payoff_by_vertex);
    j["hider_payoff_by_column"] = rationals_to_json(eq.hider_payoff_by_column);
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const std::string& family, int k, long long n_max) {
    if (family != "line") throw InvalidInstanceError("unknown verification family: " + family);
    bool all_ok = true;
    for (long long n = (1LL << k) + 1; n <= n_max; ++n) {
        std::string status = "PASS";
        std::string detail;
        try {
            auto closed = compute_hw(n, k);
            auto oracle = full_matrix_value_line(n, k);
            auto sol = game_value_line(n, k);
            auto rep = verify_hider(sol.hider, n, k);
            bool ok = closed.value == oracle.value && rep.ok;
            detail = "closed=" + closed.value.to_string() + " oracle=" + oracle.value.to_string() +
                     " hider=" + (rep.ok ? "ok" : rep.failures.front());
            if (!ok) {
                status = "FAIL";
                all_ok = false;
            }
        } catch (const GuardExceededError& e) {
            status = "SKIP";
            detail = e.what();
        }
        std::cout << "n=" << n << " k=" << k << " " << detail << " " << status << "\n";
    }
    std::cout << (all_ok ? "sweep: PASS" : "sweep: FAIL") << "\n";
    return all_ok ? 0 : 4;
}

int cmd_simulate(long long n, int k, const std::string& instance_path, long long trials,
                 uint64_t seed, int max_iters, bool as_json) {
    SeekerMixedStrategy x;
    HiderDistribution y;
    std::vector<long long> profit;
    if (!instance_path.empty()) {
        auto inst = load_tree_instance(instance_path);
        auto eq = solve_equilibrium(inst, max_iters);
        x = eq.seeker;
        y = eq.hider;
        profit = inst.profit;
    } else {
        auto sol = game_value_line(n, k);
        x = sol.seeker;
        y = sol.hider;
        profit = TreeInstance::path(static_cast<int>(n), k).profit;
    }
    auto rep = simulate(x, y, profit, trials, seed);
    json j;
    j["trials"] = rep.trials;
    j["seed"] = rep.seed;
    j["empirical_value"] = rep.empirical_value;
    j["theoretical_value"] = rep.theoretical_value.to_string();
    j["standard_error"] = rep.standard_error;
    j["vertex_coverage"] = rep.vertex_coverage;
    if (as_json) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "trials=" << rep.trials << " seed=" << rep.seed << "\n"
                  << "empirical=" << rep.empirical_value
                  << " theoretical=" << rep.theoretical_value.to_string() << " (~"
                  << rep.theoretical_value.to_double() << ")"
                  << " se=" << rep.standard_error << "\n";
    }
    return 0;
}

int cmd_figure_data(int figure, const std::string& format) {
    long long n;
    int k;
    switch (figure) {
        case 2: n = 11; k = 3; break;
        case 3: n = 12; k = 3; break;
        case 4: n = 38; k = 4; break;
        default: throw InvalidInstanceError("unknown figure id (expected 2, 3 or 4)");
    }
    auto sol = game_value_line(n, k);
    if (format == "json") {
        json j;
        j["n"] = n;
        j["k"] = k;
        j["value"] = sol.value.to_string();
        json strategies = json::array();
        for (long long v : sol.seeker_starts) {
            auto iv = efficient_covered_interval(v, n, k);
            strategies.push_back(
                {{"start", v}, {"cover_start", iv.start}, {"cover_length", iv.length}});
        }
        j["strategies"] = strategies;
        j["hider"] = rationals_to_json(sol.hider.y);
        if (figure == 4) {
            auto [y, layout] = hider_coprime(n, k);
            (void)y;
            json segs = json::array();
            for (const auto& s : layout.segments)
                segs.push_back({{"start", s.start},
                                {"length", s.length},
                                {"mass_per_vertex", s.mass_per_vertex.to_string()}});
            j["segments"] = segs;
            j["r"] = layout.r;
            j["t"] = layout.t;
            j["w"] = layout.w;
        }
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "record,a,b,c\n";
        for (long long v : sol.seeker_starts) {
            auto iv = efficient_covered_interval(v, n, k);
            std::cout << "strategy," << v << "," << iv.start << "," << iv.length << "\n";
        }
        for (long long v = 0; v < n; ++v)
            std::cout << "hider," << v << "," << sol.hider.y[static_cast<size_t>(v)].to_string()
                      << ",\n";
        if (figure == 4) {
            auto [y, layout] = hider_coprime(n, k);
            (void)y;
            for (const auto& s : layout.segments)
                std::cout << "segment," << s.start << "," << s.length << ","
                          << s.mass_per_vertex.to_string() << "\n";
        }
    } else {
        throw InvalidInstanceError("unknown format: " + format);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for the budget-constrained search game"};
    app.require_subcommand(1);

    long long n = 0, trials = 100000, n_max = 20;
    int k = 0, figure = 0, max_iters = 500;
    uint64_t seed = 0;
    bool as_json = false;
    std::string instance_path, family = "line", format = "json";

    auto* solve = app.add_subcommand("line-solve", "exact value and equilibrium of a line instance");
    solve->add_option("--n", n, "vertex count")->required();
    solve->add_option("--k", k, "query budget")->required();
    solve->add_flag("--json", as_json, "machine-readable output");

    auto* sample = app.add_subcommand("line-sample", "draw one strategy from the optimal mix");
    sample->add_option("--n", n)->required();
    sample->add_option("--k", k)->required();
    sample->add_option("--seed", seed, "rng seed")->required();
    sample->add_flag("--json", as_json);

    auto* hider =
        app.add_subcommand("line-hider", "optimal hider distribution with its verifier report");
    hider->add_option("--n", n)->required();
    hider->add_option("--k", k)->required();
    hider->add_flag("--json", as_json);

    auto* br = app.add_subcommand("tree-best-response", "best seeker reply on a tree instance");
    br->add_option("--instance", instance_path, "instance json file")->required();

    auto* ts = app.add_subcommand("tree-solve", "exact equilibrium on a tree instance");
    ts->add_option("--instance", instance_path)->required();
    ts->add_option("--max-iters", max_iters, "column generation cap");

    auto* ver = app.add_subcommand("verify", "closed form vs exhaustive oracle sweep");
    ver->add_option("--family", family, "instance family (line)");
    ver->add_option("--k", k)->required();
    ver->add_option("--n-max", n_max, "largest n to check");

    auto* sim = app.add_subcommand("simulate", "monte carlo playout of an equilibrium pair");
    sim->add_option("--n", n);
    sim->add_option("--k", k);
    sim->add_option("--instance", instance_path);
    sim->add_option("--trials", trials);
    sim->add_option("--seed", seed);
    sim->add_option("--max-iters", max_iters);
    sim->add_flag("--json", as_json);

    auto* fig = app.add_subcommand("figure-data", "worked-example datasets");
    fig->add_option("--figure", figure, "2, 3 or 4")->required();
    fig->add_option("--format", format, "json or csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed()) return cmd_line_solve(n, k, as_json);
        if (sample->parsed()) return cmd_line_sample(n, k, seed, as_json);
        if (hider->parsed()) return cmd_line_hider(n, k, as_json);
        if (br->parsed()) return cmd_tree_best_response(instance_path);
        if (ts->parsed()) return cmd_tree_solve(instance_path, max_iters);
        if (ver->parsed()) return cmd_verify(family, k, n_max);
        if (sim->parsed()) return cmd_simulate(n, k, instance_path, trials, seed, max_iters, as_json);
        if (fig->parsed()) return cmd_figure_data(figure, format);
    } catch (const InvalidInstanceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceededError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const VerificationError& e) {
        std::cerr << "verification: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
