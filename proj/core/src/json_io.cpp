#include "bsg/json_io.hpp"

#include <fstream>

namespace bsg {

using nlohmann::json;

TreeInstance tree_instance_from_json(const json& j) {
    try {
        int n = j.at("n").get<int>();
        int k = j.at("k").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw InvalidInstanceError("each edge must be a pair [u, v]");
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        }
        std::vector<long long> profit;
        if (j.contains("profit"))
            for (const auto& p : j.at("profit")) profit.push_back(p.get<long long>());
        std::optional<HiderDistribution> hider;
        if (j.contains("hider")) {
            std::vector<Rational> y;
            for (const auto& s : j.at("hider")) y.push_back(Rational::from_string(s.get<std::string>()));
            hider = HiderDistribution(std::move(y));
        }
        return TreeInstance(n, k, std::move(edges), std::move(profit), std::move(hider));
    } catch (const json::exception& e) {
        throw InvalidInstanceError(std::string("malformed instance json: ") + e.what());
    }
}

TreeInstance load_tree_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidInstanceError("cannot open instance file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw InvalidInstanceError(std::string("cannot parse instance file: ") + e.what());
    }
    return tree_instance_from_json(j);
}

json tree_instance_to_json(const TreeInstance& inst) {
    json j;
    j["n"] = inst.n;
    j["k"] = inst.k;
    j["edges"] = json::array();
    for (auto [u, v] : inst.edges) j["edges"].push_back({u, v});
    json profit = json::array();
    for (int t = 1; t <= inst.k; ++t) profit.push_back(inst.p(t));
    j["profit"] = profit;
    if (inst.hider) j["hider"] = rationals_to_json(inst.hider->y);
    return j;
}

json rationals_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const auto& q : v) arr.push_back(q.to_string());
    return arr;
}

}  // namespace bsg
