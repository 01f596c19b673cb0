#pragma once

#include <string>

#include "json.hpp"

#include "bsg/instance.hpp"

namespace bsg {

/// Instance schema:
///   {"n": int, "edges": [[u,v],...], "k": int,
///    "profit": [p1,...,pk],            // optional; omitted = unit profit
///    "hider": ["num/den" | "num",...]} // optional
TreeInstance tree_instance_from_json(const nlohmann::json& j);
TreeInstance load_tree_instance(const std::string& path);
nlohmann::json tree_instance_to_json(const TreeInstance& inst);

nlohmann::json rationals_to_json(const std::vector<Rational>& v);

}  // namespace bsg
