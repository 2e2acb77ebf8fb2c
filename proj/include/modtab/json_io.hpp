#pragma once

#include <json.hpp>

#include "modtab/proofs.hpp"
#include "modtab/tables.hpp"
#include "modtab/unit_group.hpp"

namespace modtab {

// {"n", "holds", "witness": [a, b] | null, "method"}
nlohmann::json to_json(const DiagonalReport& report);

// {"n", "holds", "witness": [i, j, k] | null}
nlohmann::json to_json(const CubeReport& report);

// {"proof", "overall", "inconclusive", "steps": [{"description", "checked",
//  "evidence"}]}
nlohmann::json to_json(const ProofVerdict& verdict);

nlohmann::json to_json(const Factorization& f);

nlohmann::json to_json(const AbelianGroupStructure& s);

}  // namespace modtab
