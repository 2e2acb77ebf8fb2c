#include "modtab/json_io.hpp"

namespace modtab {

using nlohmann::json;

json to_json(const DiagonalReport& report) {
    json witness = nullptr;
    if (report.witness) {
        witness = json::array({report.witness->first, report.witness->second});
    }
    return json{{"n", report.n},
                {"holds", report.holds},
                {"witness", witness},
                {"method", to_string(report.method)}};
}

json to_json(const CubeReport& report) {
    json witness = nullptr;
    if (report.witness) {
        witness = json::array(
            {(*report.witness)[0], (*report.witness)[1], (*report.witness)[2]});
    }
    return json{{"n", report.n}, {"holds", report.holds}, {"witness", witness}};
}

json to_json(const ProofVerdict& verdict) {
    json steps = json::array();
    for (const auto& step : verdict.steps) {
        steps.push_back(json{{"description", step.description},
                             {"checked", step.checked},
                             {"evidence", step.evidence}});
    }
    return json{{"proof", to_string(verdict.proof)},
                {"overall", verdict.overall == ProofOutcome::pass},
                {"inconclusive", verdict.overall == ProofOutcome::inconclusive},
                {"steps", steps}};
}

json to_json(const Factorization& f) {
    json factors = json::array();
    for (const auto& pp : f.factors) {
        factors.push_back(json::array({pp.p, pp.c}));
    }
    return json{{"n", f.n},
                {"factors", factors},
                {"two_adic", json::array({f.two_exponent, f.odd_part})}};
}

json to_json(const AbelianGroupStructure& s) {
    return json{{"cyclic_orders", s.cyclic_orders},
                {"order", s.order},
                {"exponent", s.exponent}};
}

}  // namespace modtab
