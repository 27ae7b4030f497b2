#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cyclelift/crt.hpp"
#include "cyclelift/funcgraph.hpp"
#include "cyclelift/lifting.hpp"

namespace cyclelift {

using Json = nlohmann::ordered_json;

/// Coefficients as JSON integers; values outside int64 become decimal strings.
Json poly_to_json(const PolyFunc& f);

/// {"modulus", "poly", "succ", "cycles": [{"vertices", "size"}]}
Json graph_to_json(const FunctionalGraph& g, const PolyFunc& f);

/// One `u -> v;` line per vertex; cycle edges are drawn red when
/// `colour_cycles` is set.
std::string graph_to_dot(const FunctionalGraph& g, bool colour_cycles = true);

void multiplier_fields(Json& into, const MultiplierData& m);

/// {"case", "lambda_bar", "order", "r", "predicted"} plus "observed" and
/// "match" when the report carries a brute-force observation.
Json lift_to_json(const LiftPrediction& prediction);
Json lift_to_json(const LiftReport& report);

Json spectrum_to_json(const Spectrum& s);

Json tower_to_json(const TowerReport& report);

/// [{"k", "l", "lcm", "found"}]
Json lcm_rows_to_json(const std::vector<LcmRow>& rows);

Json tally_to_json(const CheckTally& t);

}  // namespace cyclelift
