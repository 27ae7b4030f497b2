#include "cyclelift/export.hpp"

#include <limits>
#include <sstream>

namespace cyclelift {

Json poly_to_json(const PolyFunc& f) {
  Json out = Json::array();
  const PolyFunc::Coefficient lo = std::numeric_limits<std::int64_t>::min();
  const PolyFunc::Coefficient hi = std::numeric_limits<std::int64_t>::max();
  for (const auto& c : f.coeffs()) {
    if (c >= lo && c <= hi)
      out.push_back(c.convert_to<std::int64_t>());
    else
      out.push_back(c.str());
  }
  return out;
}

Json graph_to_json(const FunctionalGraph& g, const PolyFunc& f) {
  Json out;
  out["modulus"] = g.modulus().value();
  out["poly"] = poly_to_json(f);
  out["succ"] = Json(std::vector<std::uint64_t>(g.succ().begin(), g.succ().end()));
  Json cs = Json::array();
  for (const Cycle& c : g.decomposition().cycles) {
    Json entry;
    entry["vertices"] = c.vertices;
    entry["size"] = c.size();
    cs.push_back(std::move(entry));
  }
  out["cycles"] = std::move(cs);
  return out;
}

std::string graph_to_dot(const FunctionalGraph& g, bool colour_cycles) {
  std::ostringstream os;
  os << "digraph \"" << g.label() << "\" {\n";
  const CycleDecomposition* d = colour_cycles ? &g.decomposition() : nullptr;
  for (std::uint64_t v = 0; v < g.size(); ++v) {
    os << "  " << v << " -> " << g.successor(v);
    if (d != nullptr && d->on_cycle(v)) os << " [color=red]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

void multiplier_fields(Json& into, const MultiplierData& m) {
  into["lambda_bar"] = m.lambda_bar.value;
  into["order"] = m.order ? Json(*m.order) : Json(nullptr);
}

Json spectrum_to_json(const Spectrum& s) {
  Json out = Json::array();
  for (const SpectrumEntry& e : s) out.push_back(Json::array({e.size, e.count}));
  return out;
}

Json lift_to_json(const LiftPrediction& prediction) {
  Json out;
  out["case"] = std::string(to_string(prediction.case_tag));
  multiplier_fields(out, prediction.multiplier);
  out["r"] = prediction.r_used;
  out["predicted"] = spectrum_to_json(prediction.spectrum);
  return out;
}

Json lift_to_json(const LiftReport& report) {
  Json out = lift_to_json(report.prediction);
  out["observed"] = spectrum_to_json(report.observed);
  out["match"] = report.match;
  return out;
}

Json tally_to_json(const CheckTally& t) {
  Json out;
  out["checked"] = t.checked;
  out["violated"] = t.violated;
  return out;
}

Json tower_to_json(const TowerReport& report) {
  Json out;
  out["poly"] = poly_to_json(report.poly);
  out["prime"] = report.prime;
  out["levels"] = report.levels.size();
  out["edge_regime"] = report.edge_regime;
  Json levels = Json::array();
  for (const TowerLevel& level : report.levels) {
    Json lj;
    lj["level"] = level.level;
    lj["modulus"] = level.modulus;
    Json cs = Json::array();
    for (const TowerCycle& c : level.cycles) {
      Json cj;
      cj["id"] = c.id;
      cj["v0"] = c.v0;
      cj["size"] = c.size;
      cj["case"] = std::string(to_string(c.lift_case));
      multiplier_fields(cj, c.multiplier);
      cj["r"] = c.r;
      cj["parent"] = c.parent ? Json(*c.parent) : Json(nullptr);
      cj["root"] = c.root;
      cs.push_back(std::move(cj));
    }
    lj["cycles"] = std::move(cs);
    levels.push_back(std::move(lj));
  }
  out["tower"] = std::move(levels);

  const TowerTallies& t = report.tallies;
  Json checks;
  checks["theorem"] = tally_to_json(t.theorem);
  checks["size_multiple"] = tally_to_json(t.size_multiple);
  checks["multiplier_transfer"] = tally_to_json(t.multiplier_transfer);
  checks["r_persistence"] = tally_to_json(t.r_persistence);
  checks["projection"] = tally_to_json(t.projection);
  checks["unique_chain"] = tally_to_json(t.unique_chain);
  checks["all_periodic"] = tally_to_json(t.all_periodic);
  checks["geometric_growth"] = tally_to_json(t.geometric_growth);
  checks["generic_shape"] = tally_to_json(t.generic_shape);
  checks["generic_growth"] = tally_to_json(t.generic_growth);
  out["checks"] = std::move(checks);
  out["violations"] = report.violations;
  out["observations"] = report.observations;
  return out;
}

Json lcm_rows_to_json(const std::vector<LcmRow>& rows) {
  Json out = Json::array();
  for (const LcmRow& r : rows) {
    Json row;
    row["k"] = r.k;
    row["l"] = r.l;
    row["lcm"] = r.lcm;
    row["found"] = r.found;
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace cyclelift
