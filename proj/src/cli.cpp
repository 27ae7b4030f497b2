#include "cyclelift/cli.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "cyclelift/export.hpp"
#include "cyclelift/trials.hpp"

namespace cyclelift::cli {

namespace {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void require(bool condition, const char* message) {
  if (!condition) throw UsageError(message);
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string spectrum_text(const Spectrum& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? ", " : "") << '(' << s[i].size << ',' << s[i].count << ')';
  os << '}';
  return os.str();
}

std::string vertices_text(const std::vector<std::uint64_t>& vs, std::size_t limit = 12) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size() && i < limit; ++i) os << (i ? ", " : "") << vs[i];
  if (vs.size() > limit) os << ", ...";
  os << '}';
  return os.str();
}

std::string order_text(const MultiplierData& m) { return m.order ? std::to_string(*m.order) : "-"; }

/// Modulus for graph/cycles: either --m or --prime with --power.
struct GraphModulus {
  Modulus modulus;
  std::optional<PrimePowerModulus> prime_power;
};

GraphModulus graph_modulus(const RunConfig& c) {
  const bool by_m = c.m.has_value();
  const bool by_pp = c.prime.has_value() || c.power.has_value();
  require(by_m != by_pp, "give either --m or --prime with --power");
  require(!c.n.has_value() && !c.levels.has_value(), "--n and --levels do not apply to this command");
  if (by_m) {
    const Modulus m = make_modulus(*c.m);
    std::optional<PrimePowerModulus> pp;
    if (m.is_prime_power()) pp.emplace(m.factorization()[0].prime, m.factorization()[0].exponent);
    return {m, pp};
  }
  require(c.prime && c.power, "--prime and --power go together");
  PrimePowerModulus pp(*c.prime, *c.power);
  return {pp.modulus(), pp};
}

int run_graph(const RunConfig& c, const PolyFunc& f, std::ostream& out) {
  const GraphModulus gm = graph_modulus(c);
  const FunctionalGraph g = build_graph(f, gm.modulus, c.limits);
  switch (c.format) {
    case Format::Dot: out << graph_to_dot(g); break;
    case Format::Json: emit(out, graph_to_json(g, f)); break;
    case Format::Text:
      out << g.label() << '\n';
      for (std::uint64_t v = 0; v < g.size(); ++v) out << v << " -> " << g.successor(v) << '\n';
      break;
  }
  return kExitOk;
}

int run_cycles(const RunConfig& c, const PolyFunc& f, std::ostream& out) {
  require(c.format != Format::Dot, "DOT output is only available for `graph`");
  const GraphModulus gm = graph_modulus(c);
  const FunctionalGraph g = build_graph(f, gm.modulus, c.limits);
  const auto& cs = g.decomposition().cycles;

  Json j;
  j["modulus"] = gm.modulus.value();
  j["poly"] = poly_to_json(f);
  Json list = Json::array();
  if (c.format == Format::Text) {
    out << g.label() << ": " << cs.size() << " cycles, " << g.decomposition().periodic_count()
        << " periodic vertices\n";
    out << std::setw(8) << "size" << std::setw(10) << "v0";
    if (gm.prime_power) out << std::setw(12) << "lambda_bar" << std::setw(8) << "order" << std::setw(6) << "r";
    out << "  vertices\n";
  }
  for (const Cycle& cycle : cs) {
    Json cj;
    cj["vertices"] = cycle.vertices;
    cj["size"] = cycle.size();
    std::optional<MultiplierData> mult;
    std::uint64_t r = 0;
    if (gm.prime_power) {
      mult = multiplier(f, cycle, *gm.prime_power);
      r = r_value(f, cycle, cycle.v0(), *gm.prime_power);
      multiplier_fields(cj, *mult);
      cj["r"] = r;
    }
    if (c.format == Format::Text) {
      out << std::setw(8) << cycle.size() << std::setw(10) << cycle.v0();
      if (mult) out << std::setw(12) << mult->lambda_bar.value << std::setw(8) << order_text(*mult) << std::setw(6) << r;
      out << "  " << vertices_text(cycle.vertices) << '\n';
    }
    list.push_back(std::move(cj));
  }
  j["cycles"] = std::move(list);
  if (c.format == Format::Json) emit(out, j);
  return kExitOk;
}

int run_lift_trials(const RunConfig& c, std::ostream& out) {
  LiftTrialConfig tc;
  tc.trials = *c.random_trials;
  tc.seed = c.seed;
  tc.limits = c.limits;
  const LiftTrialSummary s = run_lift_trials(tc);
  const LemmaTallies& t = s.tallies;
  const bool ok = s.all_match() && t.violations() == 0;
  if (c.format == Format::Text) {
    out << "trials: " << s.trials << ", matching: " << s.matching_trials << ", cycles audited: " << s.cycles_checked
        << ", lemma violations: " << t.violations() << '\n';
    for (const std::string& v : s.violations) out << "  " << v << '\n';
    out << (ok ? "PASS" : "FAIL") << '\n';
  } else {
    Json j;
    j["mode"] = "random-trials";
    j["trials"] = s.trials;
    j["seed"] = c.seed;
    j["matching_trials"] = s.matching_trials;
    j["cycles_checked"] = s.cycles_checked;
    Json checks;
    checks["theorem"] = tally_to_json(t.theorem);
    checks["size_multiple"] = tally_to_json(t.size_multiple);
    checks["multiplier_transfer"] = tally_to_json(t.multiplier_transfer);
    checks["representative_independence"] = tally_to_json(t.representative_independence);
    checks["all_or_nothing"] = tally_to_json(t.all_or_nothing);
    checks["r_persistence"] = tally_to_json(t.r_persistence);
    checks["vertex_accounting"] = tally_to_json(t.vertex_accounting);
    checks["r_cross_check"] = tally_to_json(t.r_cross_check);
    j["checks"] = std::move(checks);
    j["edge_regime_drops"] = s.edge_regime_drops;
    j["violations"] = s.violations;
    j["pass"] = ok;
    emit(out, j);
  }
  return ok ? kExitOk : kExitMismatch;
}

int run_lift(const RunConfig& c, const PolyFunc& f, std::ostream& out) {
  require(c.format != Format::Dot, "DOT output is only available for `graph`");
  if (c.random_trials) return run_lift_trials(c, out);
  require(c.prime && c.power, "lift needs --prime and --power");
  require(!c.m && !c.n && !c.levels, "--m, --n and --levels do not apply to lift");
  const PrimePowerModulus pp(*c.prime, *c.power);
  if (c.verify) c.limits.require_vertices(pp.value() * pp.prime(), "lift verification");
  const FunctionalGraph g = build_graph(f, pp.modulus(), c.limits);
  const CycleDecomposition& d = g.decomposition();

  std::vector<const Cycle*> selected;
  if (c.cycle_containing) {
    require(*c.cycle_containing < g.size(), "--cycle-containing must be a vertex in [0, p^n)");
    selected.push_back(&d.cycles[d.reaches[*c.cycle_containing]]);
  } else {
    for (const Cycle& cycle : d.cycles) selected.push_back(&cycle);
  }

  bool all_match = true;
  Json lifts = Json::array();
  for (const Cycle* cycle : selected) {
    Json j;
    j["prime"] = pp.prime();
    j["power"] = pp.exponent();
    j["poly"] = poly_to_json(f);
    Json cj;
    cj["vertices"] = cycle->vertices;
    cj["size"] = cycle->size();
    j["cycle"] = std::move(cj);
    if (c.verify) {
      const LiftReport report = verify_lift(f, *cycle, pp, c.limits);
      all_match = all_match && report.match;
      j.update(lift_to_json(report));
      if (c.format == Format::Text)
        out << "cycle " << vertices_text(cycle->vertices) << " k=" << cycle->size() << " case="
            << to_string(report.prediction.case_tag) << " lambda_bar=" << report.prediction.multiplier.lambda_bar.value
            << " order=" << order_text(report.prediction.multiplier) << " r=" << report.prediction.r_used
            << " predicted=" << spectrum_text(report.prediction.spectrum)
            << " observed=" << spectrum_text(report.observed) << (report.match ? " match" : " MISMATCH") << '\n';
    } else {
      const LiftPrediction pred = predict_lift(f, *cycle, pp);
      j.update(lift_to_json(pred));
      if (c.format == Format::Text)
        out << "cycle " << vertices_text(cycle->vertices) << " k=" << cycle->size() << " case="
            << to_string(pred.case_tag) << " lambda_bar=" << pred.multiplier.lambda_bar.value
            << " order=" << order_text(pred.multiplier) << " r=" << pred.r_used
            << " predicted=" << spectrum_text(pred.spectrum) << '\n';
    }
    lifts.push_back(std::move(j));
  }
  if (c.format == Format::Json) {
    if (c.cycle_containing) {
      emit(out, lifts.front());
    } else {
      Json j;
      j["prime"] = pp.prime();
      j["power"] = pp.exponent();
      j["poly"] = poly_to_json(f);
      j["lifts"] = std::move(lifts);
      emit(out, j);
    }
  }
  return all_match ? kExitOk : kExitMismatch;
}

int run_tower(const RunConfig& c, const PolyFunc& f, std::ostream& out) {
  require(c.format != Format::Dot, "DOT output is only available for `graph`");
  require(c.prime && c.levels, "tower needs --prime and --levels");
  require(!c.m && !c.n && !c.power, "--m, --n and --power do not apply to tower");
  const TowerReport report = tower(f, *c.prime, *c.levels, c.limits);
  if (c.format == Format::Json) {
    emit(out, tower_to_json(report));
  } else {
    out << "tower of " << f.to_string() << " over p = " << report.prime << (report.edge_regime ? " (edge regime)" : "")
        << '\n';
    for (const TowerLevel& level : report.levels) {
      out << "level " << level.level << " (Z_" << level.modulus << "): " << level.cycles.size() << " cycles\n";
      for (const TowerCycle& tc : level.cycles)
        out << "  #" << tc.id << " v0=" << tc.v0 << " size=" << tc.size
            << " lambda_bar=" << tc.multiplier.lambda_bar.value << " r=" << tc.r << " case=" << to_string(tc.lift_case)
            << " parent=" << (tc.parent ? std::to_string(*tc.parent) : "-") << '\n';
    }
    for (const std::string& o : report.observations) out << "note: " << o << '\n';
    for (const std::string& v : report.violations) out << "VIOLATION: " << v << '\n';
  }
  return report.ok() ? kExitOk : kExitMismatch;
}

int run_crt(const RunConfig& c, const PolyFunc& f, std::ostream& out) {
  require(c.format != Format::Dot, "DOT output is only available for `graph`");
  if (c.random_trials) {
    const CrtTrialSummary s = run_crt_trials(*c.random_trials, c.seed, 200, c.limits);
    const bool ok = s.isomorphic == s.trials && s.lcm_found == s.lcm_rows;
    if (c.format == Format::Json) {
      Json j;
      j["mode"] = "random-trials";
      j["trials"] = s.trials;
      j["seed"] = c.seed;
      j["isomorphic"] = s.isomorphic;
      j["lcm_rows"] = s.lcm_rows;
      j["lcm_found"] = s.lcm_found;
      j["failures"] = s.failures;
      j["pass"] = ok;
      emit(out, j);
    } else {
      out << "trials: " << s.trials << ", isomorphic: " << s.isomorphic << ", lcm rows found: " << s.lcm_found << '/'
          << s.lcm_rows << '\n'
          << (ok ? "PASS" : "FAIL") << '\n';
    }
    return ok ? kExitOk : kExitMismatch;
  }
  require(c.m && c.n, "crt-check needs --m and --n");
  require(!c.prime && !c.power && !c.levels, "--prime, --power and --levels do not apply to crt-check");
  const bool iso = theorem31_check(f, *c.m, *c.n, c.limits);
  const std::vector<LcmRow> rows = lcm_cycle_check(f, *c.m, *c.n, c.limits);
  bool all_found = true;
  for (const LcmRow& r : rows) all_found = all_found && r.found;
  if (c.format == Format::Json) {
    Json j;
    j["m"] = *c.m;
    j["n"] = *c.n;
    j["poly"] = poly_to_json(f);
    const CrtMap phi = crt_map(*c.m, *c.n);
    j["bezout"] = Json::array({phi.a, phi.b});
    j["isomorphic"] = iso;
    j["lcm"] = lcm_rows_to_json(rows);
    emit(out, j);
  } else {
    out << "G(" << f.to_string() << ", Z_" << *c.m << ") x G(" << f.to_string() << ", Z_" << *c.n
        << ") isomorphic to G(" << f.to_string() << ", Z_" << *c.m * *c.n << "): " << (iso ? "yes" : "NO") << '\n';
    out << std::setw(8) << "k" << std::setw(8) << "l" << std::setw(8) << "lcm" << "  found\n";
    for (const LcmRow& r : rows)
      out << std::setw(8) << r.k << std::setw(8) << r.l << std::setw(8) << r.lcm << "  " << (r.found ? "yes" : "NO")
          << '\n';
  }
  return iso && all_found ? kExitOk : kExitMismatch;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    require(config.format != Format::Dot || config.command == Command::Graph,
            "DOT output is only available for `graph`");
    const bool needs_poly = !(config.random_trials &&
                              (config.command == Command::Lift || config.command == Command::CrtCheck));
    const PolyFunc f = needs_poly ? parse_poly(config.poly) : PolyFunc{};
    switch (config.command) {
      case Command::Graph: return run_graph(config, f, out);
      case Command::Cycles: return run_cycles(config, f, out);
      case Command::Lift: return run_lift(config, f, out);
      case Command::Tower: return run_tower(config, f, out);
      case Command::CrtCheck: return run_crt(config, f, out);
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const OverflowError& e) {
    err << "bound exceeded: " << e.what() << '\n';
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace cyclelift::cli
