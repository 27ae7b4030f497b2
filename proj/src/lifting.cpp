#include "cyclelift/lifting.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace cyclelift {

namespace {

/// f and f' reduced modulo p^n, p^{n+1} and p^{n+2}.
struct LiftContext {
  PrimePowerModulus base;
  PolyFunc df;
  ModularPoly f_base;
  ModularPoly df_base;
  ModularPoly f_up;
  ModularPoly df_up;

  LiftContext(const PolyFunc& f, const PrimePowerModulus& pn)
      : base(pn),
        df(derivative(f)),
        f_base(f.modulo(pn.value())),
        df_base(df.modulo(pn.value())),
        f_up(f.modulo(pn.next().value())),
        df_up(df.modulo(pn.next().value())) {}
};

MultiplierData multiplier_with(const ModularPoly& df, std::span<const std::uint64_t> vertices,
                               std::uint64_t modulus, std::uint64_t p) {
  std::uint64_t lambda = 1 % modulus;
  for (std::uint64_t v : vertices) lambda = mul_mod(lambda, df(v % modulus), modulus);
  MultiplierData out{{lambda, modulus}, {lambda % p, p}, std::nullopt};
  if (out.lambda_bar.value != 0) out.order = mult_order(out.lambda_bar.value, p);
  return out;
}

/// r for representative a of a size-k cycle vertex, with f pre-reduced mod p^{n+1}.
std::uint64_t r_with(const ModularPoly& f_up, std::uint64_t k, std::uint64_t a, std::uint64_t pn) {
  const std::uint64_t up = f_up.modulus();
  a %= up;
  const std::uint64_t diff = sub_mod(f_up.iterate(a, k), a, up);
  if (diff % pn != 0) throw DomainError("f^k(a) != a mod p^n: a does not represent a vertex of a size-k cycle");
  return diff / pn;
}

bool persistence_hypothesis(std::uint64_t p, unsigned n) { return p > 3 || (p == 3 && n > 1); }

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t v = 1;
  while (e-- > 0) v *= b;
  return v;
}

bool is_power_of(std::uint64_t x, std::uint64_t p, unsigned& exponent) {
  exponent = 0;
  while (x % p == 0) {
    x /= p;
    ++exponent;
  }
  return x == 1;
}

std::string describe(unsigned level, std::uint64_t v0) {
  return "level " + std::to_string(level) + ", cycle at " + std::to_string(v0) + ": ";
}

struct LiftedObservation {
  LiftedGraph graph;
  CycleDecomposition local;
  LiftReport report;
};

LiftedObservation observe(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn, const LiftPrediction& pred,
                          const Limits& limits) {
  LiftedGraph graph = lifted_subgraph(f, c, pn, limits);
  CycleDecomposition local = graph.local_decomposition();
  LiftReport report;
  report.prediction = pred;
  report.observed = spectrum_of(local.cycles);
  report.tail_vertices = graph.vertices.size() - local.periodic_count();
  report.match = report.observed == pred.spectrum;
  return {std::move(graph), std::move(local), std::move(report)};
}

}  // namespace

std::string_view to_string(LiftCase c) {
  switch (c) {
    case LiftCase::LambdaZero: return "LambdaZero";
    case LiftCase::LambdaOneRZero: return "LambdaOne_rZero";
    case LiftCase::LambdaOneRNonzero: return "LambdaOne_rNonzero";
    case LiftCase::Generic: return "Generic";
  }
  return "?";
}

Spectrum spectrum_of(const std::vector<Cycle>& cs) {
  std::map<std::uint64_t, std::uint64_t> counts;
  for (const Cycle& c : cs) ++counts[c.size()];
  Spectrum out;
  for (auto [size, count] : counts) out.push_back({size, count});
  return out;
}

MultiplierData multiplier(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn) {
  if (c.modulus != pn.value()) throw DomainError("cycle does not live in Z_" + std::to_string(pn.value()));
  return multiplier_with(derivative(f).modulo(pn.value()), c.vertices, pn.value(), pn.prime());
}

std::uint64_t r_value_at(const PolyFunc& f, std::uint64_t k, std::uint64_t a, const PrimePowerModulus& pn) {
  return r_with(f.modulo(pn.next().value()), k, a, pn.value());
}

std::uint64_t r_value(const PolyFunc& f, const Cycle& c, std::uint64_t v, const PrimePowerModulus& pn) {
  if (c.modulus != pn.value()) throw DomainError("cycle does not live in Z_" + std::to_string(pn.value()));
  if (!c.contains(v)) throw DomainError(std::to_string(v) + " is not a vertex of the cycle");
  return r_value_at(f, c.size(), v, pn);
}

LiftPrediction predict_from(const MultiplierData& mult, std::uint64_t r, std::uint64_t k, std::uint64_t p) {
  LiftPrediction out{LiftCase::Generic, {}, mult, r, k};
  const std::uint64_t lb = mult.lambda_bar.value;
  if (lb == 0) {
    out.case_tag = LiftCase::LambdaZero;
    out.spectrum = {{k, 1}};
  } else if (lb == 1) {
    if (r == 0) {
      out.case_tag = LiftCase::LambdaOneRZero;
      out.spectrum = {{k, p}};
    } else {
      out.case_tag = LiftCase::LambdaOneRNonzero;
      out.spectrum = {{k * p, 1}};
    }
  } else {
    const std::uint64_t m = *mult.order;
    out.spectrum = {{k, 1}, {m * k, (p - 1) / m}};
  }
  return out;
}

LiftPrediction predict_lift(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn) {
  const MultiplierData mult = multiplier(f, c, pn);
  return predict_from(mult, r_value(f, c, c.v0(), pn), c.size(), pn.prime());
}

LiftReport verify_lift(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn, const Limits& limits) {
  return observe(f, c, pn, predict_lift(f, c, pn), limits).report;
}

LemmaTallies& LemmaTallies::operator+=(const LemmaTallies& o) {
  theorem += o.theorem;
  size_multiple += o.size_multiple;
  multiplier_transfer += o.multiplier_transfer;
  representative_independence += o.representative_independence;
  all_or_nothing += o.all_or_nothing;
  r_persistence += o.r_persistence;
  vertex_accounting += o.vertex_accounting;
  r_cross_check += o.r_cross_check;
  return *this;
}

std::uint64_t LemmaTallies::violations() const {
  return theorem.violated + size_multiple.violated + multiplier_transfer.violated +
         representative_independence.violated + all_or_nothing.violated + r_persistence.violated +
         vertex_accounting.violated + r_cross_check.violated;
}

LiftAudit audit_lift(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn, const Limits& limits) {
  if (c.modulus != pn.value()) throw DomainError("cycle does not live in Z_" + std::to_string(pn.value()));
  const LiftContext ctx(f, pn);
  const std::uint64_t p = pn.prime();
  const std::uint64_t pn_value = pn.value();
  const std::uint64_t up = pn.next().value();
  const std::uint64_t k = c.size();

  const MultiplierData mult = multiplier_with(ctx.df_base, c.vertices, pn_value, p);
  const std::uint64_t r0 = r_with(ctx.f_up, k, c.v0(), pn_value);
  LiftedObservation obs = observe(f, c, pn, predict_from(mult, r0, k, p), limits);

  LiftAudit audit;
  audit.report = obs.report;
  LemmaTallies& t = audit.tallies;
  auto fail = [&](const std::string& what) {
    audit.violations.push_back("Z_" + std::to_string(pn_value) + ", cycle at " + std::to_string(c.v0()) +
                               " (size " + std::to_string(k) + "): " + what);
  };

  t.theorem.record(obs.report.match);
  if (!obs.report.match) fail("predicted spectrum differs from the lifted graph");

  bool multiples = true;
  for (const SpectrumEntry& e : obs.report.observed) multiples = multiples && e.size % k == 0;
  t.size_multiple.record(multiples);
  if (!multiples) fail("lifted cycle size is not a multiple of k");

  const std::uint64_t lb = mult.lambda_bar.value;
  const std::uint64_t periodic = obs.local.periodic_count();
  bool accounted = lb != 0 ? periodic == k * p : obs.report.tail_vertices == k * p - k;
  t.vertex_accounting.record(accounted);
  if (!accounted) fail("lifted vertex accounting fails");

  for (const Cycle& child : obs.local.cycles) {
    std::vector<std::uint64_t> values;
    values.reserve(child.size());
    for (std::uint64_t u : child.vertices) values.push_back(obs.graph.vertices[u]);
    const std::uint64_t child_bar = multiplier_with(ctx.df_up, values, up, p).lambda_bar.value;
    const bool ok = child.size() == k ? child_bar == lb : child_bar == 1;
    t.multiplier_transfer.record(ok);
    if (!ok) fail("child multiplier " + std::to_string(child_bar) + " breaks the transfer rule");
  }

  if (lb != 1) return audit;

  // lambda_bar == 1: every lifted vertex is periodic, so f^k on the lifted
  // set is a shift by k along each lifted cycle.
  std::vector<std::uint64_t> position(obs.graph.vertices.size());
  for (const Cycle& child : obs.local.cycles)
    for (std::size_t i = 0; i < child.size(); ++i) position[child.vertices[i]] = i;
  auto f_k = [&](std::uint64_t local) {
    const Cycle& child = obs.local.cycles[static_cast<std::size_t>(obs.local.cycle_of[local])];
    return obs.graph.vertices[child.vertices[(position[local] + k) % child.size()]];
  };

  // Local index of v + c p^n is c * k + rank(v) among the sorted vertices of C.
  std::vector<std::uint64_t> r_canonical(k);
  bool independent = true;
  for (std::uint64_t rank = 0; rank < k; ++rank) {
    for (std::uint64_t shift = 0; shift < p; ++shift) {
      const std::uint64_t local = shift * k + rank;
      const std::uint64_t a = obs.graph.vertices[local];
      const std::uint64_t r = sub_mod(f_k(local), a, up) / pn_value;
      if (shift == 0)
        r_canonical[rank] = r;
      else if (r != r_canonical[rank])
        independent = false;
    }
  }
  t.representative_independence.record(independent);
  if (!independent) fail("r depends on the representative");

  const std::size_t zeros = static_cast<std::size_t>(std::count(r_canonical.begin(), r_canonical.end(), 0));
  const bool all_or_nothing = zeros == 0 || zeros == k;
  t.all_or_nothing.record(all_or_nothing);
  if (!all_or_nothing) fail("r vanishes on part of the cycle only");

  // v_0 is the minimum of C, so its rank is 0.
  t.r_cross_check.record(r_canonical[0] == r0);
  if (r_canonical[0] != r0) fail("r from the lifted graph disagrees with direct iteration");

  if (r0 == 0 || obs.local.cycles.size() != 1) return audit;

  const PrimePowerModulus child_level = pn.next();
  const ModularPoly f_up2 = f.modulo(child_level.next().value());
  const std::uint64_t child_size = obs.local.cycles.front().size();
  bool persists = true;
  for (std::uint64_t shift = 0; shift < p; ++shift) {
    if (r_with(f_up2, child_size, c.v0() + shift * pn_value, up) == 0) persists = false;
  }
  if (persistence_hypothesis(p, pn.exponent())) {
    t.r_persistence.record(persists);
    if (!persists) fail("r returns to 0 one level up although p > 3 or (p = 3, n > 1)");
  } else if (!persists) {
    audit.edge_regime_drop = true;
  }
  return audit;
}

TowerTallies& TowerTallies::operator+=(const TowerTallies& o) {
  theorem += o.theorem;
  size_multiple += o.size_multiple;
  multiplier_transfer += o.multiplier_transfer;
  r_persistence += o.r_persistence;
  projection += o.projection;
  unique_chain += o.unique_chain;
  all_periodic += o.all_periodic;
  geometric_growth += o.geometric_growth;
  generic_shape += o.generic_shape;
  generic_growth += o.generic_growth;
  return *this;
}

std::uint64_t TowerTallies::violations() const {
  return theorem.violated + size_multiple.violated + multiplier_transfer.violated + r_persistence.violated +
         projection.violated + unique_chain.violated + all_periodic.violated + geometric_growth.violated +
         generic_shape.violated + generic_growth.violated;
}

TowerReport tower(const PolyFunc& f, std::uint64_t p, unsigned levels, const Limits& limits) {
  if (levels == 0) throw DomainError("tower needs at least one level");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  limits.require_vertices(checked_pow(p, levels), "tower top level");

  TowerReport report{f, p, {}, false, {}, {}, {}};
  TowerTallies& t = report.tallies;
  const PolyFunc df = derivative(f);
  auto fail = [&](unsigned level, std::uint64_t v0, const std::string& what) {
    report.violations.push_back(describe(level, v0) + what);
  };
  constexpr std::size_t kMaxObservations = 64;
  std::size_t dropped_observations = 0;
  auto observe_note = [&](std::string note) {
    if (report.observations.size() < kMaxObservations)
      report.observations.push_back(std::move(note));
    else
      ++dropped_observations;
  };

  // First level at which a descendant reached size k*p (lambda_bar == 1
  // roots) or k*m*p (generic roots); 0 when not yet.
  std::vector<unsigned> growth_start_prev;
  std::optional<CycleDecomposition> prev_decomposition;
  std::map<std::size_t, std::set<unsigned>> generic_exponents;

  for (unsigned n = 1; n <= levels; ++n) {
    const PrimePowerModulus pn(p, n);
    const std::uint64_t mod = pn.value();
    const FunctionalGraph graph = build_graph(f, make_modulus(mod), limits);
    CycleDecomposition decomposition = graph.decomposition();
    const ModularPoly df_n = df.modulo(mod);
    const ModularPoly f_up = f.modulo(pn.next().value());

    TowerLevel level{n, mod, {}};
    level.cycles.reserve(decomposition.cycles.size());
    for (std::size_t i = 0; i < decomposition.cycles.size(); ++i) {
      const Cycle& c = decomposition.cycles[i];
      TowerCycle tc{i, c.v0(), c.size(), multiplier_with(df_n, c.vertices, mod, p), 0, LiftCase::Generic,
                    std::nullopt, i};
      tc.r = r_with(f_up, c.size(), c.v0(), mod);
      tc.lift_case = predict_from(tc.multiplier, tc.r, tc.size, p).case_tag;
      if (n > 1) {
        const std::uint64_t below = mod / p;
        const std::int64_t parent = prev_decomposition->cycle_of[c.v0() % below];
        bool projects = parent >= 0;
        for (std::uint64_t v : c.vertices) projects = projects && prev_decomposition->cycle_of[v % below] == parent;
        t.projection.record(projects);
        if (!projects) {
          fail(n, c.v0(), "vertices do not project onto a single cycle one level down");
        } else {
          tc.parent = static_cast<std::size_t>(parent);
          tc.root = report.levels.back().cycles[tc.parent.value()].root;
        }
      }
      level.cycles.push_back(tc);
    }

    std::vector<unsigned> growth_start(level.cycles.size(), 0);
    if (n == 1) {
      for (const TowerCycle& tc : level.cycles) {
        if (tc.multiplier.lambda_bar.value == 1 && tc.r != 0 && p <= 3) report.edge_regime = true;
      }
      if (p == 2) report.edge_regime = true;
    } else {
      const TowerLevel& below = report.levels.back();
      const std::vector<TowerCycle>& roots = report.levels.front().cycles;
      std::vector<std::vector<std::size_t>> children(below.cycles.size());
      std::vector<std::vector<std::size_t>> by_root(roots.size());
      for (const TowerCycle& tc : level.cycles) {
        if (tc.parent) children[*tc.parent].push_back(tc.id);
        by_root[tc.root].push_back(tc.id);
      }

      // One lift step: parent at level n-1, children at level n.
      for (const TowerCycle& parent : below.cycles) {
        const auto& kids = children[parent.id];
        const std::uint64_t k = parent.size;
        const std::uint64_t lb = parent.multiplier.lambda_bar.value;

        std::map<std::uint64_t, std::uint64_t> counts;
        for (std::size_t id : kids) ++counts[level.cycles[id].size];
        Spectrum observed;
        for (auto [size, count] : counts) observed.push_back({size, count});
        const bool theorem_ok = observed == predict_from(parent.multiplier, parent.r, k, p).spectrum;
        t.theorem.record(theorem_ok);
        if (!theorem_ok) fail(n - 1, parent.v0, "lift spectrum differs from the prediction");

        for (std::size_t id : kids) {
          const TowerCycle& child = level.cycles[id];
          const bool multiple = child.size % k == 0;
          t.size_multiple.record(multiple);
          if (!multiple) fail(n, child.v0, "size is not a multiple of the parent size");
          const std::uint64_t cb = child.multiplier.lambda_bar.value;
          const bool transfer = child.size == k ? cb == lb : cb == 1;
          t.multiplier_transfer.record(transfer);
          if (!transfer) fail(n, child.v0, "multiplier transfer rule fails");
        }

        if (lb == 1 && parent.r != 0 && kids.size() == 1) {
          const TowerCycle& child = level.cycles[kids.front()];
          bool persists = true;
          for (std::uint64_t shift = 0; shift < p; ++shift)
            if (r_with(f_up, child.size, parent.v0 + shift * (mod / p), mod) == 0) persists = false;
          if (persistence_hypothesis(p, n - 1)) {
            t.r_persistence.record(persists);
            if (!persists) fail(n, child.v0, "r returned to 0 under the persistence hypothesis");
          } else if (!persists) {
            observe_note(describe(n, child.v0) + "r drops to 0 after growing from size " + std::to_string(k) +
                         " (p = " + std::to_string(p) + ", level " + std::to_string(n - 1) + " transition)");
          }
        }
      }

      // Statements about the whole family above each level-1 cycle.
      for (const TowerCycle& root : roots) {
        const auto& family = by_root[root.id];
        const std::uint64_t k = root.size;
        const std::uint64_t lb = root.multiplier.lambda_bar.value;
        if (lb == 0) {
          const bool ok = family.size() == 1 && level.cycles[family.front()].size == k;
          t.unique_chain.record(ok);
          if (!ok) fail(n, root.v0, "lambda_bar = 0 but the lift is not a single size-k cycle");
          continue;
        }
        std::uint64_t total = 0;
        for (std::size_t id : family) total += level.cycles[id].size;
        const bool periodic = total == k * ipow(p, n - 1);
        t.all_periodic.record(periodic);
        if (!periodic) fail(n, root.v0, "lifted graph contains non-periodic vertices");

        if (lb == 1) {
          for (std::size_t id : family) {
            const TowerCycle& tc = level.cycles[id];
            const unsigned start = tc.parent ? growth_start_prev[*tc.parent] : 0;
            if (start != 0) {
              growth_start[id] = start;
              if (p > 3) {
                const bool ok = tc.size == k * ipow(p, n - start + 1);
                t.geometric_growth.record(ok);
                if (!ok) fail(n, tc.v0, "size breaks the k p^(n-N+1) growth law");
              }
            } else if (tc.size == k * p) {
              growth_start[id] = n;
            }
          }
          continue;
        }

        const std::uint64_t m = *root.multiplier.order;
        std::size_t fixed_size = 0;
        bool shape = true;
        for (std::size_t id : family) {
          const TowerCycle& tc = level.cycles[id];
          if (tc.size == k) {
            ++fixed_size;
            continue;
          }
          unsigned j = 0;
          if (tc.size % (k * m) == 0 && is_power_of(tc.size / (k * m), p, j))
            generic_exponents[root.id].insert(j);
          else
            shape = false;

          if (p > 2) {
            const unsigned start = tc.parent ? growth_start_prev[*tc.parent] : 0;
            if (start != 0) {
              growth_start[id] = start;
              const bool ok = tc.size == k * m * ipow(p, n - start + 1);
              t.generic_growth.record(ok);
              if (!ok) fail(n, tc.v0, "size breaks the k m p^(n-N+1) growth law");
            } else if (tc.size == k * m * p && n > 2) {
              growth_start[id] = n;
            }
          }
        }
        shape = shape && fixed_size == 1;
        t.generic_shape.record(shape);
        if (!shape) fail(n, root.v0, "generic multiplier family is not one size-k cycle plus k m p^j cycles");
      }
    }

    growth_start_prev = std::move(growth_start);
    prev_decomposition = std::move(decomposition);
    report.levels.push_back(std::move(level));
  }

  for (const auto& [root_id, exponents] : generic_exponents) {
    const TowerCycle& root = report.levels.front().cycles[root_id];
    std::ostringstream os;
    os << describe(1, root.v0) << "k = " << root.size << ", m = " << *root.multiplier.order
       << ", observed j in k m p^j: {";
    bool first = true;
    for (unsigned j : exponents) {
      os << (first ? "" : ", ") << j;
      first = false;
    }
    os << '}';
    observe_note(os.str());
  }
  if (dropped_observations > 0)
    report.observations.push_back(std::to_string(dropped_observations) + " further observations omitted");
  return report;
}

}  // namespace cyclelift
