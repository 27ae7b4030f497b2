#include "cyclelift/trials.hpp"

#include <numeric>

namespace cyclelift {

namespace {

constexpr std::size_t kKeptMessages = 20;

void keep(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const std::string& s : from) {
    if (into.size() >= kKeptMessages) return;
    into.push_back(s);
  }
}

unsigned max_exponent(std::uint64_t p, std::uint64_t bound) {
  unsigned e = 0;
  std::uint64_t v = 1;
  while (v <= bound / p) {
    v *= p;
    ++e;
  }
  return e;
}

}  // namespace

PolyFunc random_poly(std::mt19937_64& rng, unsigned max_degree, std::int64_t coeff_bound) {
  std::uniform_int_distribution<unsigned> degree(0, max_degree);
  std::uniform_int_distribution<std::int64_t> coeff(-coeff_bound, coeff_bound);
  std::vector<PolyFunc::Coefficient> cs(degree(rng) + 1);
  for (auto& c : cs) c = coeff(rng);
  return PolyFunc(std::move(cs));
}

LiftTrialSummary run_lift_trials(const LiftTrialConfig& config) {
  std::mt19937_64 rng(config.seed);
  LiftTrialSummary summary;
  std::vector<std::uint64_t> usable;
  for (std::uint64_t p : config.primes)
    if (max_exponent(p, config.limits.max_vertices) >= 2) usable.push_back(p);
  if (usable.empty()) throw DomainError("vertex bound too small for any prime power lift");
  std::uniform_int_distribution<std::size_t> pick_prime(0, usable.size() - 1);

  for (std::uint64_t trial = 0; trial < config.trials; ++trial) {
    const PolyFunc f = random_poly(rng, config.max_degree, config.coeff_bound);
    const std::uint64_t p = usable[pick_prime(rng)];
    // p^{n+1} <= bound.
    std::uniform_int_distribution<unsigned> pick_n(1, max_exponent(p, config.limits.max_vertices) - 1);
    const PrimePowerModulus pn(p, pick_n(rng));
    const FunctionalGraph g = build_graph(f, make_modulus(pn.value()), config.limits);

    bool trial_ok = true;
    for (const Cycle& c : g.decomposition().cycles) {
      LiftAudit audit = audit_lift(f, c, pn, config.limits);
      ++summary.cycles_checked;
      summary.tallies += audit.tallies;
      if (audit.edge_regime_drop) ++summary.edge_regime_drops;
      if (!audit.report.match) trial_ok = false;
      if (!audit.violations.empty()) {
        for (std::string& v : audit.violations) v = "f = " + f.to_string() + ", " + v;
        keep(summary.violations, audit.violations);
      }
    }
    ++summary.trials;
    if (trial_ok) ++summary.matching_trials;
  }
  return summary;
}

CrtTrialSummary run_crt_trials(std::uint64_t trials, std::uint64_t seed, std::uint64_t max_factor,
                               const Limits& limits) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint64_t> factor(2, max_factor);
  CrtTrialSummary summary;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const PolyFunc f = random_poly(rng);
    std::uint64_t m = 0, n = 0;
    do {
      m = factor(rng);
      n = factor(rng);
    } while (std::gcd(m, n) != 1);

    ++summary.trials;
    const std::string where = "f = " + f.to_string() + ", m = " + std::to_string(m) + ", n = " + std::to_string(n);
    if (theorem31_check(f, m, n, limits))
      ++summary.isomorphic;
    else if (summary.failures.size() < kKeptMessages)
      summary.failures.push_back(where + ": CRT map is not an isomorphism");
    for (const LcmRow& row : lcm_cycle_check(f, m, n, limits)) {
      ++summary.lcm_rows;
      if (row.found)
        ++summary.lcm_found;
      else if (summary.failures.size() < kKeptMessages)
        summary.failures.push_back(where + ": no cycle of size " + std::to_string(row.lcm));
    }
  }
  return summary;
}

TowerTrialSummary run_tower_trials(std::uint64_t trials, std::uint64_t seed, const std::vector<std::uint64_t>& primes,
                                   const Limits& limits) {
  std::mt19937_64 rng(seed);
  std::vector<std::uint64_t> usable;
  for (std::uint64_t p : primes)
    if (max_exponent(p, limits.max_vertices) >= 2) usable.push_back(p);
  if (usable.empty()) throw DomainError("vertex bound too small for a two-level tower");
  std::uniform_int_distribution<std::size_t> pick_prime(0, usable.size() - 1);

  TowerTrialSummary summary;
  for (std::uint64_t trial = 0; trial < trials; ++trial) {
    const PolyFunc f = random_poly(rng);
    const std::uint64_t p = usable[pick_prime(rng)];
    std::uniform_int_distribution<unsigned> pick_levels(2, max_exponent(p, limits.max_vertices));
    TowerReport report = tower(f, p, pick_levels(rng), limits);
    ++summary.trials;
    summary.tallies += report.tallies;
    if (report.edge_regime) ++summary.edge_regime_trials;
    if (report.ok()) {
      ++summary.clean_trials;
    } else {
      for (std::string& v : report.violations) v = "f = " + f.to_string() + ", p = " + std::to_string(p) + ", " + v;
      keep(summary.violations, report.violations);
    }
  }
  return summary;
}

}  // namespace cyclelift
