#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cyclelift/crt.hpp"
#include "cyclelift/lifting.hpp"

namespace cyclelift {

/// Random integer polynomial of degree <= max_degree with coefficients in
/// [-coeff_bound, coeff_bound].
PolyFunc random_poly(std::mt19937_64& rng, unsigned max_degree = 6, std::int64_t coeff_bound = 20);

struct LiftTrialConfig {
  std::uint64_t trials = 500;
  std::uint64_t seed = 1;
  std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13};
  unsigned max_degree = 6;
  std::int64_t coeff_bound = 20;
  Limits limits;
};

struct LiftTrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t matching_trials = 0;
  std::uint64_t cycles_checked = 0;
  std::uint64_t edge_regime_drops = 0;
  LemmaTallies tallies;
  /// First few violation messages, for diagnostics.
  std::vector<std::string> violations;

  bool all_match() const { return matching_trials == trials; }
};

/// Each trial samples (f, p, n) with p^{n+1} within the vertex bound and
/// audits every cycle of G(f, Z_{p^n}).
LiftTrialSummary run_lift_trials(const LiftTrialConfig& config);

struct CrtTrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t isomorphic = 0;
  std::uint64_t lcm_rows = 0;
  std::uint64_t lcm_found = 0;
  std::vector<std::string> failures;
};

/// Random f and random coprime 2 <= m, n <= max_factor.
CrtTrialSummary run_crt_trials(std::uint64_t trials, std::uint64_t seed, std::uint64_t max_factor = 200,
                               const Limits& limits = {});

struct TowerTrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t clean_trials = 0;
  std::uint64_t edge_regime_trials = 0;
  TowerTallies tallies;
  std::vector<std::string> violations;
};

/// Random f, p from `primes` and 2 <= N with p^N within the vertex bound.
TowerTrialSummary run_tower_trials(std::uint64_t trials, std::uint64_t seed,
                                   const std::vector<std::uint64_t>& primes = {2, 3, 5, 7},
                                   const Limits& limits = {});

}  // namespace cyclelift
