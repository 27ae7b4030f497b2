#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cyclelift/funcgraph.hpp"
#include "cyclelift/poly.hpp"
#include "cyclelift/residue.hpp"

namespace cyclelift {

/// Multiplier of a cycle C = {v_0, ..., v_{k-1}} in G(f, Z_{p^n}):
/// lambda = prod f'(v_i) mod p^n and its image modulo p.
struct MultiplierData {
  Residue lambda_mod_pn;
  Residue lambda_bar;
  /// Multiplicative order of lambda_bar; empty when lambda_bar == 0.
  std::optional<std::uint64_t> order;
};

enum class LiftCase { LambdaZero, LambdaOneRZero, LambdaOneRNonzero, Generic };

/// "LambdaZero", "LambdaOne_rZero", "LambdaOne_rNonzero", "Generic".
std::string_view to_string(LiftCase c);

struct SpectrumEntry {
  std::uint64_t size;
  std::uint64_t count;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
  friend auto operator<=>(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Multiset of cycle sizes, sorted by (size, count).
using Spectrum = std::vector<SpectrumEntry>;

Spectrum spectrum_of(const std::vector<Cycle>& cs);

struct LiftPrediction {
  LiftCase case_tag;
  Spectrum spectrum;
  MultiplierData multiplier;
  /// r at the canonical vertex v_0.
  std::uint64_t r_used;
  std::uint64_t cycle_size;
};

struct LiftReport {
  LiftPrediction prediction;
  Spectrum observed;
  /// Lifted vertices that are not on any lifted cycle.
  std::uint64_t tail_vertices = 0;
  bool match = false;
};

MultiplierData multiplier(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn);

/// r_v = ((f^k(a_v) - a_v) / p^n) mod p with a_v the representative of v in
/// [0, p^n). Throws DomainError when v is not on c.
std::uint64_t r_value(const PolyFunc& f, const Cycle& c, std::uint64_t v, const PrimePowerModulus& pn);

/// Same quantity for an arbitrary representative a in [0, p^{n+1}) of a
/// vertex of a size-k cycle.
std::uint64_t r_value_at(const PolyFunc& f, std::uint64_t k, std::uint64_t a, const PrimePowerModulus& pn);

/// Cycle structure of the lifted graph of c in G(f, Z_{p^{n+1}}) predicted
/// from lambda_bar and r.
LiftPrediction predict_lift(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn);

/// Case analysis on already computed invariants.
LiftPrediction predict_from(const MultiplierData& mult, std::uint64_t r, std::uint64_t k, std::uint64_t p);

/// Brute-force check of predict_lift on the materialized lifted graph.
LiftReport verify_lift(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn, const Limits& limits = {});

struct CheckTally {
  std::uint64_t checked = 0;
  std::uint64_t violated = 0;

  void record(bool ok) {
    ++checked;
    if (!ok) ++violated;
  }
  CheckTally& operator+=(const CheckTally& o) {
    checked += o.checked;
    violated += o.violated;
    return *this;
  }
};

/// Counts for the structural properties audited on each lifted cycle.
struct LemmaTallies {
  CheckTally theorem;              // predicted spectrum == observed
  CheckTally size_multiple;        // lifted sizes are multiples of k
  CheckTally multiplier_transfer;  // child lambda_bar is parent's or 1
  CheckTally representative_independence;
  CheckTally all_or_nothing;       // r zero on all of C or on none
  CheckTally r_persistence;        // r != 0 survives one more lift
  CheckTally vertex_accounting;
  CheckTally r_cross_check;        // graph route vs iterate_eval route

  LemmaTallies& operator+=(const LemmaTallies& o);
  std::uint64_t violations() const;
};

struct LiftAudit {
  LiftReport report;
  LemmaTallies tallies;
  std::vector<std::string> violations;
  /// r dropped to 0 one level up outside the persistence hypothesis
  /// (p == 2, or p == 3 with n == 1).
  bool edge_regime_drop = false;
};

/// verify_lift plus every lemma check that applies to c.
LiftAudit audit_lift(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& pn, const Limits& limits = {});

struct TowerCycle {
  std::size_t id;
  std::uint64_t v0;
  std::uint64_t size;
  MultiplierData multiplier;
  std::uint64_t r;
  LiftCase lift_case;
  /// Index into the previous level's cycles.
  std::optional<std::size_t> parent;
  /// Index of the level-1 ancestor.
  std::size_t root;
};

struct TowerLevel {
  unsigned level;
  std::uint64_t modulus;
  std::vector<TowerCycle> cycles;
};

struct TowerTallies {
  CheckTally theorem;
  CheckTally size_multiple;
  CheckTally multiplier_transfer;
  CheckTally r_persistence;
  CheckTally projection;
  CheckTally unique_chain;      // lambda_bar == 0: one size-k cycle per level
  CheckTally all_periodic;      // lambda_bar != 0: every lifted vertex periodic
  CheckTally geometric_growth;  // lambda_bar == 1, p > 3: k p^{n-N+1}
  CheckTally generic_shape;     // lambda_bar not 0/1: one size-k, rest k m p^j
  CheckTally generic_growth;    // lambda_bar not 0/1, p > 2: k m p^{n-N+1}

  TowerTallies& operator+=(const TowerTallies& o);
  std::uint64_t violations() const;
};

struct TowerReport {
  PolyFunc poly;
  std::uint64_t prime;
  std::vector<TowerLevel> levels;
  /// p == 2, or p == 3 with a lambda_bar == 1, r != 0 cycle at level 1:
  /// the r-persistence hypothesis fails somewhere and the geometric
  /// growth clause is not asserted.
  bool edge_regime = false;
  TowerTallies tallies;
  std::vector<std::string> violations;
  std::vector<std::string> observations;

  bool ok() const { return violations.empty(); }
};

/// Cycle census of G(f, Z_{p^n}) for n = 1..levels, linked by projection,
/// with the lifting statements asserted wherever their hypotheses hold.
TowerReport tower(const PolyFunc& f, std::uint64_t p, unsigned levels, const Limits& limits = {});

}  // namespace cyclelift
