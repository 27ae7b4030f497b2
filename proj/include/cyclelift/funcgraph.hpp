#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cyclelift/errors.hpp"
#include "cyclelift/poly.hpp"
#include "cyclelift/residue.hpp"

namespace cyclelift {

struct CrtMap;

/// Cycle v_0 -> v_1 -> ... -> v_{k-1} -> v_0, rotated so v_0 is the
/// smallest vertex.
struct Cycle {
  std::vector<std::uint64_t> vertices;
  std::uint64_t modulus = 0;

  std::size_t size() const noexcept { return vertices.size(); }
  std::uint64_t v0() const { return vertices.front(); }
  bool contains(std::uint64_t v) const;

  friend bool operator==(const Cycle&, const Cycle&) = default;
};

/// Cycle structure of a successor array. `cycle_of[v]` is the index of the
/// cycle through v, or -1 for tail vertices; `reaches[v]` is the index of
/// the cycle every forward orbit from v ends in.
struct CycleDecomposition {
  std::vector<Cycle> cycles;
  std::vector<std::int64_t> cycle_of;
  std::vector<std::uint32_t> reaches;

  bool on_cycle(std::uint64_t v) const { return cycle_of[v] >= 0; }
  std::size_t periodic_count() const;
};

/// G(f, Z_m): vertex v has the single out-edge v -> f(v) mod m.
class FunctionalGraph {
 public:
  /// Validates that every successor lies in [0, m).
  FunctionalGraph(Modulus modulus, std::vector<std::uint64_t> succ, std::string label = {});

  const Modulus& modulus() const noexcept { return modulus_; }
  std::uint64_t size() const noexcept { return succ_.size(); }
  std::span<const std::uint64_t> succ() const noexcept { return succ_; }
  std::uint64_t successor(std::uint64_t v) const { return succ_[v]; }
  const std::string& label() const noexcept { return label_; }

  /// Decomposition computed on first use.
  const CycleDecomposition& decomposition() const;

 private:
  Modulus modulus_;
  std::vector<std::uint64_t> succ_;
  std::string label_;
  mutable std::optional<CycleDecomposition> decomposition_;
};

FunctionalGraph build_graph(const PolyFunc& f, const Modulus& m, const Limits& limits = {});

/// All cycles in canonical rotation, sorted by (size, v_0).
std::vector<Cycle> cycles(const FunctionalGraph& g);

/// Iterative three-colour decomposition of an arbitrary successor array.
/// Cycles carry indices into `succ`, canonicalized and sorted by (size, v_0).
CycleDecomposition decompose(std::span<const std::uint64_t> succ, std::uint64_t modulus_tag);

/// The induced subgraph of G(f, Z_{p^{n+1}}) on the preimage of a cycle of
/// G(f, Z_{p^n}). Vertices are sorted; `succ` uses local indices.
struct LiftedGraph {
  PrimePowerModulus level;
  std::vector<std::uint64_t> vertices;
  std::vector<std::uint64_t> succ;

  /// Cycles in global vertex values (modulo p^{n+1}).
  std::vector<Cycle> cycles() const;
  /// Decomposition over local indices.
  CycleDecomposition local_decomposition() const;
};

LiftedGraph lifted_subgraph(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& base,
                            const Limits& limits = {});

/// Tensor product G1 (x) G2 without materializing it: the pair (x, y) has
/// index x * |G2| + y and successor (succ1[x], succ2[y]).
class ProductGraph {
 public:
  ProductGraph(const FunctionalGraph& left, const FunctionalGraph& right)
      : left_(&left), right_(&right) {}

  const FunctionalGraph& left() const noexcept { return *left_; }
  const FunctionalGraph& right() const noexcept { return *right_; }
  std::uint64_t size() const noexcept { return left_->size() * right_->size(); }

  std::uint64_t index(std::uint64_t x, std::uint64_t y) const { return x * right_->size() + y; }
  std::uint64_t successor(std::uint64_t idx) const {
    const std::uint64_t n = right_->size();
    return index(left_->successor(idx / n), right_->successor(idx % n));
  }

 private:
  const FunctionalGraph* left_;
  const FunctionalGraph* right_;
};

ProductGraph tensor_product(const FunctionalGraph& g1, const FunctionalGraph& g2);

/// True iff `phi` is a bijection onto the vertices of `g` that carries
/// every product edge onto an edge of `g`. Both graphs have exactly one
/// edge per vertex, so that makes phi an isomorphism. Throws DomainError
/// when the factor moduli are not coprime or do not match phi and g.
bool check_isomorphism_via_map(const ProductGraph& p, const FunctionalGraph& g, const CrtMap& phi);

}  // namespace cyclelift
