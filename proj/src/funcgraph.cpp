#include "cyclelift/funcgraph.hpp"

#include <algorithm>
#include <numeric>

#include "cyclelift/crt.hpp"

namespace cyclelift {

bool Cycle::contains(std::uint64_t v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::size_t CycleDecomposition::periodic_count() const {
  std::size_t total = 0;
  for (const Cycle& c : cycles) total += c.size();
  return total;
}

FunctionalGraph::FunctionalGraph(Modulus modulus, std::vector<std::uint64_t> succ, std::string label)
    : modulus_(std::move(modulus)), succ_(std::move(succ)), label_(std::move(label)) {
  if (succ_.size() != modulus_.value())
    throw DomainError("successor array length does not match the modulus");
  for (std::uint64_t s : succ_)
    if (s >= modulus_.value()) throw DomainError("successor outside [0, m)");
}

const CycleDecomposition& FunctionalGraph::decomposition() const {
  if (!decomposition_) decomposition_ = decompose(succ_, modulus_.value());
  return *decomposition_;
}

FunctionalGraph build_graph(const PolyFunc& f, const Modulus& m, const Limits& limits) {
  limits.require_vertices(m.value(), "functional graph");
  const ModularPoly poly = f.modulo(m.value());
  std::vector<std::uint64_t> succ(m.value());
  for (std::uint64_t v = 0; v < succ.size(); ++v) succ[v] = poly(v);
  return FunctionalGraph(m, std::move(succ), "G(" + f.to_string() + ", Z_" + std::to_string(m.value()) + ")");
}

std::vector<Cycle> cycles(const FunctionalGraph& g) { return g.decomposition().cycles; }

CycleDecomposition decompose(std::span<const std::uint64_t> succ, std::uint64_t modulus_tag) {
  constexpr std::uint8_t kWhite = 0, kGray = 1, kBlack = 2;
  const std::size_t count = succ.size();
  std::vector<std::uint8_t> colour(count, kWhite);
  std::vector<std::uint32_t> reaches(count, 0);
  std::vector<std::int64_t> cycle_of(count, -1);
  std::vector<Cycle> found;
  std::vector<std::uint64_t> path;

  for (std::uint64_t start = 0; start < count; ++start) {
    if (colour[start] != kWhite) continue;
    path.clear();
    std::uint64_t v = start;
    while (colour[v] == kWhite) {
      colour[v] = kGray;
      path.push_back(v);
      v = succ[v];
    }
    std::uint32_t target;
    if (colour[v] == kGray) {
      // v closes a new cycle: the path suffix starting at v.
      auto pos = std::find(path.rbegin(), path.rend(), v);
      std::size_t begin = static_cast<std::size_t>(path.rend() - pos) - 1;
      Cycle c;
      c.modulus = modulus_tag;
      c.vertices.assign(path.begin() + static_cast<std::ptrdiff_t>(begin), path.end());
      target = static_cast<std::uint32_t>(found.size());
      for (std::uint64_t u : c.vertices) cycle_of[u] = target;
      found.push_back(std::move(c));
    } else {
      target = reaches[v];
    }
    for (std::uint64_t u : path) {
      colour[u] = kBlack;
      reaches[u] = target;
    }
  }

  for (Cycle& c : found) {
    auto min_it = std::min_element(c.vertices.begin(), c.vertices.end());
    std::rotate(c.vertices.begin(), min_it, c.vertices.end());
  }
  std::vector<std::uint32_t> order(found.size());
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (found[a].size() != found[b].size()) return found[a].size() < found[b].size();
    return found[a].v0() < found[b].v0();
  });
  std::vector<std::uint32_t> rank(found.size());
  CycleDecomposition out;
  out.cycles.reserve(found.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = i;
    out.cycles.push_back(std::move(found[order[i]]));
  }
  for (std::size_t v = 0; v < count; ++v) {
    reaches[v] = rank[reaches[v]];
    if (cycle_of[v] >= 0) cycle_of[v] = rank[static_cast<std::size_t>(cycle_of[v])];
  }
  out.cycle_of = std::move(cycle_of);
  out.reaches = std::move(reaches);
  return out;
}

CycleDecomposition LiftedGraph::local_decomposition() const { return decompose(succ, level.value()); }

std::vector<Cycle> LiftedGraph::cycles() const {
  CycleDecomposition d = local_decomposition();
  for (Cycle& c : d.cycles) {
    // vertices is sorted, so the minimum local index is the minimum value
    // and the canonical rotation survives the translation.
    for (std::uint64_t& u : c.vertices) u = vertices[u];
  }
  return std::move(d.cycles);
}

LiftedGraph lifted_subgraph(const PolyFunc& f, const Cycle& c, const PrimePowerModulus& base,
                            const Limits& limits) {
  if (c.modulus != base.value()) throw DomainError("cycle does not live in Z_" + std::to_string(base.value()));
  const PrimePowerModulus up = base.next();
  const std::uint64_t p = base.prime();
  const std::uint64_t pn = base.value();
  const std::uint64_t k = c.size();
  limits.require_vertices(k * p, "lifted graph");

  std::vector<std::uint64_t> bases = c.vertices;
  std::sort(bases.begin(), bases.end());

  LiftedGraph out{up, {}, {}};
  out.vertices.reserve(k * p);
  // Values a + j p^n sort by (j, a) because a < p^n.
  for (std::uint64_t j = 0; j < p; ++j)
    for (std::uint64_t a : bases) out.vertices.push_back(a + j * pn);

  const ModularPoly poly = f.modulo(up.value());
  out.succ.resize(out.vertices.size());
  for (std::size_t i = 0; i < out.vertices.size(); ++i) {
    std::uint64_t w = poly(out.vertices[i]);
    auto it = std::lower_bound(bases.begin(), bases.end(), w % pn);
    if (it == bases.end() || *it != w % pn)
      throw DomainError("vertex set is not closed under f; the cycle does not belong to this map");
    out.succ[i] = (w / pn) * k + static_cast<std::uint64_t>(it - bases.begin());
  }
  return out;
}

ProductGraph tensor_product(const FunctionalGraph& g1, const FunctionalGraph& g2) { return {g1, g2}; }

bool check_isomorphism_via_map(const ProductGraph& p, const FunctionalGraph& g, const CrtMap& phi) {
  const std::uint64_t m = p.left().size();
  const std::uint64_t n = p.right().size();
  if (std::gcd(m, n) != 1) throw DomainError("tensor factors have non-coprime moduli");
  if (phi.m != m || phi.n != n) throw DomainError("CRT map does not match the factor moduli");
  if (g.size() != m * n) throw DomainError("target graph is not over Z_mn");

  std::vector<bool> hit(g.size(), false);
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      const std::uint64_t image = phi(x, y);
      if (image >= g.size() || hit[image]) return false;
      hit[image] = true;
      const std::uint64_t next = p.successor(p.index(x, y));
      if (phi(next / n, next % n) != g.successor(image)) return false;
    }
  }
  // m*n distinct images in a set of size m*n: phi is onto. Both graphs have
  // exactly m*n edges, so the edge map is a bijection as well.
  return true;
}

}  // namespace cyclelift
