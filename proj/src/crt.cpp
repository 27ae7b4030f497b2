#include "cyclelift/crt.hpp"

#include <numeric>
#include <set>
#include <string>

namespace cyclelift {

std::uint64_t CrtMap::operator()(std::uint64_t x, std::uint64_t y) const {
  const std::uint64_t mn = m * n;
  // b*n mod mn == (b mod m) * n, and likewise for a*m.
  const std::uint64_t bn = reduce(b, m).value * n;
  const std::uint64_t am = reduce(a, n).value * m;
  return add_mod(mul_mod(bn, x % m, mn), mul_mod(am, y % n, mn), mn);
}

CrtMap crt_map(std::uint64_t m, std::uint64_t n) {
  if (m < 2 || n < 2) throw DomainError("CRT factors must both be at least 2");
  if (m > kMaxModulus / n) throw OverflowError("m*n exceeds 2^63 - 1");
  if (std::gcd(m, n) != 1)
    throw DomainError("gcd(" + std::to_string(m) + ", " + std::to_string(n) + ") != 1");
  Bezout bz = extended_gcd(static_cast<std::int64_t>(m), static_cast<std::int64_t>(n));
  return {m, n, bz.x, bz.y};
}

bool theorem31_check(const PolyFunc& f, std::uint64_t m, std::uint64_t n, const Limits& limits) {
  const CrtMap phi = crt_map(m, n);
  const FunctionalGraph gm = build_graph(f, make_modulus(m), limits);
  const FunctionalGraph gn = build_graph(f, make_modulus(n), limits);
  const FunctionalGraph gmn = build_graph(f, make_modulus(m * n), limits);
  return check_isomorphism_via_map(tensor_product(gm, gn), gmn, phi);
}

std::vector<LcmRow> lcm_cycle_check(const PolyFunc& f, std::uint64_t m, std::uint64_t n,
                                    const Limits& limits) {
  crt_map(m, n);  // validates coprimality
  auto sizes_of = [&](std::uint64_t mod) {
    std::set<std::uint64_t> sizes;
    for (const Cycle& c : cycles(build_graph(f, make_modulus(mod), limits))) sizes.insert(c.size());
    return sizes;
  };
  const auto left = sizes_of(m);
  const auto right = sizes_of(n);
  const auto whole = sizes_of(m * n);

  std::vector<LcmRow> rows;
  for (std::uint64_t k : left) {
    for (std::uint64_t l : right) {
      const std::uint64_t target = std::lcm(k, l);
      rows.push_back({k, l, target, whole.contains(target)});
    }
  }
  return rows;
}

}  // namespace cyclelift
