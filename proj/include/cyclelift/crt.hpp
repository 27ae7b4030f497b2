#pragma once

#include <cstdint>
#include <vector>

#include "cyclelift/funcgraph.hpp"

namespace cyclelift {

/// CRT isomorphism Z_m x Z_n -> Z_mn, (x, y) -> b*n*x + a*m*y with
/// a*m + b*n == 1.
struct CrtMap {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;

  std::uint64_t operator()(std::uint64_t x, std::uint64_t y) const;
};

/// Throws DomainError when gcd(m, n) != 1 or either factor is below 2,
/// OverflowError when m*n exceeds kMaxModulus.
CrtMap crt_map(std::uint64_t m, std::uint64_t n);

/// Builds G(f, Z_m), G(f, Z_n) and G(f, Z_mn) and checks that the CRT map
/// is an isomorphism of the tensor product onto G(f, Z_mn).
bool theorem31_check(const PolyFunc& f, std::uint64_t m, std::uint64_t n, const Limits& limits = {});

struct LcmRow {
  std::uint64_t k;
  std::uint64_t l;
  std::uint64_t lcm;
  bool found;

  friend bool operator==(const LcmRow&, const LcmRow&) = default;
};

/// One row per distinct pair of cycle sizes (k in G(f, Z_m), l in
/// G(f, Z_n)), sorted by (k, l); `found` records whether G(f, Z_mn) has a
/// cycle of size lcm(k, l).
std::vector<LcmRow> lcm_cycle_check(const PolyFunc& f, std::uint64_t m, std::uint64_t n,
                                    const Limits& limits = {});

}  // namespace cyclelift
