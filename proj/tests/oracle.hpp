#pragma once

// Brute-force reference computations for the test suites. Nothing here
// calls into the library: polynomials are evaluated as plain power sums and
// periodicity is decided by walking orbits step by step.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % m); }

inline u64 lift_coeff(long long c, u64 m) {
  long long r = c % static_cast<long long>(m);
  return static_cast<u64>(r < 0 ? r + static_cast<long long>(m) : r);
}

/// sum c_i x^i mod m, powers accumulated term by term.
inline u64 eval(const std::vector<long long>& coeffs, u64 x, u64 m) {
  u64 acc = 0, power = 1 % m;
  for (long long c : coeffs) {
    acc = (acc + mulmod(lift_coeff(c, m), power, m)) % m;
    power = mulmod(power, x % m, m);
  }
  return acc;
}

inline std::vector<long long> derivative(const std::vector<long long>& coeffs) {
  std::vector<long long> out;
  for (std::size_t i = 1; i < coeffs.size(); ++i) out.push_back(coeffs[i] * static_cast<long long>(i));
  if (out.empty()) out.push_back(0);
  return out;
}

inline std::vector<u64> successors(const std::vector<long long>& coeffs, u64 m) {
  std::vector<u64> s(m);
  for (u64 v = 0; v < m; ++v) s[v] = eval(coeffs, v, m);
  return s;
}

inline u64 naive_order(u64 u, u64 p) {
  u64 x = u % p;
  for (u64 s = 1; s < p; ++s) {
    if (x == 1) return s;
    x = mulmod(x, u, p);
  }
  return 0;
}

/// Period of v under `next` if v is periodic, 0 otherwise. O(limit).
template <class Next>
u64 period(u64 v, Next next, u64 limit) {
  u64 x = v;
  for (u64 t = 1; t <= limit; ++t) {
    x = next(x);
    if (x == v) return t;
  }
  return 0;
}

/// Cycles as sorted vertex sets, found by testing each vertex separately.
template <class Next>
std::set<std::vector<u64>> cycles_among(const std::vector<u64>& vertices, Next next) {
  std::set<std::vector<u64>> out;
  const u64 limit = vertices.size();
  for (u64 v : vertices) {
    const u64 t = period(v, next, limit);
    if (t == 0) continue;
    std::vector<u64> orbit{v};
    for (u64 x = next(v); x != v; x = next(x)) orbit.push_back(x);
    std::sort(orbit.begin(), orbit.end());
    out.insert(orbit);
  }
  return out;
}

inline std::map<u64, u64> spectrum(const std::set<std::vector<u64>>& cycles) {
  std::map<u64, u64> out;
  for (const auto& c : cycles) ++out[c.size()];
  return out;
}

/// Cycles of G(f, Z_{p^{n+1}}) lying over the vertex set `base` of Z_{p^n}.
inline std::set<std::vector<u64>> lifted_cycles(const std::vector<long long>& coeffs, const std::vector<u64>& base,
                                                u64 pn, u64 p) {
  const u64 up = pn * p;
  std::vector<u64> over;
  for (u64 x = 0; x < up; ++x)
    if (std::find(base.begin(), base.end(), x % pn) != base.end()) over.push_back(x);
  return cycles_among(over, [&](u64 x) { return eval(coeffs, x, up); });
}

inline std::set<std::vector<u64>> all_cycles(const std::vector<long long>& coeffs, u64 m) {
  std::vector<u64> all(m);
  for (u64 v = 0; v < m; ++v) all[v] = v;
  return cycles_among(all, [&](u64 x) { return eval(coeffs, x, m); });
}

}  // namespace oracle
