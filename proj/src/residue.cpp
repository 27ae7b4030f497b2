#include "cyclelift/residue.hpp"

#include <string>

namespace cyclelift {

namespace {

std::vector<PrimePower> trial_factor(std::uint64_t m) {
  std::vector<PrimePower> out;
  auto pull = [&](std::uint64_t q) {
    unsigned e = 0;
    while (m % q == 0) {
      m /= q;
      ++e;
    }
    if (e > 0) out.push_back({q, e});
  };
  pull(2);
  for (std::uint64_t q = 3; q <= m / q; q += 2) pull(q);
  if (m > 1) out.push_back({m, 1});
  return out;
}

}  // namespace

Modulus make_modulus(std::uint64_t m) {
  if (m < 2) throw DomainError("modulus must be at least 2, got " + std::to_string(m));
  if (m > kMaxModulus) throw OverflowError("modulus " + std::to_string(m) + " exceeds 2^63 - 1");
  return Modulus(m, trial_factor(m));
}

std::uint64_t checked_pow(std::uint64_t p, unsigned n) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < n; ++i) {
    if (v > kMaxModulus / p)
      throw OverflowError(std::to_string(p) + "^" + std::to_string(n) + " exceeds 2^63 - 1");
    v *= p;
  }
  return v;
}

PrimePowerModulus::PrimePowerModulus(std::uint64_t p, unsigned n) : p_(p), n_(n) {
  if (n == 0) throw DomainError("prime-power exponent must be at least 1");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  value_ = checked_pow(p, n);
}

Residue reduce(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw DomainError("reduction modulo zero");
  std::uint64_t r;
  if (a >= 0) {
    r = static_cast<std::uint64_t>(a) % m;
  } else {
    // |a| as unsigned is safe for INT64_MIN too.
    std::uint64_t mag = static_cast<std::uint64_t>(-(a + 1)) + 1;
    r = mag % m;
    if (r != 0) r = m - r;
  }
  return {r, m};
}

Residue reduce(std::int64_t a, const Modulus& m) { return reduce(a, m.value()); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  // Miller-Rabin with these bases is deterministic below 2^64.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mult_order(std::uint64_t u, std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("multiplicative order needs a prime modulus, got " + std::to_string(p));
  u %= p;
  if (u == 0) throw DomainError("zero residue has no multiplicative order");
  if (p == 2) return 1;
  std::uint64_t order = p - 1;
  for (const PrimePower& q : trial_factor(p - 1)) {
    while (order % q.prime == 0 && pow_mod(u, order / q.prime, p) == 1) order /= q.prime;
  }
  return order;
}

std::uint64_t mult_order(const Residue& u) { return mult_order(u.value, u.modulus); }

Bezout extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b;
  std::int64_t old_s = 1, s = 0;
  std::int64_t old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

}  // namespace cyclelift
