#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "cyclelift/errors.hpp"

namespace cyclelift {

/// Largest modulus accepted anywhere. Products of two residues are formed
/// in 128 bits, so anything below 2^63 is exact.
inline constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 63) - 1;

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// The ring Z/mZ together with the factorization of m.
class Modulus {
 public:
  std::uint64_t value() const noexcept { return m_; }
  const std::vector<PrimePower>& factorization() const noexcept { return factors_; }
  bool is_prime_power() const noexcept { return factors_.size() == 1; }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.m_ == b.m_; }

 private:
  friend Modulus make_modulus(std::uint64_t m);
  Modulus(std::uint64_t m, std::vector<PrimePower> factors)
      : m_(m), factors_(std::move(factors)) {}

  std::uint64_t m_;
  std::vector<PrimePower> factors_;
};

/// Factors m by trial division. Throws DomainError for m < 2 and
/// OverflowError for m > kMaxModulus.
Modulus make_modulus(std::uint64_t m);

/// Z/p^nZ with p prime and n >= 1.
class PrimePowerModulus {
 public:
  /// Throws DomainError if p is not prime or n == 0, OverflowError if
  /// p^n exceeds kMaxModulus.
  PrimePowerModulus(std::uint64_t p, unsigned n);

  std::uint64_t prime() const noexcept { return p_; }
  unsigned exponent() const noexcept { return n_; }
  std::uint64_t value() const noexcept { return value_; }

  /// Z/p^{n+1}Z.
  PrimePowerModulus next() const { return PrimePowerModulus(p_, n_ + 1); }
  Modulus modulus() const { return make_modulus(value_); }

  friend bool operator==(const PrimePowerModulus& a, const PrimePowerModulus& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  std::uint64_t p_;
  unsigned n_;
  std::uint64_t value_;
};

/// Canonical representative in [0, modulus).
struct Residue {
  std::uint64_t value;
  std::uint64_t modulus;

  friend bool operator==(const Residue&, const Residue&) = default;
};

Residue reduce(std::int64_t a, const Modulus& m);
Residue reduce(std::int64_t a, std::uint64_t m);

__extension__ typedef unsigned __int128 uint128_t;

inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  // a, b < m < 2^63 so a + b cannot wrap.
  std::uint64_t s = a + b;
  return s >= m ? s - m : s;
}

inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return a >= b ? a - b : a + (m - b);
}

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<uint128_t>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

bool is_prime(std::uint64_t n);

/// Least s >= 1 with u^s == 1 (mod p). Throws DomainError if p | u or p is
/// not prime.
std::uint64_t mult_order(const Residue& u);
std::uint64_t mult_order(std::uint64_t u, std::uint64_t p);

/// Checked p^n; throws OverflowError beyond kMaxModulus.
std::uint64_t checked_pow(std::uint64_t p, unsigned n);

struct Bezout {
  std::int64_t gcd;
  std::int64_t x;  // x*a + y*b == gcd
  std::int64_t y;
};

Bezout extended_gcd(std::int64_t a, std::int64_t b);

}  // namespace cyclelift
