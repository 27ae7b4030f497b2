#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cyclelift/residue.hpp"

namespace cyclelift {

class ModularPoly;

/// Integer polynomial viewed as a self-map of Z/mZ. Coefficients are stored
/// in ascending degree with exact (unbounded) integers.
class PolyFunc {
 public:
  using Coefficient = boost::multiprecision::cpp_int;

  PolyFunc() : coeffs_{Coefficient{0}} {}
  explicit PolyFunc(std::vector<Coefficient> coeffs);
  PolyFunc(std::initializer_list<long long> coeffs);

  const std::vector<Coefficient>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree() const noexcept { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0; }

  /// Coefficients reduced into [0, m) once, for repeated evaluation.
  ModularPoly modulo(std::uint64_t m) const;

  /// Human-readable form, e.g. "-x^3 + 3x".
  std::string to_string() const;

  friend PolyFunc operator+(const PolyFunc& a, const PolyFunc& b);
  friend bool operator==(const PolyFunc&, const PolyFunc&) = default;

 private:
  void trim();

  std::vector<Coefficient> coeffs_;
};

/// A PolyFunc with coefficients pre-reduced modulo a fixed m.
class ModularPoly {
 public:
  ModularPoly(std::vector<std::uint64_t> coeffs, std::uint64_t m)
      : coeffs_(std::move(coeffs)), m_(m) {}

  std::uint64_t modulus() const noexcept { return m_; }

  /// Horner evaluation; x must already be in [0, m).
  std::uint64_t operator()(std::uint64_t x) const {
    std::uint64_t acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = add_mod(mul_mod(acc, x, m_), *it, m_);
    return acc;
  }

  /// f^t(x) by t successive evaluations.
  std::uint64_t iterate(std::uint64_t x, std::uint64_t t) const {
    for (std::uint64_t i = 0; i < t; ++i) x = (*this)(x);
    return x;
  }

 private:
  std::vector<std::uint64_t> coeffs_;
  std::uint64_t m_;
};

/// Accepts "2,0,0,1" (ascending coefficients) or "x^3+2" style text with
/// `^`, implicit multiplication ("3x") and unary minus.
PolyFunc parse_poly(std::string_view text);

Residue eval(const PolyFunc& f, const Residue& a, const Modulus& m);

PolyFunc derivative(const PolyFunc& f);

/// f^t(a) mod m, evaluated pointwise. t == 0 returns a reduced mod m.
Residue iterate_eval(const PolyFunc& f, const Residue& a, std::uint64_t t, const Modulus& m);

}  // namespace cyclelift
