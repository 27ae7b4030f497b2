#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cyclelift {

/// Argument outside the mathematical domain of an operation (unit ring,
/// non-coprime CRT factors, zero residue passed to an order computation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A modulus or vertex count exceeds what the exact arithmetic or the
/// configured graph bound can handle.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Upper bound on the number of vertices any materialized graph may have.
struct Limits {
  static constexpr std::uint64_t kDefaultMaxVertices = std::uint64_t{1} << 20;

  std::uint64_t max_vertices = kDefaultMaxVertices;

  /// Reads CYCLELIFT_MAX_VERTICES; falls back to the default when unset.
  static Limits from_environment();

  void require_vertices(std::uint64_t count, const char* what) const;
};

}  // namespace cyclelift
