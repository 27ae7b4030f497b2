#include "cyclelift/errors.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace cyclelift {

Limits Limits::from_environment() {
  Limits limits;
  const char* raw = std::getenv("CYCLELIFT_MAX_VERTICES");
  if (raw == nullptr || *raw == '\0') return limits;
  std::uint64_t parsed = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, parsed);
  if (ec != std::errc{} || ptr != end || parsed == 0)
    throw DomainError(std::string("CYCLELIFT_MAX_VERTICES is not a positive integer: ") + raw);
  limits.max_vertices = parsed;
  return limits;
}

void Limits::require_vertices(std::uint64_t count, const char* what) const {
  if (count > max_vertices)
    throw OverflowError(std::string(what) + " needs " + std::to_string(count) +
                        " vertices, above the bound of " + std::to_string(max_vertices));
}

}  // namespace cyclelift
