#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "cyclelift/errors.hpp"

namespace cyclelift::cli {

enum class Command { Graph, Cycles, Lift, Tower, CrtCheck };
enum class Format { Json, Dot, Text };

struct RunConfig {
  Command command = Command::Graph;
  std::string poly;
  std::optional<std::uint64_t> m;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> prime;
  std::optional<unsigned> power;
  std::optional<unsigned> levels;
  std::optional<std::uint64_t> cycle_containing;
  Format format = Format::Json;
  bool verify = false;
  std::optional<std::uint64_t> random_trials;
  std::uint64_t seed = 1;
  Limits limits;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

/// Executes one command. Reports go to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when a verification disagrees with its
/// prediction, 2 on usage or domain errors.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cyclelift::cli
