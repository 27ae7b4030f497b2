#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "cyclelift/cli.hpp"

using cyclelift::cli::Command;
using cyclelift::cli::Format;
using cyclelift::cli::RunConfig;

namespace {

void add_common(CLI::App* sub, RunConfig& config, bool poly_required = true) {
  auto* poly = sub->add_option("--poly", config.poly, "polynomial, e.g. \"x^3+2\" or \"2,0,0,1\"");
  if (poly_required) poly->required();
  static const std::map<std::string, Format> formats{
      {"json", Format::Json}, {"dot", Format::Dot}, {"text", Format::Text}};
  sub->add_option("--format", config.format, "json | dot | text")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional graphs of polynomial maps on Z/mZ and how their cycles lift from Z/p^n to Z/p^(n+1)"};
  app.require_subcommand(1);
  RunConfig config;
  std::optional<std::uint64_t> max_vertices;
  app.add_option("--max-vertices", max_vertices, "vertex bound (overrides CYCLELIFT_MAX_VERTICES)");

  auto* graph = app.add_subcommand("graph", "emit G(f, Z_m)");
  add_common(graph, config);
  graph->add_option("--m", config.m, "modulus");
  graph->add_option("--prime", config.prime, "prime p (with --power)");
  graph->add_option("--power", config.power, "exponent n (with --prime)");

  auto* cycles = app.add_subcommand("cycles", "cycle census, with multiplier and r on prime powers");
  add_common(cycles, config);
  cycles->add_option("--m", config.m, "modulus");
  cycles->add_option("--prime", config.prime, "prime p (with --power)");
  cycles->add_option("--power", config.power, "exponent n (with --prime)");

  auto* lift = app.add_subcommand("lift", "predict (and with --verify observe) how cycles of Z_{p^n} lift");
  add_common(lift, config, false);
  lift->add_option("--prime", config.prime, "prime p");
  lift->add_option("--power", config.power, "exponent n");
  lift->add_option("--cycle-containing", config.cycle_containing, "select the cycle reached from this vertex");
  lift->add_flag("--verify", config.verify, "compare against the brute-force lifted graph");
  lift->add_option("--random-trials", config.random_trials, "run the randomized lifting oracle instead");
  lift->add_option("--seed", config.seed, "seed for --random-trials");

  auto* tower = app.add_subcommand("tower", "cycle structure over Z_p, Z_{p^2}, ..., Z_{p^N}");
  add_common(tower, config);
  tower->add_option("--prime", config.prime, "prime p")->required();
  tower->add_option("--levels", config.levels, "number of levels N")->required();

  auto* crt = app.add_subcommand("crt-check", "CRT isomorphism and lcm-cycle check");
  add_common(crt, config, false);
  crt->add_option("--m", config.m, "first factor");
  crt->add_option("--n", config.n, "second factor");
  crt->add_option("--random-trials", config.random_trials, "run the randomized CRT oracle instead");
  crt->add_option("--seed", config.seed, "seed for --random-trials");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cyclelift::cli::kExitUsage;
  }

  if (graph->parsed()) config.command = Command::Graph;
  if (cycles->parsed()) config.command = Command::Cycles;
  if (lift->parsed()) config.command = Command::Lift;
  if (tower->parsed()) config.command = Command::Tower;
  if (crt->parsed()) config.command = Command::CrtCheck;

  try {
    config.limits = cyclelift::Limits::from_environment();
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return cyclelift::cli::kExitUsage;
  }
  if (max_vertices) config.limits.max_vertices = *max_vertices;
  if ((lift->parsed() || crt->parsed()) && !config.random_trials && config.poly.empty()) {
    std::cerr << "usage: --poly is required\n";
    return cyclelift::cli::kExitUsage;
  }
  return cyclelift::cli::run(config, std::cout, std::cerr);
}
