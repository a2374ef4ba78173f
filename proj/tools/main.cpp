#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

wilsoncg::Coords parse_dims(const std::string& text) {
  std::istringstream in(text);
  wilsoncg::Coords dims{};
  for (auto& d : dims) {
    if (!(in >> d)) throw CLI::ValidationError("--lattice", "expected four integers, e.g. \"4 4 4 4\"");
  }
  std::string extra;
  if (in >> extra) throw CLI::ValidationError("--lattice", "expected exactly four integers");
  return dims;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace wilsoncg::cli;

  CLI::App app{"Mixed-precision CG for the Wilson-Dirac operator, with a streaming operator and pipeline cost model"};
  app.require_subcommand(1);

  std::string config;
  std::string out_path;

  auto* solve = app.add_subcommand("solve", "Solve D x = b from an input script");
  solve->add_option("--config", config, "Input script")->required();

  int sweeps = 10;
  auto* bench = app.add_subcommand("bench", "Time reference and streaming operators, print modeled throughput");
  bench->add_option("--config", config, "Input script")->required();
  bench->add_option("--sweeps", sweeps, "Operator applications per timing")->check(CLI::PositiveNumber);

  std::int64_t sites = 0;
  auto* trace = app.add_subcommand("trace", "Simulate the pipeline timeline and write it as CSV");
  trace->add_option("--config", config, "Input script")->required();
  trace->add_option("--out", out_path, "Trace file")->required();
  auto* sites_opt = trace->add_option("--sites", sites, "Override the site count (default: lattice volume)")
                        ->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify", "Run the operator and gauge-field consistency checks");
  verify->add_option("--config", config, "Input script")->required();

  std::string lattice;
  std::uint64_t seed = 1;
  std::string kind = "gauge";
  auto* gen = app.add_subcommand("gen", "Generate a gauge field or source file");
  gen->add_option("--lattice", lattice, "Dimensions \"Lx Ly Lz Lt\"")->required();
  gen->add_option("--seed", seed, "Random seed");
  gen->add_option("--out", out_path, "Output file")->required();
  gen->add_option("--kind", kind, "gauge, point-source or random-source")
      ->check(CLI::IsMember({"gauge", "point-source", "random-source"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (*solve) return cmd_solve(config, std::cout);
  if (*bench) return cmd_bench(config, sweeps, std::cout);
  if (*trace) {
    return cmd_trace(config, out_path, sites_opt->count() > 0 ? std::optional<std::int64_t>(sites) : std::nullopt,
                     std::cout);
  }
  if (*verify) return cmd_verify(config, std::cout);
  if (*gen) {
    wilsoncg::Coords dims{};
    try {
      dims = parse_dims(lattice);
    } catch (const CLI::ParseError& e) {
      return app.exit(e) == 0 ? kOk : kUsage;
    }
    const GenKind k = kind == "gauge"          ? GenKind::gauge
                      : kind == "point-source" ? GenKind::point_source
                                               : GenKind::random_source;
    return cmd_gen(dims, seed, out_path, k, std::cout);
  }
  return kUsage;
}
