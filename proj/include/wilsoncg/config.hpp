#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "wilsoncg/lattice.hpp"
#include "wilsoncg/pipeline.hpp"
#include "wilsoncg/solver.hpp"
#include "wilsoncg/stencil.hpp"

namespace wilsoncg {

// Precision of the inner solves. `high` disables mixed precision.
enum class InnerPrecision { low, high };

// Parameters of one run, read from a flat `key = value` input script.
//
//   lattice        = Lx Ly Lz Lt         (required)
//   kappa          = <real in (0,0.25)>  (required)
//   antiperiodic_t = true | false        (false)
//   tol_outer      = <real in (0,1)>     (1e-10)
//   tol_inner      = <real in (0,1)>     (0.1)
//   max_outer      = <int >= 1>          (50)
//   max_inner      = <int >= 1> | auto   (auto: 10*sqrt(12*volume))
//   gauge, source, output = <path>
//   seed           = <u64>               (1)
//   precision_low  = single | double     (single; also low/float, high)
//   ii, latency, kernels = <int >= 1>    (1, 142, 1)
//   channels       = <in> [<out>]        (3 1)
//   freq_mhz       = <real > 0>          (300)
struct RunConfig {
  Coords lattice{};
  double kappa = 0.0;
  bool antiperiodic_t = false;
  InnerPrecision precision_low = InnerPrecision::low;
  SolverConfig solver;
  std::string gauge_path;
  std::string source_path;
  std::string output_path;
  std::uint64_t seed = 1;
  int ii = 1;
  int latency = 142;
  int kernels = 1;
  int input_channels = 3;
  int output_channels = 1;
  double freq_mhz = 300.0;

  LatticeGeometry geometry() const { return LatticeGeometry(lattice); }
  WilsonParams wilson() const { return {kappa, antiperiodic_t}; }
  PipelineSpec pipeline() const;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::filesystem::path& path);

// Canonical text form; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

}  // namespace wilsoncg
