#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wilsoncg/lattice.hpp"

namespace wilsoncg {

// Cost parameters of the pipelined stencil hardware. Defaults are the
// double-precision single-kernel design: II 1, latency 142, three input
// memory channels and one output channel at 300 MHz.
struct PipelineSpec {
  int initiation_interval = 1;
  int latency = 142;
  int kernels = 1;
  int input_channels = 3;
  int output_channels = 1;
  double frequency_hz = 300e6;

  void validate() const;
};

enum class EventKind { input_transfer, compute, output_transfer };

std::string_view to_string(EventKind kind);

struct TraceEvent {
  std::string channel_id;
  std::int64_t start_cycle = 0;
  std::int64_t end_cycle = 0;
  EventKind kind = EventKind::compute;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

struct Trace {
  std::vector<TraceEvent> events;
  std::int64_t total_cycles = 0;
};

// Stall-free, fully pipelined timeline. Sites are dealt to kernels in
// contiguous shares of ceil/floor(sites / kernels); a kernel with n sites is
// busy for latency + II*(n - 1) cycles. Input channels stream from cycle 0
// until the last stencil's inputs are accepted; output channels start with
// the first result at `latency` and finish with the last.
Trace simulate_trace(std::int64_t sites, const PipelineSpec& spec);
Trace simulate_trace(const LatticeGeometry& geom, const PipelineSpec& spec);

// Steady-state GFLOP/s: flops_per_site * kernels * frequency / II.
double model_throughput(std::int64_t flops_per_site, const PipelineSpec& spec);

}  // namespace wilsoncg
