#include "wilsoncg/pipeline.hpp"

#include <algorithm>

#include "wilsoncg/errors.hpp"

namespace wilsoncg {

void PipelineSpec::validate() const {
  if (initiation_interval < 1) throw DomainError("initiation interval must be >= 1");
  if (latency < 1) throw DomainError("latency must be >= 1");
  if (kernels < 1) throw DomainError("kernel count must be >= 1");
  if (input_channels < 1 || output_channels < 1) throw DomainError("channel counts must be >= 1");
  if (!(frequency_hz > 0.0)) throw DomainError("frequency must be positive");
}

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::input_transfer: return "input_transfer";
    case EventKind::compute: return "compute";
    case EventKind::output_transfer: return "output_transfer";
  }
  return "unknown";
}

Trace simulate_trace(std::int64_t sites, const PipelineSpec& spec) {
  spec.validate();
  if (sites < 0) throw DomainError("site count must be non-negative");
  Trace trace;
  if (sites == 0) return trace;

  const std::int64_t ii = spec.initiation_interval;
  const std::int64_t latency = spec.latency;
  const std::int64_t kernels = spec.kernels;

  std::vector<std::int64_t> share(static_cast<std::size_t>(kernels), sites / kernels);
  for (std::int64_t k = 0; k < sites % kernels; ++k) ++share[static_cast<std::size_t>(k)];
  const std::int64_t longest = share.front();
  auto busy_until = [&](std::int64_t n) { return latency + ii * (n - 1); };

  trace.total_cycles = busy_until(longest);

  const std::int64_t last_accept = ii * (longest - 1) + 1;
  for (int c = 0; c < spec.input_channels; ++c) {
    trace.events.push_back({"HBM" + std::to_string(c), 0, last_accept, EventKind::input_transfer});
  }
  for (std::int64_t k = 0; k < kernels; ++k) {
    const std::int64_t n = share[static_cast<std::size_t>(k)];
    if (n == 0) continue;
    trace.events.push_back({"kernel" + std::to_string(k), 0, busy_until(n), EventKind::compute});
  }
  // Output channel j drains kernels j, j + out, j + 2*out, ...
  for (int j = 0; j < spec.output_channels; ++j) {
    std::int64_t n = 0;
    for (std::int64_t k = j; k < kernels; k += spec.output_channels) n = std::max(n, share[static_cast<std::size_t>(k)]);
    if (n == 0) continue;
    trace.events.push_back(
        {"HBM" + std::to_string(spec.input_channels + j), latency, busy_until(n), EventKind::output_transfer});
  }
  return trace;
}

Trace simulate_trace(const LatticeGeometry& geom, const PipelineSpec& spec) {
  return simulate_trace(static_cast<std::int64_t>(geom.volume()), spec);
}

double model_throughput(std::int64_t flops_per_site, const PipelineSpec& spec) {
  spec.validate();
  return static_cast<double>(flops_per_site) * spec.kernels * spec.frequency_hz / spec.initiation_interval / 1e9;
}

}  // namespace wilsoncg
