#pragma once

#include <filesystem>
#include <string>

#include "wilsoncg/pipeline.hpp"

namespace wilsoncg {

// Comma-separated timeline. One header line
//   # total_cycles=<n> ii=<n> latency=<n> kernels=<n> input_channels=<n> output_channels=<n> frequency_hz=<f> columns=channel_id,kind,start_cycle,end_cycle
// followed by one row per event, sorted by (channel_id, start_cycle).
std::string render_trace(const Trace& trace, const PipelineSpec& spec);

// Throws FileAccessError when the path cannot be written.
void write_trace(const Trace& trace, const PipelineSpec& spec, const std::filesystem::path& path);

}  // namespace wilsoncg
