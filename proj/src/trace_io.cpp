#include "wilsoncg/trace_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

#include "wilsoncg/field_io.hpp"

namespace wilsoncg {

std::string render_trace(const Trace& trace, const PipelineSpec& spec) {
  std::vector<TraceEvent> rows = trace.events;
  std::sort(rows.begin(), rows.end(), [](const TraceEvent& a, const TraceEvent& b) {
    return std::tie(a.channel_id, a.start_cycle) < std::tie(b.channel_id, b.start_cycle);
  });

  std::array<char, 64> freq{};
  const auto [end, ec] = std::to_chars(freq.data(), freq.data() + freq.size(), spec.frequency_hz);

  std::ostringstream os;
  os << "# total_cycles=" << trace.total_cycles << " ii=" << spec.initiation_interval << " latency=" << spec.latency
     << " kernels=" << spec.kernels << " input_channels=" << spec.input_channels
     << " output_channels=" << spec.output_channels << " frequency_hz=" << std::string_view(freq.data(), end)
     << " columns=channel_id,kind,start_cycle,end_cycle\n";
  for (const auto& e : rows) {
    os << e.channel_id << ',' << to_string(e.kind) << ',' << e.start_cycle << ',' << e.end_cycle << '\n';
  }
  return os.str();
}

void write_trace(const Trace& trace, const PipelineSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw FileAccessError("cannot open " + path.string() + " for writing");
  out << render_trace(trace, spec);
  if (!out) throw FileAccessError("write to " + path.string() + " failed");
}

}  // namespace wilsoncg
