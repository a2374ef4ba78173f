#include "wilsoncg/config.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace wilsoncg {

PipelineSpec RunConfig::pipeline() const {
  PipelineSpec spec;
  spec.initiation_interval = ii;
  spec.latency = latency;
  spec.kernels = kernels;
  spec.input_channels = input_channels;
  spec.output_channels = output_channels;
  spec.frequency_hz = freq_mhz * 1e6;
  return spec;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t", start);
    if (end == std::string_view::npos) end = s.size();
    words.push_back(s.substr(start, end - start));
    pos = end;
  }
  return words;
}

class LineContext {
 public:
  LineContext(int line, std::string_view key) : line_(line), key_(key) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw ConfigError("line " + std::to_string(line_) + ": key '" + key_ + "': " + what);
  }

  template <typename T>
  T number(std::string_view word) const {
    T value{};
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc{} || ptr != word.data() + word.size()) fail("malformed number '" + std::string(word) + "'");
    if constexpr (std::is_floating_point_v<T>) {
      if (!std::isfinite(value)) fail("value must be finite");
    }
    return value;
  }

  template <typename T>
  T single(std::string_view value) const {
    const auto words = split_words(value);
    if (words.size() != 1) fail("expected one value, got '" + std::string(value) + "'");
    return number<T>(words.front());
  }

  int at_least_one(std::string_view value) const {
    const int v = single<int>(value);
    if (v < 1) fail("value " + std::to_string(v) + " must be >= 1");
    return v;
  }

  double open_unit(std::string_view value) const {
    const double v = single<double>(value);
    if (!(v > 0.0 && v < 1.0)) fail("value " + std::string(value) + " out of range (0, 1)");
    return v;
  }

 private:
  int line_;
  std::string key_;
};

using Setter = std::function<void(RunConfig&, std::string_view, const LineContext&)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table{
      {"lattice",
       [](RunConfig& c, std::string_view v, const LineContext& ctx) {
         const auto words = split_words(v);
         if (words.size() != 4) ctx.fail("expected four dimensions, got '" + std::string(v) + "'");
         for (std::size_t mu = 0; mu < 4; ++mu) {
           c.lattice[mu] = ctx.number<int>(words[mu]);
           if (c.lattice[mu] < 2) ctx.fail("dimension " + std::to_string(c.lattice[mu]) + " must be >= 2");
         }
       }},
      {"kappa",
       [](RunConfig& c, std::string_view v, const LineContext& ctx) {
         c.kappa = ctx.single<double>(v);
         if (!(c.kappa > 0.0 && c.kappa < 0.25)) ctx.fail("value " + std::string(v) + " out of range (0, 0.25)");
       }},
      {"antiperiodic_t",
       [](RunConfig& c, std::string_view v, const LineContext& ctx) {
         if (v == "true" || v == "1") {
           c.antiperiodic_t = true;
         } else if (v == "false" || v == "0") {
           c.antiperiodic_t = false;
         } else {
           ctx.fail("expected true or false, got '" + std::string(v) + "'");
         }
       }},
      {"tol_outer", [](RunConfig& c, std::string_view v, const LineContext& ctx) { c.solver.tol_outer = ctx.open_unit(v); }},
      {"tol_inner", [](RunConfig& c, std::string_view v, const LineContext& ctx) { c.solver.tol_inner = ctx.open_unit(v); }},
      {"max_outer", [](RunConfig& c, std::string_view v, const LineContext& ctx) { c.solver.max_outer = ctx.at_least_one(v); }},
      {"max_inner",
       [](RunConfig& c, std::string_view v, const LineContext& ctx) {
         c.solver.max_inner = v == "auto" ? 0 : ctx.at_least_one(v);
       }},
      {"gauge", [](RunConfig& c, std::string_view v, const LineContext&) { c.gauge_path = std::string(v); }},
      {"source", [](RunConfig& c, std::string_view v, const LineContext&) { c.source_path = std::string(v); }},
      {"output", [](RunConfig& c, std::string_view v, const LineContext&) { c.output_path = std::string(v); }},
      {"seed", [](RunConfig& c, std::string_view v, const LineContext& ctx) { c.seed = ctx.single<std::uint64_t>(v); }},
      {"precision_low",
       [](RunConfig& c, std::string_view v, const LineContext& ctx) {
         if (v == "single" || v == "low" || v == "float") {
           c.precision_low = InnerPrecision::low;
         } else if (v == "double" || v == "high") {
           c.precision_low = InnerPrecision::high;
         } else {
           ctx.fail("expected single or double, got '" + std::string(v) + "'");
         }
       }},
      {"ii", [](RunConfig& c, std::string_view v, const LineContext& ctx) { c.ii = ctx.at_least_one(v); }},
      {"latency", [](RunConfig& c, std::string_view v, const LineContext& ctx) { c.latency = ctx.at_least_one(v); }},
      {"kernels", [](RunConfig& c, std::string_view v, const LineContext& ctx) { c.kernels = ctx.at_least_one(v); }},
      {"channels",
       [](RunConfig& c, std::string_view v, const LineContext& ctx) {
         const auto words = split_words(v);
         if (words.empty() || words.size() > 2) ctx.fail("expected '<input> [<output>]', got '" + std::string(v) + "'");
         c.input_channels = ctx.number<int>(words[0]);
         c.output_channels = words.size() == 2 ? ctx.number<int>(words[1]) : 1;
         if (c.input_channels < 1 || c.output_channels < 1) ctx.fail("channel counts must be >= 1");
       }},
      {"freq_mhz",
       [](RunConfig& c, std::string_view v, const LineContext& ctx) {
         c.freq_mhz = ctx.single<double>(v);
         if (!(c.freq_mhz > 0.0)) ctx.fail("frequency must be positive");
       }},
  };
  return table;
}

constexpr std::array<std::string_view, 2> kRequired{"lattice", "kappa"};

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

RunConfig parse_config(std::string_view text) {
  RunConfig config;
  std::set<std::string, std::less<>> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value', got '" + std::string(line) + "'");
    }
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));
    const LineContext ctx(line_no, key);

    const auto& table = setters();
    const auto it = table.find(key);
    if (it == table.end()) ctx.fail("unknown key");
    if (value.empty()) ctx.fail("missing value");
    if (!seen.insert(std::string(key)).second) ctx.fail("duplicate key");
    it->second(config, value, ctx);
  }

  std::string missing;
  for (const auto key : kRequired) {
    if (!seen.contains(key)) missing += (missing.empty() ? "" : ", ") + std::string(key);
  }
  if (!missing.empty()) throw ConfigError("missing required keys: " + missing);
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string render_config(const RunConfig& c) {
  std::ostringstream os;
  os << "lattice = " << c.lattice[0] << ' ' << c.lattice[1] << ' ' << c.lattice[2] << ' ' << c.lattice[3] << '\n';
  os << "kappa = " << format_double(c.kappa) << '\n';
  os << "antiperiodic_t = " << (c.antiperiodic_t ? "true" : "false") << '\n';
  os << "tol_outer = " << format_double(c.solver.tol_outer) << '\n';
  os << "tol_inner = " << format_double(c.solver.tol_inner) << '\n';
  os << "max_outer = " << c.solver.max_outer << '\n';
  os << "max_inner = ";
  if (c.solver.max_inner == 0) {
    os << "auto\n";
  } else {
    os << c.solver.max_inner << '\n';
  }
  if (!c.gauge_path.empty()) os << "gauge = " << c.gauge_path << '\n';
  if (!c.source_path.empty()) os << "source = " << c.source_path << '\n';
  if (!c.output_path.empty()) os << "output = " << c.output_path << '\n';
  os << "seed = " << c.seed << '\n';
  os << "precision_low = " << (c.precision_low == InnerPrecision::low ? "single" : "double") << '\n';
  os << "ii = " << c.ii << '\n';
  os << "latency = " << c.latency << '\n';
  os << "kernels = " << c.kernels << '\n';
  os << "channels = " << c.input_channels << ' ' << c.output_channels << '\n';
  os << "freq_mhz = " << format_double(c.freq_mhz) << '\n';
  return os.str();
}

}  // namespace wilsoncg
