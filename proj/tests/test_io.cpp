#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "test_support.hpp"
#include "wilsoncg/config.hpp"
#include "wilsoncg/field_io.hpp"
#include "wilsoncg/generate.hpp"
#include "wilsoncg/trace_io.hpp"

using namespace wilsoncg;
using namespace wilsoncg::test;

namespace {

std::vector<char> slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void dump(const std::filesystem::path& p, const std::vector<char>& bytes) {
  std::ofstream(p, std::ios::binary | std::ios::trunc).write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

std::uint32_t header_word(const std::vector<char>& bytes, std::size_t offset) {
  std::uint32_t v = 0;
  for (std::size_t k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[offset + k])) << (8 * k);
  return v;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

const LatticeGeometry k44({4, 4, 4, 4});

}  // namespace

TEST_CASE("gauge files round trip bitwise") {
  const auto gauge = generate_gauge(k44, 77);
  const auto path = temp_path("gauge.bin");
  write_gauge(path, gauge);
  CHECK(std::filesystem::file_size(path) == kFieldHeaderBytes + 256 * 4 * 9 * 16);
  const auto back = read_gauge(path);
  CHECK(back.geometry() == k44);
  CHECK(std::memcmp(back.links().data(), gauge.links().data(), gauge.links().size_bytes()) == 0);
  CHECK_NOTHROW(read_gauge(path, k44));
  CHECK_THROWS_AS(read_gauge(path, LatticeGeometry({4, 4, 4, 2})), HeaderMismatchError);
}

TEST_CASE("gauge header layout") {
  const auto path = temp_path("gauge_header.bin");
  write_gauge(path, GaugeField<double>(LatticeGeometry({2, 3, 4, 5})));
  const auto bytes = slurp(path);
  CHECK(std::string(bytes.data(), 4) == "WQCD");
  CHECK(header_word(bytes, 4) == 1);
  CHECK(header_word(bytes, 8) == 2);
  CHECK(header_word(bytes, 12) == 3);
  CHECK(header_word(bytes, 16) == 4);
  CHECK(header_word(bytes, 20) == 5);
  CHECK(header_word(bytes, 24) == 64);
  CHECK(header_word(bytes, 28) == 1);
}

TEST_CASE("spinor files round trip bitwise in both precisions") {
  const auto psi = random_spinor(k44, 78);
  const auto path = temp_path("spinor.bin");
  write_spinor(path, psi);
  CHECK(read_spinor<double>(path) == psi);
  CHECK_THROWS_AS(read_spinor<float>(path), HeaderMismatchError);
  CHECK_THROWS_AS(read_gauge(path), HeaderMismatchError);

  const auto low = precision_cast<float>(psi);
  const auto low_path = temp_path("spinor32.bin");
  write_spinor(low_path, low);
  CHECK(read_spinor<float>(low_path, k44) == low);
  CHECK(header_word(slurp(low_path), 24) == 32);
  CHECK(std::filesystem::file_size(low_path) == kFieldHeaderBytes + 256 * 12 * 8);
}

TEST_CASE("corrupted magic is rejected") {
  for (bool gauge_file : {true, false}) {
    const auto path = temp_path("magic.bin");
    if (gauge_file) {
      write_gauge(path, GaugeField<double>(k44));
    } else {
      write_spinor(path, SpinorField<double>(k44));
    }
    auto bytes = slurp(path);
    bytes[1] = 'X';
    dump(path, bytes);
    if (gauge_file) {
      CHECK_THROWS_AS(read_gauge(path), BadMagicError);
    } else {
      CHECK_THROWS_AS(read_spinor<double>(path), BadMagicError);
    }
  }
}

TEST_CASE("truncated payload reports expected and actual sizes") {
  for (bool gauge_file : {true, false}) {
    const auto path = temp_path("trunc.bin");
    if (gauge_file) {
      write_gauge(path, generate_gauge(k44, 1));
    } else {
      write_spinor(path, random_spinor(k44, 1));
    }
    auto bytes = slurp(path);
    const std::size_t full = bytes.size();
    bytes.resize(full - 100);
    dump(path, bytes);
    try {
      if (gauge_file) {
        (void)read_gauge(path);
      } else {
        (void)read_spinor<double>(path);
      }
      FAIL("expected a truncation error");
    } catch (const TruncatedFileError& e) {
      CHECK(e.expected() == full);
      CHECK(e.actual() == full - 100);
    }
  }
}

TEST_CASE("header problems are rejected") {
  const auto path = temp_path("header.bin");
  write_spinor(path, random_spinor(k44, 2));
  const auto good = slurp(path);

  auto bad = good;
  bad[4] = 9;  // version
  dump(path, bad);
  CHECK_THROWS_AS(read_spinor<double>(path), HeaderMismatchError);

  bad = good;
  bad[8] = 1;  // Lx = 1
  dump(path, bad);
  CHECK_THROWS_AS(read_spinor<double>(path), FieldIoError);

  bad = good;
  bad.push_back(0);  // trailing byte
  dump(path, bad);
  CHECK_THROWS_AS(read_spinor<double>(path), HeaderMismatchError);

  bad.assign(good.begin(), good.begin() + 10);  // header cut short
  dump(path, bad);
  CHECK_THROWS_AS(read_spinor<double>(path), FieldIoError);

  CHECK_THROWS_AS(read_gauge(temp_path("does_not_exist.bin")), FileAccessError);
  CHECK_THROWS_AS(write_gauge("/nonexistent-dir/x.bin", GaugeField<double>(k44)), FileAccessError);
}

TEST_CASE("generated gauge fields are deterministic and unitary") {
  const auto a = generate_gauge(k44, 5);
  const auto b = generate_gauge(k44, 5);
  const auto c = generate_gauge(k44, 6);
  CHECK(std::memcmp(a.links().data(), b.links().data(), a.links().size_bytes()) == 0);
  CHECK(std::memcmp(a.links().data(), c.links().data(), a.links().size_bytes()) != 0);
  double worst = 0.0;
  for (const auto& u : a.links()) worst = std::max(worst, unitarity_deviation(u));
  CHECK(worst <= 10 * std::numeric_limits<double>::epsilon());
}

TEST_CASE("config parsing") {
  const auto c = parse_config("kappa = 0.12\nlattice = 4 4 4 4\n# comment\nmax_inner = auto  # trailing\n");
  CHECK(c.kappa == 0.12);
  CHECK(c.lattice == Coords{4, 4, 4, 4});
  CHECK(c.solver == SolverConfig{});
  CHECK(c.precision_low == InnerPrecision::low);

  CHECK_THROWS_WITH_AS(parse_config("kappa = 0.3\nlattice = 4 4 4 4\n"), doctest::Contains("out of range"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(""), doctest::Contains("lattice, kappa"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa = 0.1\nkappa = 0.1\nlattice = 4 4 4 4"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa = 0.1\nlattice = 4 4 4 4\ncolour = red"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa = 0.1\nlattice = 4 4 4"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa = 0.1\nlattice = 4 4 4 1"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa = abc\nlattice = 4 4 4 4"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa = 0.1\nlattice = 4 4 4 4\ntol_outer = 0"), ConfigError);
  CHECK_THROWS_AS(parse_config("kappa 0.1"), ConfigError);

  const auto p = parse_config("kappa = 0.1\nlattice = 4 4 4 4\nchannels = 4\nprecision_low = double\n");
  CHECK(p.input_channels == 4);
  CHECK(p.output_channels == 1);
  CHECK(p.precision_low == InnerPrecision::high);
}

TEST_CASE("config render then parse round trips") {
  RunConfig c;
  c.lattice = {6, 4, 4, 8};
  c.kappa = 0.1234567890123;
  c.antiperiodic_t = true;
  c.precision_low = InnerPrecision::high;
  c.solver = {3.3e-11, 0.05, 7, 123};
  c.gauge_path = "g.bin";
  c.source_path = "dir/s.bin";
  c.output_path = "x.bin";
  c.seed = 18446744073709551615ull;
  c.ii = 2;
  c.latency = 99;
  c.kernels = 3;
  c.input_channels = 5;
  c.output_channels = 2;
  c.freq_mhz = 312.5;
  CHECK(parse_config(render_config(c)) == c);

  RunConfig minimal;
  minimal.lattice = {4, 4, 4, 4};
  minimal.kappa = 0.12;
  CHECK(parse_config(render_config(minimal)) == minimal);
  CHECK(render_config(parse_config(render_config(minimal))) == render_config(minimal));
}

TEST_CASE("trace rendering") {
  PipelineSpec spec;
  Trace t;
  CHECK(lines_of(render_trace(t, spec)).size() == 1);
  CHECK(render_trace(t, spec).rfind("# total_cycles=0 ii=1 latency=142 kernels=1", 0) == 0);

  t.events.push_back({"kernel0", 0, 142, EventKind::compute});
  t.total_cycles = 142;
  auto lines = lines_of(render_trace(t, spec));
  REQUIRE(lines.size() == 2);
  CHECK(lines[1] == "kernel0,compute,0,142");

  t.events.push_back({"HBM3", 142, 150, EventKind::output_transfer});
  t.events.push_back({"HBM0", 5, 9, EventKind::input_transfer});
  t.events.push_back({"HBM0", 0, 4, EventKind::input_transfer});
  lines = lines_of(render_trace(t, spec));
  REQUIRE(lines.size() == 5);
  CHECK(lines[1] == "HBM0,input_transfer,0,4");
  CHECK(lines[2] == "HBM0,input_transfer,5,9");
  CHECK(lines[3] == "HBM3,output_transfer,142,150");
  CHECK(lines[4] == "kernel0,compute,0,142");

  CHECK_THROWS_AS(write_trace(t, spec, "/nonexistent-dir/t.csv"), FileAccessError);
}
