#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "json.hpp"
#include "test_support.hpp"
#include "wilsoncg/field_io.hpp"
#include "wilsoncg/generate.hpp"
#include "wilsoncg/wilson.hpp"

using namespace wilsoncg;
using namespace wilsoncg::cli;
using namespace wilsoncg::test;

namespace {

std::filesystem::path write_config(const std::string& text) {
  const auto path = temp_path("run.cfg");
  std::ofstream(path) << text;
  return path;
}

int run_binary(const std::string& args) {
  const std::string command = std::string(WILSONCG_BINARY) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(command.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int count_lines_starting(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  int n = 0;
  for (std::string line; std::getline(in, line);) n += line.rfind(prefix, 0) == 0 ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("solve recovers a constructed solution") {
  const LatticeGeometry g({4, 4, 4, 4});
  const auto gauge = generate_gauge(g, 3);
  const WilsonParams params{0.12, false};
  const auto x_known = random_spinor(g, 4);
  const auto gauge_path = temp_path("g.bin");
  const auto source_path = temp_path("b.bin");
  const auto output_path = temp_path("x.bin");
  write_gauge(gauge_path, gauge);
  write_spinor(source_path, apply_wilson(gauge, x_known, params));

  for (const char* precision : {"single", "double"}) {
    const auto cfg = write_config("lattice = 4 4 4 4\nkappa = 0.12\nprecision_low = " + std::string(precision) +
                                  "\ngauge = " + gauge_path.string() + "\nsource = " + source_path.string() +
                                  "\noutput = " + output_path.string() + "\n");
    std::ostringstream out;
    CHECK(cmd_solve(cfg, out) == kOk);
    const auto x = read_spinor<double>(output_path, g);
    CHECK(relative_difference(x, x_known) <= 1e-8);

    std::ifstream report_file(output_path.string() + ".report.json");
    const auto report = nlohmann::json::parse(report_file);
    CHECK(report["converged"] == true);
    CHECK(report["final_relative_residual"].get<double>() <= 1e-10);
    CHECK(report["solver"] == (std::string(precision) == "single" ? "mixed" : "cgnr"));
    CHECK(report["residual_history"].size() >= 2);
  }
}

TEST_CASE("solve exit codes for failures") {
  const LatticeGeometry g({4, 4, 4, 4});
  const auto source_path = temp_path("b.bin");
  write_spinor(source_path, point_source(g));
  const auto gauge_path = temp_path("g.bin");
  write_gauge(gauge_path, generate_gauge(g, 1));
  const auto output_path = temp_path("x.bin");
  std::ostringstream out;

  const auto missing = write_config("lattice = 4 4 4 4\nkappa = 0.12\ngauge = " + temp_path("nope.bin").string() +
                                    "\nsource = " + source_path.string() + "\noutput = " + output_path.string());
  CHECK(cmd_solve(missing, out) == kIoError);

  const auto unreachable =
      write_config("lattice = 4 4 4 4\nkappa = 0.12\nmax_outer = 1\ntol_outer = 1e-30\ngauge = " + gauge_path.string() +
                   "\nsource = " + source_path.string() + "\noutput = " + output_path.string());
  CHECK(cmd_solve(unreachable, out) == kNotConverged);
  CHECK(std::filesystem::exists(output_path.string() + ".report.json"));

  CHECK(cmd_solve(write_config("lattice = 4 4 4 4\n"), out) == kConfigError);
  CHECK(cmd_solve(temp_path("absent.cfg"), out) == kConfigError);

  const auto wrong_dims = write_config("lattice = 4 4 4 8\nkappa = 0.12\ngauge = " + gauge_path.string() +
                                       "\nsource = " + source_path.string() + "\noutput = " + output_path.string());
  CHECK(cmd_solve(wrong_dims, out) == kIoError);
}

TEST_CASE("trace writes the expected events") {
  const auto trace_path = temp_path("trace.csv");
  std::ostringstream out;
  CHECK(cmd_trace(write_config("lattice = 4 4 4 4\nkappa = 0.1\n"), trace_path, std::nullopt, out) == kOk);
  std::ifstream in(trace_path);
  std::stringstream text;
  text << in.rdbuf();
  CHECK(text.str().rfind("# total_cycles=397 ", 0) == 0);
  CHECK(count_lines_starting(text.str(), "HBM") == 4);
  CHECK(count_lines_starting(text.str(), "kernel") == 1);
  CHECK(text.str().find("HBM3,output_transfer,142,397") != std::string::npos);

  CHECK(cmd_trace(write_config("lattice = 4 4 4 4\nkappa = 0.1\nkernels = 3\nii = 2\n"), trace_path, std::nullopt,
                  out) == kOk);
  std::ifstream in3(trace_path);
  std::stringstream text3;
  text3 << in3.rdbuf();
  CHECK(count_lines_starting(text3.str(), "kernel") == 3);

  CHECK(cmd_trace(write_config("lattice = 4 4 4 4\nkappa = 0.1\n"), trace_path, std::int64_t{1}, out) == kOk);
  std::ifstream in1(trace_path);
  std::string header;
  std::getline(in1, header);
  CHECK(header.rfind("# total_cycles=142 ", 0) == 0);
}

TEST_CASE("verify passes on a generated field and flags a corrupted link") {
  std::ostringstream out;
  CHECK(cmd_verify(write_config("lattice = 4 4 4 4\nkappa = 0.12\nseed = 9\n"), out) == kOk);
  CHECK(count_lines_starting(out.str(), "FAIL") == 0);
  CHECK(out.str().find("PASS dense-oracle") != std::string::npos);  // 12 * 256 is within the guard

  const LatticeGeometry g({4, 4, 4, 4});
  auto gauge = generate_gauge(g, 9);
  gauge.link(17, 2)(0, 0) = {1.5, 0.0};
  const auto gauge_path = temp_path("bad.bin");
  write_gauge(gauge_path, gauge);
  std::ostringstream bad;
  CHECK(cmd_verify(write_config("lattice = 4 4 4 4\nkappa = 0.12\ngauge = " + gauge_path.string() + "\n"), bad) ==
        kCheckFailed);
  CHECK(bad.str().find("FAIL unitarity") != std::string::npos);
  CHECK(bad.str().find("PASS gamma5-hermiticity") != std::string::npos);
}

TEST_CASE("verify includes the dense oracle on 2^4 and skips it on 8^4") {
  std::ostringstream small;
  CHECK(cmd_verify(write_config("lattice = 2 2 2 2\nkappa = 0.12\n"), small) == kOk);
  CHECK(small.str().find("PASS dense-oracle") != std::string::npos);
  CHECK(small.str().find("SKIP stream-vs-reference") != std::string::npos);

  std::ostringstream large;
  CHECK(cmd_verify(write_config("lattice = 8 8 8 8\nkappa = 0.12\n"), large) == kOk);
  CHECK(large.str().find("SKIP dense-oracle") != std::string::npos);
  CHECK(large.str().find("PASS stream-vs-reference") != std::string::npos);
  CHECK(large.str().find("PASS single-load") != std::string::npos);
}

TEST_CASE("bench prints the three rows") {
  std::ostringstream out;
  CHECK(cmd_bench(write_config("lattice = 4 4 4 4\nkappa = 0.12\nkernels = 3\nii = 2\n"), 2, out) == kOk);
  const auto text = out.str();
  CHECK(count_lines_starting(text, "measured-reference") == 1);
  CHECK(count_lines_starting(text, "measured-stream") == 1);
  CHECK(count_lines_starting(text, "modeled") == 1);
  CHECK(text.find(std::to_string(1368ull * 256 * 2)) != std::string::npos);
  CHECK(text.find("615.600") != std::string::npos);

  std::ostringstream refused;
  CHECK(cmd_bench(write_config("lattice = 2 2 2 2\nkappa = 0.12\n"), 1, refused) == kInvalidInput);
}

TEST_CASE("gen writes deterministic files") {
  const auto a = temp_path("a.bin");
  const auto b = temp_path("b.bin");
  std::ostringstream out;
  CHECK(cmd_gen({4, 4, 4, 2}, 7, a, GenKind::gauge, out) == kOk);
  CHECK(cmd_gen({4, 4, 4, 2}, 7, b, GenKind::gauge, out) == kOk);
  const auto ga = read_gauge(a);
  const auto gb = read_gauge(b);
  CHECK(std::memcmp(ga.links().data(), gb.links().data(), ga.links().size_bytes()) == 0);

  CHECK(cmd_gen({4, 4, 4, 2}, 7, a, GenKind::point_source, out) == kOk);
  CHECK(norm(read_spinor<double>(a)) == 1.0);
  CHECK(cmd_gen({4, 4, 4, 1}, 7, a, GenKind::gauge, out) == kInvalidInput);
}

TEST_CASE("binary exit codes") {
  CHECK(run_binary("--help") == kOk);
  CHECK(run_binary("") == kUsage);
  CHECK(run_binary("solve") == kUsage);
  CHECK(run_binary("frobnicate") == kUsage);
  CHECK(run_binary("gen --lattice \"4 4 4\" --out " + temp_path("x.bin").string()) == kUsage);
  CHECK(run_binary("gen --lattice \"2 2 2 2\" --out " + temp_path("x.bin").string()) == kOk);
  CHECK(run_binary("verify --config " + temp_path("absent.cfg").string()) == kConfigError);
}
