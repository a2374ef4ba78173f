#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>

#include "json.hpp"
#include "wilsoncg/blas.hpp"
#include "wilsoncg/config.hpp"
#include "wilsoncg/dense.hpp"
#include "wilsoncg/field_io.hpp"
#include "wilsoncg/generate.hpp"
#include "wilsoncg/pipeline.hpp"
#include "wilsoncg/solver.hpp"
#include "wilsoncg/stream.hpp"
#include "wilsoncg/trace_io.hpp"
#include "wilsoncg/wilson.hpp"

namespace wilsoncg::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int guarded(std::ostream& out, const std::function<int()>& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    out << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const FieldIoError& e) {
    out << "io error: " << e.what() << '\n';
    return kIoError;
  } catch (const SolverError& e) {
    out << "solver error: " << e.what() << '\n';
    return kSolverError;
  } catch (const DomainError& e) {
    out << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const RefusalError& e) {
    out << "invalid input: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    out << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

GaugeField<double> gauge_for(const RunConfig& config) {
  if (!config.gauge_path.empty()) return read_gauge(config.gauge_path, config.geometry());
  return generate_gauge(config.geometry(), config.seed);
}

nlohmann::json report_json(const SolveReport& r, const std::string& solver, double wall_seconds) {
  return {
      {"solver", solver},
      {"converged", r.converged},
      {"iterations_total", r.iterations_total},
      {"iterations_low", r.iterations_low},
      {"iterations_high", r.iterations_high},
      {"final_relative_residual", r.final_relative_residual},
      {"residual_history", r.residual_history},
      {"wall_seconds", wall_seconds},
  };
}

}  // namespace

int cmd_solve(const std::filesystem::path& config_path, std::ostream& out) {
  return guarded(out, [&] {
    const RunConfig config = load_config(config_path);
    if (config.gauge_path.empty() || config.source_path.empty() || config.output_path.empty()) {
      throw ConfigError("solve needs the gauge, source and output keys");
    }
    const auto geom = config.geometry();
    const auto params = config.wilson();
    const auto gauge = read_gauge(config.gauge_path, geom);
    const auto source = read_spinor<double>(config.source_path, geom);

    const auto start = Clock::now();
    std::string solver;
    SolveResult<double> result{SpinorField<double>(geom), {}};
    if (config.precision_low == InnerPrecision::low) {
      solver = "mixed";
      result = mixed_cg(gauge, precision_cast<float>(gauge), source, params, config.solver);
    } else {
      solver = "cgnr";
      result = cgnr_solve(gauge, source, params, config.solver);
    }
    const double wall = seconds_since(start);

    write_spinor(config.output_path, result.x);
    const auto report = report_json(result.report, solver, wall);
    const std::filesystem::path report_path = config.output_path + ".report.json";
    std::ofstream(report_path) << report.dump(2) << '\n';

    const auto& r = result.report;
    out << "solver           " << solver << '\n'
        << "lattice          " << geom.to_string() << "  kappa " << params.kappa << '\n'
        << "converged        " << (r.converged ? "yes" : "no") << '\n'
        << "iterations       " << r.iterations_total << " (low " << r.iterations_low << ", high "
        << r.iterations_high << ")\n"
        << "final residual   " << std::scientific << std::setprecision(3) << r.final_relative_residual << '\n'
        << "wall time        " << std::fixed << std::setprecision(3) << wall << " s\n"
        << "solution         " << config.output_path << '\n'
        << "report           " << report_path.string() << '\n';
    return r.converged ? kOk : kNotConverged;
  });
}

int cmd_bench(const std::filesystem::path& config_path, int sweeps, std::ostream& out) {
  return guarded(out, [&] {
    if (sweeps < 1) throw DomainError("sweeps must be >= 1");
    const RunConfig config = load_config(config_path);
    const auto geom = config.geometry();
    const auto params = config.wilson();
    const auto spec = config.pipeline();
    const auto gauge = gauge_for(config);
    const auto psi = random_spinor(geom, config.seed + 1);
    const auto flops = count_flops(geom);
    const std::uint64_t total = flops.flops_total * static_cast<std::uint64_t>(sweeps);

    auto time_sweeps = [&](auto&& apply) {
      const auto start = Clock::now();
      for (int i = 0; i < sweeps; ++i) apply();
      return seconds_since(start);
    };
    const double t_ref = time_sweeps([&] { (void)apply_wilson(gauge, psi, params); });
    const double t_stream = time_sweeps([&] { (void)stream_apply(gauge, psi, params); });
    const double modeled = model_throughput(static_cast<std::int64_t>(flops.flops_per_site), spec);

    out << "lattice " << geom.to_string() << ", flops/site " << flops.flops_per_site << ", sweeps " << sweeps
        << ", double precision\n";
    out << "pipeline: ii " << spec.initiation_interval << ", latency " << spec.latency << ", kernels "
        << spec.kernels << ", " << spec.frequency_hz / 1e6 << " MHz\n";
    out << std::left << std::setw(20) << "row" << std::setw(16) << "flops_total" << std::setw(12) << "seconds"
        << "gflops\n";
    auto row = [&](const char* name, double seconds) {
      out << std::left << std::setw(20) << name << std::setw(16) << total << std::setw(12) << std::fixed
          << std::setprecision(4) << seconds << std::setprecision(3) << static_cast<double>(total) / seconds / 1e9
          << '\n';
    };
    row("measured-reference", t_ref);
    row("measured-stream", t_stream);
    out << std::left << std::setw(20) << "modeled" << std::setw(16) << "-" << std::setw(12) << "-" << std::fixed
        << std::setprecision(3) << modeled << '\n';
    return kOk;
  });
}

int cmd_trace(const std::filesystem::path& config_path, const std::filesystem::path& out_path,
              std::optional<std::int64_t> sites, std::ostream& out) {
  return guarded(out, [&] {
    const RunConfig config = load_config(config_path);
    const auto spec = config.pipeline();
    const std::int64_t n = sites ? *sites : static_cast<std::int64_t>(config.geometry().volume());
    const Trace trace = simulate_trace(n, spec);
    write_trace(trace, spec, out_path);
    out << "sites " << n << ", events " << trace.events.size() << ", total_cycles " << trace.total_cycles
        << ", trace " << out_path.string() << '\n';
    return kOk;
  });
}

int cmd_verify(const std::filesystem::path& config_path, std::ostream& out) {
  return guarded(out, [&] {
    const RunConfig config = load_config(config_path);
    const auto geom = config.geometry();
    const auto params = config.wilson();
    const auto gauge = gauge_for(config);
    const double eps = std::numeric_limits<double>::epsilon();
    bool all_pass = true;

    auto report = [&](const std::string& name, bool pass, const std::string& detail) {
      out << (pass ? "PASS " : "FAIL ") << std::left << std::setw(22) << name << detail << '\n';
      all_pass = all_pass && pass;
    };
    auto skip = [&](const std::string& name, const std::string& why) {
      out << "SKIP " << std::left << std::setw(22) << name << why << '\n';
    };
    auto sci = [](double v) {
      std::ostringstream os;
      os << std::scientific << std::setprecision(2) << v;
      return os.str();
    };

    {
      double worst_unitary = 0.0;
      double worst_det = 0.0;
      for (const auto& u : gauge.links()) {
        worst_unitary = std::max(worst_unitary, unitarity_deviation(u));
        worst_det = std::max(worst_det, determinant_deviation(u));
      }
      report("unitarity", worst_unitary <= 10 * eps && worst_det <= 100 * eps,
             "max |U^dag U - 1| " + sci(worst_unitary) + ", max |det U - 1| " + sci(worst_det));
    }

    const auto psi = random_spinor(geom, config.seed + 1);
    {
      const auto lhs = gamma5(apply_wilson(gauge, gamma5(psi), params));
      const auto rhs = apply_wilson_dagger(gauge, psi, params);
      const double rel = norm(difference(lhs, rhs)) / norm(rhs);
      report("gamma5-hermiticity", rel <= 1e-12, "relative deviation " + sci(rel));
    }

    {
      const GaugeField<double> unit(geom);
      SpinorField<double> constant(geom);
      for (auto& s : constant.sites())
        for (std::size_t k = 0; k < kSpinorComponents; ++k) s.c[k] = {0.5 + 0.1 * static_cast<double>(k), -0.25};
      const auto out_field = apply_wilson(unit, constant, WilsonParams{0.125, false});
      double max_out = 0.0;
      for (const auto& s : out_field.sites())
        for (const auto& z : s.c) max_out = std::max({max_out, std::abs(z.re), std::abs(z.im)});
      const double bound = 10 * eps * norm(constant);
      report("free-field", max_out <= bound, "max |D psi| " + sci(max_out) + " at kappa 1/8");
    }

    if (std::all_of(geom.dims().begin(), geom.dims().end(), [](int d) { return d >= 4; })) {
      const auto streamed = stream_apply(gauge, psi, params);
      const auto reference = apply_wilson(gauge, psi, params);
      report("stream-vs-reference", streamed.field == reference,
             streamed.field == reference ? "bitwise identical" : "differs");
      const std::size_t expected = geom.volume() + buffer_capacity(geom);
      report("single-load", streamed.load_count == expected,
             "loads " + std::to_string(streamed.load_count) + ", expected " + std::to_string(expected));
    } else {
      skip("stream-vs-reference", "needs every dimension >= 4");
      skip("single-load", "needs every dimension >= 4");
    }

    if (kSpinorComponents * geom.volume() <= kDenseLimit) {
      const auto dense = to_dense(gauge, params);
      const auto expected = unflatten(dense.matvec(flatten(psi)), geom);
      const auto actual = apply_wilson(gauge, psi, params);
      const double rel = norm(difference(actual, expected)) / norm(expected);
      report("dense-oracle", rel <= 1e-12, "relative deviation " + sci(rel));
    } else {
      skip("dense-oracle", "12*volume = " + std::to_string(kSpinorComponents * geom.volume()) + " exceeds " +
                               std::to_string(kDenseLimit));
    }
    return all_pass ? kOk : kCheckFailed;
  });
}

int cmd_gen(const Coords& dims, std::uint64_t seed, const std::filesystem::path& out_path, GenKind kind,
            std::ostream& out) {
  return guarded(out, [&] {
    const LatticeGeometry geom(dims);
    switch (kind) {
      case GenKind::gauge:
        write_gauge(out_path, generate_gauge(geom, seed));
        break;
      case GenKind::point_source:
        write_spinor(out_path, point_source(geom));
        break;
      case GenKind::random_source:
        write_spinor(out_path, random_spinor(geom, seed));
        break;
    }
    out << "wrote " << out_path.string() << " (" << geom.to_string() << ")\n";
    return kOk;
  });
}

}  // namespace wilsoncg::cli
