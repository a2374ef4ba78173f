#include "wilsoncg/solver.hpp"

#include <cmath>

namespace wilsoncg {

void SolverConfig::validate() const {
  if (!(tol_outer > 0.0 && tol_outer < 1.0)) throw DomainError("tol_outer must lie in (0, 1)");
  if (!(tol_inner > 0.0 && tol_inner < 1.0)) throw DomainError("tol_inner must lie in (0, 1)");
  if (max_outer < 1) throw DomainError("max_outer must be >= 1");
  if (max_inner < 0) throw DomainError("max_inner must be >= 1 (or 0 for the default)");
}

int default_max_inner(const LatticeGeometry& geom) {
  return static_cast<int>(std::ceil(10.0 * std::sqrt(12.0 * static_cast<double>(geom.volume()))));
}

namespace {

int resolved_max_inner(const SolverConfig& cfg, const LatticeGeometry& geom) {
  return cfg.max_inner > 0 ? cfg.max_inner : default_max_inner(geom);
}

}  // namespace

TrueResidual true_residual(const GaugeField<double>& gauge, const SpinorField<double>& x,
                           const SpinorField<double>& b, const WilsonParams& params) {
  require_same_geometry(x.geometry(), b.geometry());
  const double r = norm(difference(b, apply_wilson(gauge, x, params)));
  const double b_norm = norm(b);
  if (b_norm == 0.0) return {r, true};
  return {r / b_norm, false};
}

SolveResult<double> cgnr_solve(const GaugeField<double>& gauge, const SpinorField<double>& b,
                               const WilsonParams& params, const SolverConfig& cfg) {
  params.validate();
  cfg.validate();
  CgControl<double> control;
  control.tolerance = cfg.tol_outer;
  control.max_iterations = resolved_max_inner(cfg, b.geometry());
  auto result = cgnr(gauge, b, params, control);
  const auto check = true_residual(gauge, result.x, b, params);
  if (!check.absolute) {
    result.report.residual_history.back() = check.value;
    result.report.final_relative_residual = check.value;
    result.report.converged = check.value <= cfg.tol_outer;
  }
  return result;
}

SolveResult<double> mixed_cg(const GaugeField<double>& gauge_high, const GaugeField<float>& gauge_low,
                             const SpinorField<double>& b, const WilsonParams& params, const SolverConfig& cfg) {
  params.validate();
  cfg.validate();
  require_same_geometry(gauge_high.geometry(), b.geometry());
  require_same_geometry(gauge_low.geometry(), b.geometry());

  SolveResult<double> result{SpinorField<double>(b.geometry()), {}};
  auto& report = result.report;
  auto& x = result.x;

  const double b_norm = norm(b);
  if (b_norm == 0.0) {
    report.residual_history.push_back(0.0);
    report.converged = true;
    return result;
  }

  CgControl<float> inner;
  inner.tolerance = cfg.tol_inner;
  inner.max_iterations = resolved_max_inner(cfg, b.geometry());

  SpinorField<double> r = b;
  double relative = 1.0;
  report.residual_history.push_back(relative);
  int stalled = 0;

  for (int outer = 0; outer < cfg.max_outer && relative > cfg.tol_outer; ++outer) {
    const double r_norm = norm(r);
    const auto r_low = precision_cast<float>(scaled(1.0 / r_norm, r));
    const auto correction = cgnr(gauge_low, r_low, params, inner);
    report.iterations_low += correction.report.iterations_low;

    axpy_inplace(r_norm, precision_cast<double>(correction.x), x);
    r = difference(b, apply_wilson(gauge_high, x, params));
    ++report.iterations_high;
    report.iterations_total = report.iterations_low + report.iterations_high;

    const double updated = norm(r) / b_norm;
    report.residual_history.push_back(updated);

    const bool progressed = updated < relative;
    stalled = (!correction.report.converged && !progressed) ? stalled + 1 : 0;
    relative = updated;
    if (stalled >= 2) {
      throw StagnationError("inner solves hit max_inner twice without reducing the residual (at " +
                            std::to_string(relative) + "); use a smaller tol_inner");
    }
  }
  report.final_relative_residual = relative;
  report.converged = relative <= cfg.tol_outer;
  return result;
}

}  // namespace wilsoncg
