#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "wilsoncg/blas.hpp"
#include "wilsoncg/fields.hpp"
#include "wilsoncg/wilson.hpp"

namespace wilsoncg {

struct SolverConfig {
  double tol_outer = 1e-10;
  double tol_inner = 0.1;
  int max_outer = 50;
  // 0 selects default_max_inner(geometry).
  int max_inner = 0;

  void validate() const;

  friend bool operator==(const SolverConfig&, const SolverConfig&) = default;
};

// 10 * sqrt(12 * volume), rounded up.
int default_max_inner(const LatticeGeometry& geom);

struct SolveReport {
  int iterations_total = 0;
  int iterations_low = 0;
  int iterations_high = 0;
  std::vector<double> residual_history;
  bool converged = false;
  double final_relative_residual = 0.0;
};

class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// <p, Ap> not safely positive, or a non-finite scalar appeared.
class BreakdownError : public SolverError {
 public:
  BreakdownError(int iteration, const std::string& what)
      : SolverError("CG breakdown at iteration " + std::to_string(iteration) + ": " + what), iteration_(iteration) {}
  int iteration() const { return iteration_; }

 private:
  int iteration_;
};

class StagnationError : public SolverError {
 public:
  using SolverError::SolverError;
};

template <typename Real>
struct SolveResult {
  SpinorField<Real> x;
  SolveReport report;
};

template <typename Real>
constexpr double precision_epsilon() {
  return static_cast<double>(std::numeric_limits<Real>::epsilon());
}

template <typename Real>
void record_iterations(SolveReport& report, int iterations) {
  if constexpr (std::is_same_v<Real, float>) {
    report.iterations_low += iterations;
  } else {
    report.iterations_high += iterations;
  }
  report.iterations_total = report.iterations_low + report.iterations_high;
}

template <typename Real>
struct CgControl {
  double tolerance = 1e-10;
  int max_iterations = 1000;
  // Called after every iteration with (iteration, iterate, recursive relative residual).
  std::function<void(int, const SpinorField<Real>&, double)> observer;
};

// Textbook Hestenes-Stiefel CG for a Hermitian positive definite operator.
// Stops when the recursive residual satisfies ||r|| / ||b|| <= tolerance or
// after max_iterations. The history holds the recursive relative residual,
// starting with the initial one.
template <typename Real, typename Op>
SolveResult<Real> cg(Op&& apply_a, const SpinorField<Real>& b, const SpinorField<Real>& x0,
                     const CgControl<Real>& control) {
  require_same_geometry(b.geometry(), x0.geometry());
  SolveResult<Real> result{x0, {}};
  auto& report = result.report;
  auto& x = result.x;

  const double b_norm = norm(b);
  if (b_norm == 0.0) {
    x = SpinorField<Real>(b.geometry());
    report.residual_history.push_back(0.0);
    report.converged = true;
    return result;
  }

  SpinorField<Real> r = difference(b, apply_a(x));
  SpinorField<Real> p = r;
  double rr = norm2(r);
  report.residual_history.push_back(std::sqrt(rr) / b_norm);

  int k = 0;
  while (report.residual_history.back() > control.tolerance && k < control.max_iterations) {
    ++k;
    const SpinorField<Real> ap = apply_a(p);
    const double pap = dot(p, ap).re;
    const double threshold = 100.0 * precision_epsilon<Real>() * norm2(p);
    if (!std::isfinite(pap)) throw BreakdownError(k, "<p, Ap> is not finite");
    if (pap <= threshold) throw BreakdownError(k, "<p, Ap> = " + std::to_string(pap) + " not positive");

    const double alpha = rr / pap;
    axpy_inplace(static_cast<Real>(alpha), p, x);
    axpy_inplace(static_cast<Real>(-alpha), ap, r);
    const double rr_new = norm2(r);
    if (!std::isfinite(rr_new)) throw BreakdownError(k, "residual is not finite");
    report.residual_history.push_back(std::sqrt(rr_new) / b_norm);
    if (control.observer) control.observer(k, x, report.residual_history.back());

    xpay_inplace(r, static_cast<Real>(rr_new / rr), p);
    rr = rr_new;
  }
  record_iterations<Real>(report, k);
  report.converged = report.residual_history.back() <= control.tolerance;
  report.final_relative_residual = report.residual_history.back();
  return result;
}

// CG on the normal equations D^dagger D x = D^dagger b, in the CGNR
// arrangement that carries the residual s = b - D x of the original system
// alongside z = D^dagger s. Iteration stops on ||s|| / ||b||. The returned
// history holds that recursive residual; the final entry is replaced by the
// recomputed true residual ||b - D x|| / ||b|| in the same precision.
template <typename Real>
SolveResult<Real> cgnr(const GaugeField<Real>& gauge, const SpinorField<Real>& b, const WilsonParams& params,
                       const CgControl<Real>& control) {
  require_same_geometry(gauge.geometry(), b.geometry());
  SolveResult<Real> result{SpinorField<Real>(b.geometry()), {}};
  auto& report = result.report;
  auto& x = result.x;

  const double b_norm = norm(b);
  if (b_norm == 0.0) {
    report.residual_history.push_back(0.0);
    report.converged = true;
    return result;
  }

  SpinorField<Real> s = b;  // x0 = 0
  SpinorField<Real> z = apply_wilson_dagger(gauge, s, params);
  SpinorField<Real> p = z;
  double zz = norm2(z);
  report.residual_history.push_back(1.0);

  int k = 0;
  while (report.residual_history.back() > control.tolerance && k < control.max_iterations) {
    ++k;
    const SpinorField<Real> w = apply_wilson(gauge, p, params);
    const double ww = norm2(w);
    const double threshold = 100.0 * precision_epsilon<Real>() * norm2(p);
    if (!std::isfinite(ww)) throw BreakdownError(k, "<p, Ap> is not finite");
    if (ww <= threshold) throw BreakdownError(k, "<p, Ap> = " + std::to_string(ww) + " not positive");

    const double alpha = zz / ww;
    axpy_inplace(static_cast<Real>(alpha), p, x);
    axpy_inplace(static_cast<Real>(-alpha), w, s);
    z = apply_wilson_dagger(gauge, s, params);
    const double zz_new = norm2(z);
    report.residual_history.push_back(norm(s) / b_norm);
    if (control.observer) control.observer(k, x, report.residual_history.back());

    xpay_inplace(z, static_cast<Real>(zz_new / zz), p);
    zz = zz_new;
  }
  record_iterations<Real>(report, k);
  report.residual_history.back() = norm(difference(b, apply_wilson(gauge, x, params))) / b_norm;
  report.final_relative_residual = report.residual_history.back();
  report.converged = report.final_relative_residual <= control.tolerance;
  return result;
}

struct TrueResidual {
  double value = 0.0;
  // Set when b = 0: value is then the absolute norm ||D x||.
  bool absolute = false;
};

// ||b - D x|| / ||b||, entirely in double.
TrueResidual true_residual(const GaugeField<double>& gauge, const SpinorField<double>& x,
                           const SpinorField<double>& b, const WilsonParams& params);

// Double-precision CGNR to cfg.tol_outer on the true residual, at most
// cfg.max_inner iterations.
SolveResult<double> cgnr_solve(const GaugeField<double>& gauge, const SpinorField<double>& b,
                               const WilsonParams& params, const SolverConfig& cfg);

// Defect correction: the residual b - D x is recomputed in double every outer
// step, normalized, solved to relative cfg.tol_inner by single-precision CGNR,
// and the correction is added back in double. Converges on the double
// residual only. iterations_high counts outer (double-precision operator)
// steps; iterations_low counts inner CGNR iterations.
SolveResult<double> mixed_cg(const GaugeField<double>& gauge_high, const GaugeField<float>& gauge_low,
                             const SpinorField<double>& b, const WilsonParams& params, const SolverConfig& cfg);

}  // namespace wilsoncg
