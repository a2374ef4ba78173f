#pragma once

#include <cmath>
#include <cstddef>

#include "wilsoncg/fields.hpp"

namespace wilsoncg {

// Vector algebra on spinor fields. Inner products always accumulate in double.

template <typename Real>
Complex<double> dot(const SpinorField<Real>& a, const SpinorField<Real>& b) {
  require_same_geometry(a.geometry(), b.geometry());
  double re = 0.0;
  double im = 0.0;
  for (std::size_t site = 0; site < a.size(); ++site) {
    for (std::size_t k = 0; k < kSpinorComponents; ++k) {
      const auto x = precision_cast<double>(a[site].c[k]);
      const auto y = precision_cast<double>(b[site].c[k]);
      re += x.re * y.re + x.im * y.im;
      im += x.re * y.im - x.im * y.re;
    }
  }
  return {re, im};
}

template <typename Real>
double norm2(const SpinorField<Real>& a) {
  double s = 0.0;
  for (const auto& spinor : a.sites()) {
    for (const auto& z : spinor.c) {
      const auto w = precision_cast<double>(z);
      s += w.re * w.re + w.im * w.im;
    }
  }
  return s;
}

template <typename Real>
double norm(const SpinorField<Real>& a) {
  return std::sqrt(norm2(a));
}

// alpha*x + y
template <typename Real>
SpinorField<Real> axpy(const Complex<Real>& alpha, const SpinorField<Real>& x, const SpinorField<Real>& y) {
  require_same_geometry(x.geometry(), y.geometry());
  SpinorField<Real> out(x.geometry());
  for (std::size_t site = 0; site < x.size(); ++site)
    for (std::size_t k = 0; k < kSpinorComponents; ++k) out[site].c[k] = alpha * x[site].c[k] + y[site].c[k];
  return out;
}

// y += alpha*x with real alpha.
template <typename Real>
void axpy_inplace(Real alpha, const SpinorField<Real>& x, SpinorField<Real>& y) {
  require_same_geometry(x.geometry(), y.geometry());
  for (std::size_t site = 0; site < x.size(); ++site)
    for (std::size_t k = 0; k < kSpinorComponents; ++k) y[site].c[k] += scale(alpha, x[site].c[k]);
}

// p = r + beta*p with real beta.
template <typename Real>
void xpay_inplace(const SpinorField<Real>& r, Real beta, SpinorField<Real>& p) {
  require_same_geometry(r.geometry(), p.geometry());
  for (std::size_t site = 0; site < r.size(); ++site)
    for (std::size_t k = 0; k < kSpinorComponents; ++k) p[site].c[k] = r[site].c[k] + scale(beta, p[site].c[k]);
}

template <typename Real>
SpinorField<Real> scaled(Real alpha, const SpinorField<Real>& x) {
  SpinorField<Real> out(x.geometry());
  for (std::size_t site = 0; site < x.size(); ++site)
    for (std::size_t k = 0; k < kSpinorComponents; ++k) out[site].c[k] = scale(alpha, x[site].c[k]);
  return out;
}

template <typename Real>
SpinorField<Real> difference(const SpinorField<Real>& a, const SpinorField<Real>& b) {
  require_same_geometry(a.geometry(), b.geometry());
  SpinorField<Real> out(a.geometry());
  for (std::size_t site = 0; site < a.size(); ++site)
    for (std::size_t k = 0; k < kSpinorComponents; ++k) out[site].c[k] = a[site].c[k] - b[site].c[k];
  return out;
}

}  // namespace wilsoncg
