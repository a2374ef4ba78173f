#include "wilsoncg/dense.hpp"

#include <string>

namespace wilsoncg {

using cd = std::complex<double>;
using Gamma4 = std::array<std::array<cd, 4>, 4>;

std::vector<cd> DenseMatrix::matvec(std::span<const cd> v) const {
  if (v.size() != n_) throw DomainError("dense matvec: vector length mismatch");
  std::vector<cd> out(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    cd acc = 0.0;
    const cd* row = &data_[i * n_];
    for (std::size_t j = 0; j < n_; ++j) acc += row[j] * v[j];
    out[i] = acc;
  }
  return out;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Gamma4 dense_gamma(int mu) {
  const cd i(0.0, 1.0);
  switch (mu) {
    case 0:
      return {{{0, 0, 0, i}, {0, 0, i, 0}, {0, -i, 0, 0}, {-i, 0, 0, 0}}};
    case 1:
      return {{{0, 0, 0, -1.0}, {0, 0, 1.0, 0}, {0, 1.0, 0, 0}, {-1.0, 0, 0, 0}}};
    case 2:
      return {{{0, 0, i, 0}, {0, 0, 0, -i}, {-i, 0, 0, 0}, {0, i, 0, 0}}};
    case 3:
      return {{{0, 0, 1.0, 0}, {0, 0, 0, 1.0}, {1.0, 0, 0, 0}, {0, 1.0, 0, 0}}};
    case 5:
      return {{{1.0, 0, 0, 0}, {0, 1.0, 0, 0}, {0, 0, -1.0, 0}, {0, 0, 0, -1.0}}};
    default:
      throw DomainError("dense_gamma: index must be 0..3 or 5");
  }
}

DenseMatrix to_dense(const GaugeField<double>& gauge, const WilsonParams& params) {
  const auto& geom = gauge.geometry();
  const std::size_t n = kSpinorComponents * geom.volume();
  if (n > kDenseLimit) {
    throw RefusalError("dense oracle refused: 12*volume = " + std::to_string(n) + " exceeds " +
                       std::to_string(kDenseLimit));
  }
  DenseMatrix d(n);
  for (std::size_t k = 0; k < n; ++k) d(k, k) = 1.0;

  // D_{x,y} -= kappa * (1 -/+ gamma_mu) (x) link, for y = x +/- mu.
  auto add_block = [&](std::size_t x, std::size_t y, const Gamma4& g, int spin_sign, const Su3Matrix<double>& u,
                       bool dagger, double boundary) {
    for (std::size_t s = 0; s < 4; ++s) {
      for (std::size_t t = 0; t < 4; ++t) {
        const cd spin = (s == t ? 1.0 : 0.0) - static_cast<double>(spin_sign) * g[s][t];
        if (spin == 0.0) continue;
        for (std::size_t a = 0; a < kColors; ++a) {
          for (std::size_t b = 0; b < kColors; ++b) {
            const auto& z = dagger ? u(b, a) : u(a, b);
            const cd color = dagger ? std::conj(cd(z.re, z.im)) : cd(z.re, z.im);
            d(12 * x + 3 * s + a, 12 * y + 3 * t + b) -= params.kappa * boundary * spin * color;
          }
        }
      }
    }
  };

  for (std::size_t x = 0; x < geom.volume(); ++x) {
    for (int mu = 0; mu < kDimensions; ++mu) {
      const Gamma4 g = dense_gamma(mu);
      const std::size_t fwd = neighbor(x, mu, +1, geom);
      const std::size_t bwd = neighbor(x, mu, -1, geom);
      const double fwd_phase = boundary_sign(x, mu, +1, geom, params);
      const double bwd_phase = boundary_sign(x, mu, -1, geom, params);
      add_block(x, fwd, g, +1, gauge.link(x, mu), false, fwd_phase);
      add_block(x, bwd, g, -1, gauge.link(bwd, mu), true, bwd_phase);
    }
  }
  return d;
}

std::vector<cd> flatten(const SpinorField<double>& field) {
  std::vector<cd> v;
  v.reserve(field.size() * kSpinorComponents);
  for (const auto& s : field.sites())
    for (const auto& z : s.c) v.emplace_back(z.re, z.im);
  return v;
}

SpinorField<double> unflatten(std::span<const cd> v, const LatticeGeometry& geom) {
  if (v.size() != geom.volume() * kSpinorComponents) throw DomainError("unflatten: length mismatch");
  SpinorField<double> field(geom);
  for (std::size_t site = 0; site < geom.volume(); ++site)
    for (std::size_t k = 0; k < kSpinorComponents; ++k) {
      const cd z = v[site * kSpinorComponents + k];
      field[site].c[k] = {z.real(), z.imag()};
    }
  return field;
}

}  // namespace wilsoncg
