#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "wilsoncg/errors.hpp"
#include "wilsoncg/fields.hpp"
#include "wilsoncg/spinor.hpp"
#include "wilsoncg/su3.hpp"

namespace wilsoncg {

struct WilsonParams {
  double kappa = 0.1;
  bool antiperiodic_t = false;

  // Accepted range 0 < kappa < 0.25.
  void validate() const {
    if (!(kappa > 0.0 && kappa < 0.25)) {
      throw DomainError("kappa must lie in (0, 0.25), got " + std::to_string(kappa));
    }
  }
};

// D or D^dagger. The two differ only in the sign of the spin projectors.
enum class Orientation { normal, adjoint };

inline constexpr std::size_t kStencilLegs = 8;

// Everything one output site depends on. Legs are ordered (mu = 0..3,
// forward before backward): leg 2*mu is x+mu with U_mu(x), leg 2*mu+1 is
// x-mu with U_mu(x-mu) (applied daggered). Boundary phases are already folded
// into the neighbor spinors.
template <typename Real>
struct StencilInputs {
  Spinor<Real> center;
  std::array<Spinor<Real>, kStencilLegs> neighbors;
  std::array<Su3Matrix<Real>, kStencilLegs> links;
};

namespace detail {

template <typename Real>
using HalfSpinor = std::array<ColorVector<Real>, 2>;

// (1 - sign*gamma_mu) is twice a rank-2 projector. Its upper two spin rows are
// h_u = psi_u - sign*phase[mu][u]*psi_{partner[mu][u]}; the lower rows are
// fixed unit multiples of these (see reconstruct).
template <typename Real>
HalfSpinor<Real> project(const Spinor<Real>& psi, int mu, int sign) {
  const auto m = static_cast<std::size_t>(mu);
  HalfSpinor<Real> h;
  for (std::size_t u = 0; u < 2; ++u) {
    const Phase p = sign > 0 ? negate(gamma::phase[m][u]) : gamma::phase[m][u];
    for (std::size_t col = 0; col < kColors; ++col) {
      h[u][col] = psi(u, col) + apply_phase(p, psi(gamma::partner[m][u], col));
    }
  }
  return h;
}

// Lower row s of (1 - sign*gamma_mu)psi equals -sign*phase[mu][s]*h_{partner[mu][s]}.
template <typename Real>
Spinor<Real> reconstruct(const HalfSpinor<Real>& h, int mu, int sign) {
  const auto m = static_cast<std::size_t>(mu);
  Spinor<Real> r;
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t col = 0; col < kColors; ++col) r(u, col) = h[u][col];
  for (std::size_t s = 2; s < kSpins; ++s) {
    const Phase p = sign > 0 ? negate(gamma::phase[m][s]) : gamma::phase[m][s];
    const std::size_t u = gamma::partner[m][s];
    for (std::size_t col = 0; col < kColors; ++col) r(s, col) = apply_phase(p, h[u][col]);
  }
  return r;
}

}  // namespace detail

// One site of D psi = psi - kappa * sum_mu [(1 - gamma_mu) U_mu(x) psi(x+mu)
//                                          + (1 + gamma_mu) U_mu(x-mu)^dagger psi(x-mu)]
// (projector signs flipped for the adjoint). Four stages:
//   1. gather the center, eight neighbors and eight links;
//   2. spin-project each neighbor to a half spinor;
//   3. eight independent SU(3) mat-vecs on the half spinors;
//   4. reconstruct, accumulate the legs in order, scale by kappa, add the diagonal.
// The accumulation order is fixed; every operator path calls this function so
// that results agree bit for bit.
template <typename Real>
Spinor<Real> stencil_kernel(const StencilInputs<Real>& in, const WilsonParams& params,
                            Orientation orientation = Orientation::normal) {
  const int flip = orientation == Orientation::normal ? 1 : -1;

  // Stage 1
  const Spinor<Real> center = in.center;
  const std::array<Spinor<Real>, kStencilLegs> neighbors = in.neighbors;
  const std::array<Su3Matrix<Real>, kStencilLegs> links = in.links;

  // Stage 2
  std::array<detail::HalfSpinor<Real>, kStencilLegs> projected;
  for (std::size_t leg = 0; leg < kStencilLegs; ++leg) {
    const int mu = static_cast<int>(leg / 2);
    const int sign = (leg % 2 == 0 ? 1 : -1) * flip;
    projected[leg] = detail::project(neighbors[leg], mu, sign);
  }

  // Stage 3
  std::array<detail::HalfSpinor<Real>, kStencilLegs> transported;
  for (std::size_t leg = 0; leg < kStencilLegs; ++leg) {
    const bool dagger = leg % 2 == 1;
    for (std::size_t u = 0; u < 2; ++u) transported[leg][u] = su3_mulvec(links[leg], projected[leg][u], dagger);
  }

  // Stage 4
  Spinor<Real> hop = detail::reconstruct(transported[0], 0, flip);
  for (std::size_t leg = 1; leg < kStencilLegs; ++leg) {
    const int mu = static_cast<int>(leg / 2);
    const int sign = (leg % 2 == 0 ? 1 : -1) * flip;
    const Spinor<Real> term = detail::reconstruct(transported[leg], mu, sign);
    for (std::size_t k = 0; k < kSpinorComponents; ++k) hop.c[k] += term.c[k];
  }
  const Real kappa = static_cast<Real>(params.kappa);
  Spinor<Real> out;
  for (std::size_t k = 0; k < kSpinorComponents; ++k) out.c[k] = center.c[k] - scale(kappa, hop.c[k]);
  return out;
}

template <typename Real>
Spinor<Real> stencil_kernel(const Spinor<Real>& center, std::span<const Spinor<Real>, kStencilLegs> neighbors,
                            std::span<const Su3Matrix<Real>, kStencilLegs> links, const WilsonParams& params,
                            Orientation orientation = Orientation::normal) {
  StencilInputs<Real> in;
  in.center = center;
  for (std::size_t leg = 0; leg < kStencilLegs; ++leg) {
    in.neighbors[leg] = neighbors[leg];
    in.links[leg] = links[leg];
  }
  return stencil_kernel(in, params, orientation);
}

// -1 for a hop across the time boundary with antiperiodic time, else +1.
inline int boundary_sign(std::size_t site, int mu, int sign, const LatticeGeometry& geom,
                         const WilsonParams& params) {
  return params.antiperiodic_t && mu == 3 && crosses_boundary(site, mu, sign, geom) ? -1 : 1;
}

template <typename Real>
Spinor<Real> with_sign(const Spinor<Real>& s, int boundary) {
  if (boundary > 0) return s;
  Spinor<Real> out;
  for (std::size_t k = 0; k < kSpinorComponents; ++k) out.c[k] = -s.c[k];
  return out;
}

// The link legs of site x: U_mu(x) forward, U_mu(x - mu) backward.
template <typename Real>
void gather_links(const GaugeField<Real>& gauge, std::size_t site, StencilInputs<Real>& in) {
  const auto& geom = gauge.geometry();
  for (int mu = 0; mu < kDimensions; ++mu) {
    const auto leg = static_cast<std::size_t>(2 * mu);
    in.links[leg] = gauge.link(site, mu);
    in.links[leg + 1] = gauge.link(neighbor(site, mu, -1, geom), mu);
  }
}

}  // namespace wilsoncg
