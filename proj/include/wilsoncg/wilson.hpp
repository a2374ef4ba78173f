#pragma once

#include <cstddef>
#include <cstdint>

#include "wilsoncg/fields.hpp"
#include "wilsoncg/parallel.hpp"
#include "wilsoncg/stencil.hpp"

namespace wilsoncg {

// Random-access gather of one site's stencil inputs straight from the fields.
template <typename Real>
StencilInputs<Real> gather_site(const GaugeField<Real>& gauge, const SpinorField<Real>& psi, std::size_t site,
                                const WilsonParams& params) {
  const auto& geom = psi.geometry();
  StencilInputs<Real> in;
  in.center = psi[site];
  for (int mu = 0; mu < kDimensions; ++mu) {
    const auto leg = static_cast<std::size_t>(2 * mu);
    in.neighbors[leg] = with_sign(psi[neighbor(site, mu, +1, geom)], boundary_sign(site, mu, +1, geom, params));
    in.neighbors[leg + 1] =
        with_sign(psi[neighbor(site, mu, -1, geom)], boundary_sign(site, mu, -1, geom, params));
  }
  gather_links(gauge, site, in);
  return in;
}

template <typename Real>
SpinorField<Real> apply_hopping_form(const GaugeField<Real>& gauge, const SpinorField<Real>& psi,
                                     const WilsonParams& params, Orientation orientation) {
  require_same_geometry(gauge.geometry(), psi.geometry());
  SpinorField<Real> out(psi.geometry());
  parallel_for(psi.size(), [&](std::size_t site) {
    out[site] = stencil_kernel(gather_site(gauge, psi, site, params), params, orientation);
  });
  return out;
}

// D psi with D = 1 - kappa * H, the Wilson hopping form (r = 1).
template <typename Real>
SpinorField<Real> apply_wilson(const GaugeField<Real>& gauge, const SpinorField<Real>& psi,
                               const WilsonParams& params) {
  return apply_hopping_form(gauge, psi, params, Orientation::normal);
}

// D^dagger psi, obtained by flipping the projector signs rather than by
// transposing anything.
template <typename Real>
SpinorField<Real> apply_wilson_dagger(const GaugeField<Real>& gauge, const SpinorField<Real>& psi,
                                      const WilsonParams& params) {
  return apply_hopping_form(gauge, psi, params, Orientation::adjoint);
}

// D^dagger D psi.
template <typename Real>
SpinorField<Real> apply_normal(const GaugeField<Real>& gauge, const SpinorField<Real>& psi,
                               const WilsonParams& params) {
  return apply_wilson_dagger(gauge, apply_wilson(gauge, psi, params), params);
}

template <typename Real>
SpinorField<Real> gamma5(const SpinorField<Real>& psi) {
  SpinorField<Real> out(psi.geometry());
  for (std::size_t site = 0; site < psi.size(); ++site) out[site] = gamma_apply(gamma::kGamma5, psi[site]);
  return out;
}

struct FlopReport {
  std::uint64_t flops_per_site = 0;
  std::uint64_t flops_total = 0;
  std::uint64_t sites = 0;
};

// Runs apply_wilson once on an instrumented scalar that counts every real
// add/sub/mul. Multiplications by +-1 and +-i are component shuffles and cost nothing.
FlopReport count_flops(const LatticeGeometry& geom);

}  // namespace wilsoncg
