#pragma once

#include <array>
#include <cstddef>

#include "wilsoncg/complex.hpp"
#include "wilsoncg/errors.hpp"
#include "wilsoncg/su3.hpp"

namespace wilsoncg {

inline constexpr std::size_t kSpins = 4;
inline constexpr std::size_t kSpinorComponents = kSpins * kColors;

// 12 complex components, spin-major: component (s, c) lives at 3*s + c.
template <typename Real>
struct Spinor {
  std::array<Complex<Real>, kSpinorComponents> c{};

  constexpr Complex<Real>& operator()(std::size_t spin, std::size_t color) { return c[spin * kColors + color]; }
  constexpr const Complex<Real>& operator()(std::size_t spin, std::size_t color) const {
    return c[spin * kColors + color];
  }

  constexpr ColorVector<Real> spin_component(std::size_t spin) const {
    return {c[spin * kColors], c[spin * kColors + 1], c[spin * kColors + 2]};
  }

  friend constexpr bool operator==(const Spinor&, const Spinor&) = default;
};

// Gamma matrices in the chiral (DeGrand-Rossi) basis. Every gamma_mu has one
// nonzero entry per row, so (gamma_mu psi)_s = phase[mu][s] * psi_{partner[mu][s]}.
// gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3 = diag(1, 1, -1, -1).
namespace gamma {

inline constexpr std::array<std::array<std::size_t, kSpins>, 4> partner{{
    {3, 2, 1, 0},
    {3, 2, 1, 0},
    {2, 3, 0, 1},
    {2, 3, 0, 1},
}};

inline constexpr std::array<std::array<Phase, kSpins>, 4> phase{{
    {Phase::plus_i, Phase::plus_i, Phase::minus_i, Phase::minus_i},
    {Phase::minus_one, Phase::plus_one, Phase::plus_one, Phase::minus_one},
    {Phase::plus_i, Phase::minus_i, Phase::minus_i, Phase::plus_i},
    {Phase::plus_one, Phase::plus_one, Phase::plus_one, Phase::plus_one},
}};

inline constexpr int kGamma5 = 5;

}  // namespace gamma

// gamma_mu * psi for mu in {0, 1, 2, 3, 5}, acting identically on color.
template <typename Real>
constexpr Spinor<Real> gamma_apply(int mu, const Spinor<Real>& psi) {
  Spinor<Real> out;
  if (mu == gamma::kGamma5) {
    for (std::size_t s = 0; s < kSpins; ++s) {
      for (std::size_t col = 0; col < kColors; ++col) out(s, col) = s < 2 ? psi(s, col) : -psi(s, col);
    }
    return out;
  }
  if (mu < 0 || mu > 3) throw DomainError("gamma index must be 0, 1, 2, 3 or 5");
  const auto m = static_cast<std::size_t>(mu);
  for (std::size_t s = 0; s < kSpins; ++s) {
    for (std::size_t col = 0; col < kColors; ++col) {
      out(s, col) = apply_phase(gamma::phase[m][s], psi(gamma::partner[m][s], col));
    }
  }
  return out;
}

}  // namespace wilsoncg
