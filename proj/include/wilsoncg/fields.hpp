#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "wilsoncg/errors.hpp"
#include "wilsoncg/lattice.hpp"
#include "wilsoncg/spinor.hpp"
#include "wilsoncg/su3.hpp"

namespace wilsoncg {

// One SU(3) link per site and direction, stored site-major: link (x, mu) at 4*x + mu.
// A freshly constructed field is the unit gauge.
template <typename Real>
class GaugeField {
 public:
  explicit GaugeField(const LatticeGeometry& geom)
      : geom_(geom), links_(geom.volume() * kDimensions, Su3Matrix<Real>::identity()) {}

  const LatticeGeometry& geometry() const { return geom_; }

  Su3Matrix<Real>& link(std::size_t site, int mu) { return links_[site * kDimensions + static_cast<std::size_t>(mu)]; }
  const Su3Matrix<Real>& link(std::size_t site, int mu) const {
    return links_[site * kDimensions + static_cast<std::size_t>(mu)];
  }

  std::span<Su3Matrix<Real>> links() { return links_; }
  std::span<const Su3Matrix<Real>> links() const { return links_; }

  friend bool operator==(const GaugeField&, const GaugeField&) = default;

 private:
  LatticeGeometry geom_;
  std::vector<Su3Matrix<Real>> links_;
};

// One spinor per site, zero-initialized.
template <typename Real>
class SpinorField {
 public:
  explicit SpinorField(const LatticeGeometry& geom) : geom_(geom), sites_(geom.volume()) {}

  const LatticeGeometry& geometry() const { return geom_; }
  std::size_t size() const { return sites_.size(); }

  Spinor<Real>& operator[](std::size_t site) { return sites_[site]; }
  const Spinor<Real>& operator[](std::size_t site) const { return sites_[site]; }

  std::span<Spinor<Real>> sites() { return sites_; }
  std::span<const Spinor<Real>> sites() const { return sites_; }

  friend bool operator==(const SpinorField&, const SpinorField&) = default;

 private:
  LatticeGeometry geom_;
  std::vector<Spinor<Real>> sites_;
};

inline void require_same_geometry(const LatticeGeometry& a, const LatticeGeometry& b) {
  if (!(a == b)) {
    throw DomainError("geometry mismatch: " + a.to_string() + " vs " + b.to_string());
  }
}

template <typename To, typename From>
Complex<To> precision_cast(const Complex<From>& z) {
  return {static_cast<To>(z.re), static_cast<To>(z.im)};
}

template <typename To, typename From>
Su3Matrix<To> precision_cast(const Su3Matrix<From>& u) {
  Su3Matrix<To> out;
  for (std::size_t k = 0; k < u.e.size(); ++k) out.e[k] = precision_cast<To>(u.e[k]);
  return out;
}

template <typename To, typename From>
Spinor<To> precision_cast(const Spinor<From>& s) {
  Spinor<To> out;
  for (std::size_t k = 0; k < s.c.size(); ++k) out.c[k] = precision_cast<To>(s.c[k]);
  return out;
}

template <typename To, typename From>
GaugeField<To> precision_cast(const GaugeField<From>& field) {
  GaugeField<To> out(field.geometry());
  auto dst = out.links();
  auto src = field.links();
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] = precision_cast<To>(src[k]);
  return out;
}

template <typename To, typename From>
SpinorField<To> precision_cast(const SpinorField<From>& field) {
  SpinorField<To> out(field.geometry());
  for (std::size_t k = 0; k < field.size(); ++k) out[k] = precision_cast<To>(field[k]);
  return out;
}

}  // namespace wilsoncg
