#include "wilsoncg/lattice.hpp"

#include <sstream>

#include "wilsoncg/errors.hpp"

namespace wilsoncg {

LatticeGeometry::LatticeGeometry(const Coords& dims) : dims_(dims), volume_(1), spatial_volume_(1) {
  for (int mu = 0; mu < kDimensions; ++mu) {
    if (dims[static_cast<std::size_t>(mu)] < 2) {
      throw DomainError("lattice dimension " + std::to_string(mu) + " must be >= 2, got " +
                        std::to_string(dims[static_cast<std::size_t>(mu)]));
    }
    volume_ *= static_cast<std::size_t>(dims[static_cast<std::size_t>(mu)]);
    if (mu < 3) spatial_volume_ *= static_cast<std::size_t>(dims[static_cast<std::size_t>(mu)]);
  }
}

Coords LatticeGeometry::coords(std::size_t index) const {
  if (index >= volume_) {
    throw DomainError("site index " + std::to_string(index) + " outside volume " +
                      std::to_string(volume_));
  }
  Coords c{};
  for (std::size_t mu = 0; mu < kDimensions; ++mu) {
    const auto extent = static_cast<std::size_t>(dims_[mu]);
    c[mu] = static_cast<int>(index % extent);
    index /= extent;
  }
  return c;
}

std::string LatticeGeometry::to_string() const {
  std::ostringstream os;
  os << dims_[0] << 'x' << dims_[1] << 'x' << dims_[2] << 'x' << dims_[3];
  return os.str();
}

std::size_t site_index(const Coords& coords, const LatticeGeometry& geom) {
  std::size_t index = 0;
  for (int mu = kDimensions - 1; mu >= 0; --mu) {
    const int c = coords[static_cast<std::size_t>(mu)];
    if (c < 0 || c >= geom.dim(mu)) {
      throw DomainError("coordinate " + std::to_string(c) + " out of range for direction " +
                        std::to_string(mu) + " of lattice " + geom.to_string());
    }
    index = index * static_cast<std::size_t>(geom.dim(mu)) + static_cast<std::size_t>(c);
  }
  return index;
}

namespace {

std::size_t stride(int mu, const LatticeGeometry& geom) {
  std::size_t s = 1;
  for (int nu = 0; nu < mu; ++nu) s *= static_cast<std::size_t>(geom.dim(nu));
  return s;
}

int coordinate(std::size_t index, int mu, const LatticeGeometry& geom) {
  return static_cast<int>((index / stride(mu, geom)) % static_cast<std::size_t>(geom.dim(mu)));
}

void check_hop(std::size_t index, int mu, int sign, const LatticeGeometry& geom) {
  if (index >= geom.volume()) throw DomainError("site index out of range");
  if (mu < 0 || mu >= kDimensions) throw DomainError("direction must be in 0..3");
  if (sign != 1 && sign != -1) throw DomainError("hop sign must be +1 or -1");
}

}  // namespace

std::size_t neighbor(std::size_t index, int mu, int sign, const LatticeGeometry& geom) {
  check_hop(index, mu, sign, geom);
  const std::size_t s = stride(mu, geom);
  const int extent = geom.dim(mu);
  const int c = coordinate(index, mu, geom);
  if (sign > 0) {
    return c == extent - 1 ? index - s * static_cast<std::size_t>(extent - 1) : index + s;
  }
  return c == 0 ? index + s * static_cast<std::size_t>(extent - 1) : index - s;
}

bool crosses_boundary(std::size_t index, int mu, int sign, const LatticeGeometry& geom) {
  check_hop(index, mu, sign, geom);
  const int c = coordinate(index, mu, geom);
  return sign > 0 ? c == geom.dim(mu) - 1 : c == 0;
}

}  // namespace wilsoncg
