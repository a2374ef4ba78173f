#pragma once

#include <array>
#include <cstddef>
#include <string>

namespace wilsoncg {

inline constexpr int kDimensions = 4;

using Coords = std::array<int, kDimensions>;

// Periodic 4D grid. Sites are ordered lexicographically with x fastest and
// t slowest, so the -t neighbor of a site is exactly one time-slice behind it.
class LatticeGeometry {
 public:
  explicit LatticeGeometry(const Coords& dims);

  const Coords& dims() const { return dims_; }
  int dim(int mu) const { return dims_[static_cast<std::size_t>(mu)]; }
  std::size_t volume() const { return volume_; }
  std::size_t spatial_volume() const { return spatial_volume_; }

  Coords coords(std::size_t index) const;
  std::string to_string() const;

  friend bool operator==(const LatticeGeometry&, const LatticeGeometry&) = default;

 private:
  Coords dims_;
  std::size_t volume_;
  std::size_t spatial_volume_;
};

// x + Lx*(y + Ly*(z + Lz*t)). Throws DomainError for out-of-range coordinates.
std::size_t site_index(const Coords& coords, const LatticeGeometry& geom);

// Site displaced by one step along mu (sign = +1 or -1), periodic in every
// direction.
std::size_t neighbor(std::size_t index, int mu, int sign, const LatticeGeometry& geom);

// True when the hop from `index` along (mu, sign) crosses the periodic
// boundary of direction mu.
bool crosses_boundary(std::size_t index, int mu, int sign, const LatticeGeometry& geom);

}  // namespace wilsoncg
