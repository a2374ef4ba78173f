#pragma once

#include <cstddef>
#include <cstdint>

#include "wilsoncg/fields.hpp"

namespace wilsoncg {

// Every link U_mu(x) is random_su3 of a sub-seed mixed from (seed, x, mu),
// so the field does not depend on traversal order or thread count.
GaugeField<double> generate_gauge(const LatticeGeometry& geom, std::uint64_t seed);

// Components uniform in [-1, 1) for both real and imaginary parts.
SpinorField<double> random_spinor(const LatticeGeometry& geom, std::uint64_t seed);

// Unit vector at (site, spin, color).
SpinorField<double> point_source(const LatticeGeometry& geom, std::size_t site = 0, std::size_t spin = 0,
                                 std::size_t color = 0);

}  // namespace wilsoncg
