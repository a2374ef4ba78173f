#include "wilsoncg/generate.hpp"

#include <random>

namespace wilsoncg {

GaugeField<double> generate_gauge(const LatticeGeometry& geom, std::uint64_t seed) {
  GaugeField<double> field(geom);
  const std::uint64_t base = mix_seed(seed);
  for (std::size_t site = 0; site < geom.volume(); ++site) {
    for (int mu = 0; mu < kDimensions; ++mu) {
      const std::uint64_t sub = mix_seed(base ^ mix_seed(site * kDimensions + static_cast<std::uint64_t>(mu)));
      field.link(site, mu) = random_su3(sub);
    }
  }
  return field;
}

SpinorField<double> random_spinor(const LatticeGeometry& geom, std::uint64_t seed) {
  SpinorField<double> field(geom);
  std::mt19937_64 engine(mix_seed(seed));
  auto uniform = [&engine] { return static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0; };
  for (auto& spinor : field.sites()) {
    for (auto& z : spinor.c) {
      z.re = uniform();
      z.im = uniform();
    }
  }
  return field;
}

SpinorField<double> point_source(const LatticeGeometry& geom, std::size_t site, std::size_t spin, std::size_t color) {
  if (site >= geom.volume() || spin >= kSpins || color >= kColors) {
    throw DomainError("point source location out of range");
  }
  SpinorField<double> field(geom);
  field[site](spin, color) = {1.0, 0.0};
  return field;
}

}  // namespace wilsoncg
