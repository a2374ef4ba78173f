#include "wilsoncg/counting_real.hpp"
#include "wilsoncg/wilson.hpp"

namespace wilsoncg {

FlopReport count_flops(const LatticeGeometry& geom) {
  const GaugeField<CountingReal> gauge(geom);
  SpinorField<CountingReal> psi(geom);
  for (std::size_t site = 0; site < psi.size(); ++site)
    for (auto& z : psi[site].c) z = {CountingReal(1.0), CountingReal(0.5)};

  const WilsonParams params{.kappa = 0.1};
  CountingReal::reset();
  const auto out = apply_wilson(gauge, psi, params);
  const std::uint64_t total = CountingReal::count();
  (void)out;

  FlopReport report;
  report.sites = geom.volume();
  report.flops_per_site = total / report.sites;
  report.flops_total = report.flops_per_site * report.sites;
  if (report.flops_total != total) {
    throw std::logic_error("FLOP count is not uniform across sites");
  }
  return report;
}

}  // namespace wilsoncg
