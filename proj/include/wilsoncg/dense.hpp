#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "wilsoncg/fields.hpp"
#include "wilsoncg/stencil.hpp"

namespace wilsoncg {

// Row-major dense complex matrix. Test-only scale: the Wilson matrix of any
// interesting lattice is far too large to hold densely.
class DenseMatrix {
 public:
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n) {}

  std::size_t size() const { return n_; }
  std::complex<double>& operator()(std::size_t row, std::size_t col) { return data_[row * n_ + col]; }
  const std::complex<double>& operator()(std::size_t row, std::size_t col) const { return data_[row * n_ + col]; }

  std::vector<std::complex<double>> matvec(std::span<const std::complex<double>> v) const;
  DenseMatrix adjoint() const;

 private:
  std::size_t n_;
  std::vector<std::complex<double>> data_;
};

inline constexpr std::size_t kDenseLimit = 4096;

// The Wilson matrix assembled block by block from explicit 4x4 gamma matrices
// and the links, independently of the stencil code. Row/column 12*x + 3*s + c.
// Refuses (RefusalError) when 12 * volume exceeds kDenseLimit.
DenseMatrix to_dense(const GaugeField<double>& gauge, const WilsonParams& params);

// Dense 4x4 gamma_mu (mu = 0..3) or gamma_5 (mu = 5) in the chiral basis,
// written out entry by entry.
std::array<std::array<std::complex<double>, 4>, 4> dense_gamma(int mu);

std::vector<std::complex<double>> flatten(const SpinorField<double>& field);
SpinorField<double> unflatten(std::span<const std::complex<double>> v, const LatticeGeometry& geom);

}  // namespace wilsoncg
