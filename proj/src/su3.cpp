#include "wilsoncg/su3.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace wilsoncg {

namespace {

template <typename Real>
std::complex<double> widen(const Complex<Real>& z) {
  return {static_cast<double>(z.re), static_cast<double>(z.im)};
}

template <typename Real>
double unitarity_impl(const Su3Matrix<Real>& u) {
  double worst = 0.0;
  for (std::size_t i = 0; i < kColors; ++i) {
    for (std::size_t j = 0; j < kColors; ++j) {
      std::complex<double> acc = 0.0;
      for (std::size_t k = 0; k < kColors; ++k) acc += std::conj(widen(u(k, i))) * widen(u(k, j));
      if (i == j) acc -= 1.0;
      worst = std::max(worst, std::abs(acc));
    }
  }
  return worst;
}

template <typename Real>
double determinant_impl(const Su3Matrix<Real>& u) {
  Su3Matrix<double> wide;
  for (std::size_t k = 0; k < wide.e.size(); ++k) {
    wide.e[k] = {static_cast<double>(u.e[k].re), static_cast<double>(u.e[k].im)};
  }
  const auto det = determinant(wide);
  return std::abs(std::complex<double>(det.re - 1.0, det.im));
}

// Uniform in [-1, 1) from the raw 64-bit engine output; std distributions are
// implementation-defined and would break cross-platform determinism.
double uniform_signed(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-52 - 1.0;
}

using Row = std::array<std::complex<double>, kColors>;

double row_norm(const Row& r) {
  double s = 0.0;
  for (const auto& z : r) s += std::norm(z);
  return std::sqrt(s);
}

}  // namespace

double unitarity_deviation(const Su3Matrix<double>& u) { return unitarity_impl(u); }
double unitarity_deviation(const Su3Matrix<float>& u) { return unitarity_impl(u); }
double determinant_deviation(const Su3Matrix<double>& u) { return determinant_impl(u); }
double determinant_deviation(const Su3Matrix<float>& u) { return determinant_impl(u); }

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Su3Matrix<double> random_su3(std::uint64_t seed) {
  // A draw whose Gram-Schmidt residual row is this small is treated as rank
  // deficient and redrawn from a perturbed seed.
  constexpr double kDegenerate = 1e-6;

  for (std::uint64_t attempt = 0;; ++attempt) {
    std::mt19937_64 engine(mix_seed(seed + attempt * 0x9e3779b97f4a7c15ULL));
    std::array<Row, kColors> rows;
    for (auto& row : rows)
      for (auto& z : row) z = {uniform_signed(engine), uniform_signed(engine)};

    // Two Gram-Schmidt passes on rows 0 and 1 keep them orthonormal to a few
    // ulps; row 2 is conj(row0 x row1), which is unit length, orthogonal to
    // both and makes det U = 1.
    bool degenerate = false;
    for (std::size_t i = 0; i < 2 && !degenerate; ++i) {
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k < i; ++k) {
          std::complex<double> proj = 0.0;
          for (std::size_t c = 0; c < kColors; ++c) proj += std::conj(rows[k][c]) * rows[i][c];
          for (std::size_t c = 0; c < kColors; ++c) rows[i][c] -= proj * rows[k][c];
        }
        const double n = row_norm(rows[i]);
        if (n < kDegenerate) {
          degenerate = true;
          break;
        }
        for (auto& z : rows[i]) z /= n;
      }
    }
    if (degenerate) continue;
    const Row& a = rows[0];
    const Row& b = rows[1];
    rows[2] = {std::conj(a[1] * b[2] - a[2] * b[1]), std::conj(a[2] * b[0] - a[0] * b[2]),
               std::conj(a[0] * b[1] - a[1] * b[0])};

    Su3Matrix<double> u;
    for (std::size_t i = 0; i < kColors; ++i)
      for (std::size_t j = 0; j < kColors; ++j) u(i, j) = {rows[i][j].real(), rows[i][j].imag()};
    return u;
  }
}

}  // namespace wilsoncg
