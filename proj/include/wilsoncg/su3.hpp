#pragma once

#include <array>
#include <cstddef>
#include <cstdint>

#include "wilsoncg/complex.hpp"

namespace wilsoncg {

inline constexpr std::size_t kColors = 3;

template <typename Real>
using ColorVector = std::array<Complex<Real>, kColors>;

// 3x3 complex matrix, row-major.
template <typename Real>
struct Su3Matrix {
  std::array<Complex<Real>, kColors * kColors> e{};

  constexpr Complex<Real>& operator()(std::size_t row, std::size_t col) { return e[row * kColors + col]; }
  constexpr const Complex<Real>& operator()(std::size_t row, std::size_t col) const {
    return e[row * kColors + col];
  }

  static constexpr Su3Matrix identity() {
    Su3Matrix m;
    for (std::size_t i = 0; i < kColors; ++i) m(i, i) = Complex<Real>(Real(1));
    return m;
  }

  friend constexpr bool operator==(const Su3Matrix&, const Su3Matrix&) = default;
};

// U*v, or U^dagger*v when `dagger` is set. Each output row is accumulated
// left to right over the columns.
template <typename Real>
constexpr ColorVector<Real> su3_mulvec(const Su3Matrix<Real>& u, const ColorVector<Real>& v, bool dagger) {
  ColorVector<Real> out;
  if (!dagger) {
    for (std::size_t i = 0; i < kColors; ++i) {
      Complex<Real> acc = u(i, 0) * v[0];
      acc += u(i, 1) * v[1];
      acc += u(i, 2) * v[2];
      out[i] = acc;
    }
  } else {
    for (std::size_t i = 0; i < kColors; ++i) {
      Complex<Real> acc = conj_mul(u(0, i), v[0]);
      acc += conj_mul(u(1, i), v[1]);
      acc += conj_mul(u(2, i), v[2]);
      out[i] = acc;
    }
  }
  return out;
}

template <typename Real>
constexpr Su3Matrix<Real> operator*(const Su3Matrix<Real>& a, const Su3Matrix<Real>& b) {
  Su3Matrix<Real> out;
  for (std::size_t i = 0; i < kColors; ++i) {
    for (std::size_t j = 0; j < kColors; ++j) {
      Complex<Real> acc = a(i, 0) * b(0, j);
      acc += a(i, 1) * b(1, j);
      acc += a(i, 2) * b(2, j);
      out(i, j) = acc;
    }
  }
  return out;
}

template <typename Real>
constexpr Su3Matrix<Real> adjoint(const Su3Matrix<Real>& a) {
  Su3Matrix<Real> out;
  for (std::size_t i = 0; i < kColors; ++i)
    for (std::size_t j = 0; j < kColors; ++j) out(i, j) = conj(a(j, i));
  return out;
}

template <typename Real>
constexpr Complex<Real> determinant(const Su3Matrix<Real>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
         a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

// max_ij |(U^dagger U - 1)_ij|, evaluated in double.
double unitarity_deviation(const Su3Matrix<double>& u);
double unitarity_deviation(const Su3Matrix<float>& u);

// |det U - 1|, evaluated in double.
double determinant_deviation(const Su3Matrix<double>& u);
double determinant_deviation(const Su3Matrix<float>& u);

// Deterministic SU(3) matrix: rows 0 and 1 are Gram-Schmidt orthonormalized
// from a seeded random complex 3x3 matrix, row 2 is their conjugate cross
// product.
Su3Matrix<double> random_su3(std::uint64_t seed);

// splitmix64 finalizer; used to derive independent sub-seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace wilsoncg
