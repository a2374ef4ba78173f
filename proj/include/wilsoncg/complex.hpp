#pragma once

#include <cstdint>

namespace wilsoncg {

// Minimal complex number over an arbitrary real type. std::complex is only
// specified for the builtin floating types, and the FLOP counter needs to
// run the same arithmetic on an instrumented scalar.
template <typename Real>
struct Complex {
  Real re{};
  Real im{};

  constexpr Complex() = default;
  constexpr Complex(Real r) : re(r), im(Real{}) {}
  constexpr Complex(Real r, Real i) : re(r), im(i) {}

  constexpr Complex& operator+=(const Complex& o) {
    re = re + o.re;
    im = im + o.im;
    return *this;
  }
  constexpr Complex& operator-=(const Complex& o) {
    re = re - o.re;
    im = im - o.im;
    return *this;
  }

  friend constexpr bool operator==(const Complex&, const Complex&) = default;
};

template <typename Real>
constexpr Complex<Real> operator+(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re + b.re, a.im + b.im};
}

template <typename Real>
constexpr Complex<Real> operator-(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re - b.re, a.im - b.im};
}

template <typename Real>
constexpr Complex<Real> operator-(const Complex<Real>& a) {
  return {-a.re, -a.im};
}

template <typename Real>
constexpr Complex<Real> operator*(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

// conj(a) * b without materializing the conjugate.
template <typename Real>
constexpr Complex<Real> conj_mul(const Complex<Real>& a, const Complex<Real>& b) {
  return {a.re * b.re + a.im * b.im, a.re * b.im - a.im * b.re};
}

template <typename Real>
constexpr Complex<Real> scale(const Real& s, const Complex<Real>& a) {
  return {s * a.re, s * a.im};
}

template <typename Real>
constexpr Complex<Real> conj(const Complex<Real>& a) {
  return {a.re, -a.im};
}

template <typename Real>
constexpr Real norm2(const Complex<Real>& a) {
  return a.re * a.re + a.im * a.im;
}

// Unit phases {+1, -1, +i, -i}. Multiplying by one is a permutation and sign
// flip of the components, never an arithmetic operation.
enum class Phase : std::uint8_t { plus_one, minus_one, plus_i, minus_i };

constexpr Phase negate(Phase p) {
  switch (p) {
    case Phase::plus_one: return Phase::minus_one;
    case Phase::minus_one: return Phase::plus_one;
    case Phase::plus_i: return Phase::minus_i;
    case Phase::minus_i: return Phase::plus_i;
  }
  return p;
}

template <typename Real>
constexpr Complex<Real> apply_phase(Phase p, const Complex<Real>& a) {
  switch (p) {
    case Phase::plus_one: return a;
    case Phase::minus_one: return {-a.re, -a.im};
    case Phase::plus_i: return {-a.im, a.re};
    case Phase::minus_i: return {a.im, -a.re};
  }
  return a;
}

}  // namespace wilsoncg
