#include <complex>
#include <limits>
#include <random>

#include "doctest.h"
#include "test_support.hpp"
#include "wilsoncg/lattice.hpp"
#include "wilsoncg/spinor.hpp"
#include "wilsoncg/su3.hpp"

using namespace wilsoncg;
using wilsoncg::test::random_site_spinor;

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double spinor_distance(const Spinor<double>& a, const Spinor<double>& b) {
  double worst = 0.0;
  for (std::size_t k = 0; k < kSpinorComponents; ++k) {
    worst = std::max({worst, std::abs(a.c[k].re - b.c[k].re), std::abs(a.c[k].im - b.c[k].im)});
  }
  return worst;
}

Spinor<double> scale_spinor(double s, const Spinor<double>& a) {
  Spinor<double> out;
  for (std::size_t k = 0; k < kSpinorComponents; ++k) out.c[k] = scale(s, a.c[k]);
  return out;
}

Spinor<double> add(const Spinor<double>& a, const Spinor<double>& b) {
  Spinor<double> out;
  for (std::size_t k = 0; k < kSpinorComponents; ++k) out.c[k] = a.c[k] + b.c[k];
  return out;
}

}  // namespace

TEST_CASE("site_index follows x-fastest lexicographic order") {
  const LatticeGeometry g({4, 4, 4, 4});
  CHECK(site_index({0, 0, 0, 0}, g) == 0);
  CHECK(site_index({1, 0, 0, 0}, g) == 1);
  CHECK(site_index({0, 0, 0, 1}, g) == 64);
  CHECK(g.volume() == 256);
  CHECK(g.spatial_volume() == 64);
}

TEST_CASE("site_index rejects out-of-range coordinates") {
  const LatticeGeometry g({4, 4, 4, 4});
  CHECK_THROWS_AS(site_index({4, 0, 0, 0}, g), DomainError);
  CHECK_THROWS_AS(site_index({0, -1, 0, 0}, g), DomainError);
  CHECK_THROWS_AS(LatticeGeometry({4, 1, 4, 4}), DomainError);
}

TEST_CASE("coordinates and indices are a bijection on anisotropic lattices") {
  for (const Coords dims : {Coords{2, 2, 2, 2}, Coords{3, 5, 2, 4}, Coords{6, 4, 4, 4}}) {
    const LatticeGeometry g(dims);
    for (std::size_t i = 0; i < g.volume(); ++i) CHECK(site_index(g.coords(i), g) == i);
  }
}

TEST_CASE("neighbor wraps periodically") {
  const LatticeGeometry g({4, 4, 4, 4});
  CHECK(neighbor(0, 0, -1, g) == 3);
  CHECK(neighbor(0, 3, +1, g) == 64);
  CHECK(neighbor(63, 0, +1, g) == 60);
  CHECK(crosses_boundary(63, 0, +1, g));
  CHECK_FALSE(crosses_boundary(62, 0, +1, g));
}

TEST_CASE("forward then backward hop returns to the start") {
  const LatticeGeometry g({3, 4, 2, 5});
  for (std::size_t i = 0; i < g.volume(); ++i) {
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(neighbor(neighbor(i, mu, +1, g), mu, -1, g) == i);
      // The displaced coordinate differs by exactly one step mod L.
      const auto a = g.coords(i);
      const auto b = g.coords(neighbor(i, mu, +1, g));
      CHECK((a[static_cast<std::size_t>(mu)] + 1) % g.dim(mu) == b[static_cast<std::size_t>(mu)]);
    }
  }
}

TEST_CASE("gamma_5 is diag(1, 1, -1, -1) on spin") {
  std::mt19937_64 engine(11);
  const auto psi = random_site_spinor<double>(engine);
  const auto out = gamma_apply(5, psi);
  for (std::size_t c = 0; c < kColors; ++c) {
    CHECK(out(0, c) == psi(0, c));
    CHECK(out(1, c) == psi(1, c));
    CHECK(out(2, c) == -psi(2, c));
    CHECK(out(3, c) == -psi(3, c));
  }
  CHECK_THROWS_AS(gamma_apply(4, psi), DomainError);
}

TEST_CASE("gamma matrices satisfy the Clifford algebra") {
  std::mt19937_64 engine(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto psi = random_site_spinor<double>(engine);
    for (int mu : {0, 1, 2, 3, 5}) CHECK(gamma_apply(mu, gamma_apply(mu, psi)) == psi);
    for (int mu = 0; mu < 4; ++mu) {
      for (int nu = mu + 1; nu < 4; ++nu) {
        const auto anti = add(gamma_apply(mu, gamma_apply(nu, psi)), gamma_apply(nu, gamma_apply(mu, psi)));
        CHECK(spinor_distance(anti, Spinor<double>{}) <= 4 * kEps);
      }
      const auto g5 = add(gamma_apply(5, gamma_apply(mu, psi)), gamma_apply(mu, gamma_apply(5, psi)));
      CHECK(spinor_distance(g5, Spinor<double>{}) <= 4 * kEps);
    }
    // gamma_5 = gamma_0 gamma_1 gamma_2 gamma_3 in this basis (no extra phase).
    const auto product = gamma_apply(0, gamma_apply(1, gamma_apply(2, gamma_apply(3, psi))));
    CHECK(spinor_distance(product, gamma_apply(5, psi)) <= 4 * kEps);
  }
}

TEST_CASE("gamma_0 gamma_1 anticommute on a random spinor") {
  std::mt19937_64 engine(13);
  const auto psi = random_site_spinor<double>(engine);
  const auto lhs = gamma_apply(0, gamma_apply(1, psi));
  const auto rhs = scale_spinor(-1.0, gamma_apply(1, gamma_apply(0, psi)));
  CHECK(lhs == rhs);
}

TEST_CASE("su3_mulvec with the identity returns the input") {
  const auto u = Su3Matrix<double>::identity();
  const ColorVector<double> v{Complex<double>{1, 0}, Complex<double>{0, 1}, Complex<double>{0, 0}};
  CHECK(su3_mulvec(u, v, false) == v);
  CHECK(su3_mulvec(u, v, true) == v);
}

TEST_CASE("su3_mulvec matches a scalar-loop std::complex oracle exactly") {
  std::mt19937_64 engine(21);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int trial = 0; trial < 20; ++trial) {
    Su3Matrix<double> u;
    for (auto& z : u.e) z = {dist(engine), dist(engine)};
    ColorVector<double> v;
    for (auto& z : v) z = {dist(engine), dist(engine)};

    for (bool dagger : {false, true}) {
      const auto got = su3_mulvec(u, v, dagger);
      for (std::size_t i = 0; i < 3; ++i) {
        std::complex<double> acc;
        for (std::size_t j = 0; j < 3; ++j) {
          const auto& e = dagger ? u(j, i) : u(i, j);
          std::complex<double> m(e.re, dagger ? -e.im : e.im);
          const std::complex<double> term = m * std::complex<double>(v[j].re, v[j].im);
          acc = j == 0 ? term : acc + term;
        }
        CHECK(got[i].re == acc.real());
        CHECK(got[i].im == acc.imag());
      }
    }
  }
}

TEST_CASE("random_su3 is deterministic, unitary and special") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto u = random_su3(seed);
    CHECK(u == random_su3(seed));
    CHECK(unitarity_deviation(u) <= 10 * kEps);
    CHECK(determinant_deviation(u) <= 100 * kEps);
  }
  CHECK_FALSE(random_su3(1) == random_su3(2));
}

TEST_CASE("U^dagger (U v) recovers v") {
  std::mt19937_64 engine(5);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto u = random_su3(seed);
    ColorVector<double> v;
    double vnorm = 0.0;
    for (auto& z : v) {
      z = {dist(engine), dist(engine)};
      vnorm += norm2(z);
    }
    const auto back = su3_mulvec(u, su3_mulvec(u, v, false), true);
    double err = 0.0;
    for (std::size_t i = 0; i < 3; ++i) err += norm2(back[i] - v[i]);
    CHECK(std::sqrt(err) <= 10 * kEps * std::sqrt(vnorm));
  }
}

TEST_CASE("high to low to high conversion stays within single-precision rounding") {
  std::mt19937_64 engine(8);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = random_site_spinor<double>(engine);
    const auto back = precision_cast<double>(precision_cast<float>(s));
    for (std::size_t k = 0; k < kSpinorComponents; ++k) {
      const double bound = std::numeric_limits<float>::epsilon() / 2;
      CHECK(std::abs(back.c[k].re - s.c[k].re) <= bound * std::abs(s.c[k].re));
      CHECK(std::abs(back.c[k].im - s.c[k].im) <= bound * std::abs(s.c[k].im));
    }
  }
  const auto u = random_su3(3);
  const auto ul = precision_cast<float>(u);
  CHECK(unitarity_deviation(ul) <= 10 * std::numeric_limits<float>::epsilon());
  CHECK(determinant_deviation(ul) <= 100 * std::numeric_limits<float>::epsilon());
}
