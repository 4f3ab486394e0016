#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dwho/oscillator.hpp"
#include "dwho/quadrature.hpp"

using namespace dwho;

namespace {

// Explicit sum H_n(z) = n! sum_m (-1)^m (2z)^(n-2m) / (m! (n-2m)!).
double hermite_sum(int n, double z) {
  double total = 0.0;
  for (int m = 0; 2 * m <= n; ++m) {
    total += std::pow(-1.0, m) * std::pow(2.0 * z, n - 2 * m) / (std::tgamma(m + 1.0) * std::tgamma(n - 2 * m + 1.0));
  }
  return std::tgamma(n + 1.0) * total;
}

double psi_closed(int n, double y, double m, double w) {
  const double z = std::sqrt(m * w) * y;
  return std::pow(m * w / std::numbers::pi, 0.25) / std::sqrt(std::pow(2.0, n) * std::tgamma(n + 1.0)) *
         hermite_sum(n, z) * std::exp(-0.5 * z * z);
}

}  // namespace

TEST_CASE("Hermite recurrence matches the explicit sum") {
  CHECK(hermite(0, 0.3) == 1.0);
  CHECK(hermite(3, 0.5) == doctest::Approx(8 * 0.125 - 12 * 0.5));
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> pick(-2.5, 2.5);
  for (int n = 0; n <= 12; ++n) {
    const double z = pick(rng);
    CHECK(hermite(n, z) == doctest::Approx(hermite_sum(n, z)).epsilon(1e-10));
  }
  CHECK_THROWS_AS(hermite(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(hermite(kMaxHermiteDegree + 1, 0.0), std::invalid_argument);
}

TEST_CASE("wavefunctions match the closed form and are orthonormal") {
  const HoModel ho(1.3, 0.7);
  for (int n = 0; n <= 8; ++n) {
    for (double y : {-2.0, -0.3, 0.0, 0.9, 3.1}) {
      CHECK(ho.wavefunction(n, y) == doctest::Approx(psi_closed(n, y, 1.3, 0.7)).epsilon(1e-11).scale(1.0));
    }
  }
  const double half = ho.window(10);
  for (int n = 0; n <= 10; ++n) {
    for (int k = n; k <= 10; ++k) {
      const double s = integrate([&](double y) { return ho.wavefunction(n, y) * ho.wavefunction(k, y); }, -half, half, 1e-12);
      CHECK(std::abs(s - (n == k ? 1.0 : 0.0)) < 1e-11);
    }
  }
}

TEST_CASE("high levels stay finite and normalized") {
  const HoModel ho(1.0, 1.0);
  const int n = 60;
  const double half = ho.window(n);
  const double s = integrate([&](double y) { return std::pow(ho.wavefunction(n, y), 2); }, -half, half, 1e-11);
  CHECK(s == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::isfinite(ho.wavefunction(n, 30.0)));
}

TEST_CASE("derivatives agree with central differences and the oscillator equation holds") {
  const HoModel ho(0.8, 1.7, 1.0);
  std::vector<double> v(7), d(7);
  for (double y : {-1.4, -0.2, 0.5, 1.9}) {
    ho.wavefunctions(y, v, d);
    for (int n = 0; n < 7; ++n) {
      const double h = 1e-5;
      const double fd = (ho.wavefunction(n, y + h) - ho.wavefunction(n, y - h)) / (2 * h);
      CHECK(d[n] == doctest::Approx(fd).epsilon(1e-7).scale(1.0));
      CHECK(ho.wavefunction_derivative(n, y) == doctest::Approx(d[n]));
      const double hh = 1e-3;
      const double d2 = (ho.wavefunction(n, y + hh) - 2 * v[n] + ho.wavefunction(n, y - hh)) / (hh * hh);
      const double residual = -d2 / (2 * 0.8) + 0.5 * 0.8 * 1.7 * 1.7 * y * y * v[n] - ho.energy(n) * v[n];
      CHECK(std::abs(residual) < 1e-5);
    }
  }
}

TEST_CASE("energy ladder, length and window") {
  const HoModel ho(2.0, 0.5, 1.0);
  CHECK(ho.energy(0) == doctest::Approx(0.25));
  CHECK(ho.energy(3) == doctest::Approx(1.75));
  CHECK(ho_energy(3, ho) == ho.energy(3));
  CHECK(ho.length() == doctest::Approx(1.0));
  CHECK(ho.window(1, 8.0) == doctest::Approx(std::sqrt(3.0) + 8.0));
  CHECK_THROWS_AS(ho.energy(-1), std::invalid_argument);
  CHECK_THROWS_AS(HoModel(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(HoModel(-1.0, 1.0), std::invalid_argument);
}

TEST_CASE("frequency from the double-well ratio") {
  const RazavyModel dw;
  const HoModel ho = HoModel::from_ratio(1.0, 10.0, dw);
  CHECK(ho.hbar() * ho.omega() == doctest::Approx(10.0 * dw.spectrum().splitting));
  CHECK(ho.alpha() == 10.0);
  CHECK(HoModel(1.0, 1.0).alpha() == 0.0);
  CHECK_THROWS_AS(HoModel::from_ratio(1.0, 0.0, dw), std::invalid_argument);
}
