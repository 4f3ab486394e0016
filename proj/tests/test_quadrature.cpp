#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dwho/quadrature.hpp"

using namespace dwho;

TEST_CASE("Gauss-Legendre rules integrate polynomials of degree 2n-1 exactly") {
  for (int order : {1, 2, 3, 5, 8, 16, 32, 64}) {
    CAPTURE(order);
    const GaussLegendreRule rule = gauss_legendre(order);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(order));
    double wsum = 0.0;
    for (double w : rule.weights) wsum += w;
    CHECK(wsum == doctest::Approx(2.0).epsilon(1e-14));
    for (int p = 0; p <= 2 * order - 1; ++p) {
      double sum = 0.0;
      for (int i = 0; i < order; ++i) sum += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = p % 2 == 1 ? 0.0 : 2.0 / (p + 1);
      CHECK(std::abs(sum - exact) < 1e-13);
    }
    for (int i = 1; i < order; ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  }
}

TEST_CASE("rule order is range checked") {
  CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
  CHECK_THROWS_AS(gauss_legendre(129), std::invalid_argument);
}

TEST_CASE("composite rule covers the interval") {
  const NodeSet set = composite_gauss_legendre(-6.0, 6.0, 16, 16);
  CHECK(set.size() == 256);
  double wsum = 0.0;
  for (double w : set.weights) wsum += w;
  CHECK(wsum == doctest::Approx(12.0).epsilon(1e-14));
  double gauss = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) gauss += set.weights[i] * std::exp(-set.nodes[i] * set.nodes[i]);
  CHECK(gauss == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("adaptive integration of smooth and peaked integrands") {
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::exp(-x * x); }, -10.0, 10.0, 1e-13) ==
        doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  // Narrow Lorentzian: the adaptive split must find the peak.
  const double eps = 1e-3;
  const double got = integrate([eps](double x) { return eps / (x * x + eps * eps); }, -1.0, 1.0, 1e-10);
  CHECK(got == doctest::Approx(2.0 * std::atan(1.0 / eps)).epsilon(1e-9));
}

TEST_CASE("random polynomials integrate to their antiderivatives") {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> coef(-3.0, 3.0), bound(-4.0, 4.0);
  for (int trial = 0; trial < 50; ++trial) {
    double c[6];
    for (double& v : c) v = coef(rng);
    double a = bound(rng), b = bound(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 1e-3) continue;
    auto poly = [&](double x) {
      double s = 0.0;
      for (int k = 5; k >= 0; --k) s = s * x + c[k];
      return s;
    };
    auto anti = [&](double x) {
      double s = 0.0;
      for (int k = 5; k >= 0; --k) s += c[k] * std::pow(x, k + 1) / (k + 1);
      return s;
    };
    CHECK(integrate(poly, a, b) == doctest::Approx(anti(b) - anti(a)).epsilon(1e-10).scale(1.0));
  }
}

TEST_CASE("bad arguments and failures are reported") {
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(integrate([](double x) { return 1.0 / x; }, 0.0, 1.0), QuadratureError);
  CHECK_THROWS_AS(integrate([](double) { return std::nan(""); }, 0.0, 1.0), QuadratureError);
}
