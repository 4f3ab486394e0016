#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "dwho/analysis.hpp"

using namespace dwho;

namespace {

CoupledModel model_for(double c, Coupling d, int n = 1, double m = 1.0, double alpha = 10.0) {
  ModelParameters p;
  p.c = c;
  p.order = d;
  p.cutoff = n;
  p.mass = m;
  p.alpha = alpha;
  return make_model(p);
}

double spring(const CoupledModel& m) { return m.ho.mass() * m.ho.omega() * m.ho.omega(); }

}  // namespace

TEST_CASE("composite potential values") {
  const CoupledModel m = model_for(1.0, Coupling::linear);
  CHECK(composite_potential(0.0, 0.0, m) == doctest::Approx(-2.0));
  CHECK(std::abs(composite_potential(1.4120, 1.8959, m) - -9.438) < 1e-3);
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> pick(-2.5, 2.5);
  for (Coupling d : {Coupling::linear, Coupling::quadratic}) {
    const CoupledModel md = model_for(0.8, d);
    for (int i = 0; i < 30; ++i) {
      const double x = pick(rng), y = pick(rng), h = 1e-6;
      const double expected = md.dw.potential(x) + 0.5 * spring(md) * y * y - 0.8 * std::pow(x, static_cast<int>(d)) * y;
      CHECK(composite_potential(x, y, md) == doctest::Approx(expected).epsilon(1e-13));
      const PotentialGradient g = composite_gradient(x, y, md);
      CHECK(g.dx == doctest::Approx((composite_potential(x + h, y, md) - composite_potential(x - h, y, md)) / (2 * h)).epsilon(1e-6).scale(1.0));
      CHECK(g.dy == doctest::Approx((composite_potential(x, y + h, md) - composite_potential(x, y - h, md)) / (2 * h)).epsilon(1e-6).scale(1.0));
    }
  }
}

TEST_CASE("minima of the uncoupled and linearly coupled potentials") {
  const auto free_minima = find_minima(model_for(0.0, Coupling::linear));
  REQUIRE(free_minima.size() == 2);
  CHECK(free_minima[0].x == doctest::Approx(-1.38433).epsilon(1e-5));
  CHECK(free_minima[1].x == doctest::Approx(1.38433).epsilon(1e-5));
  for (const auto& m : free_minima) {
    CHECK(m.y == 0.0);
    CHECK(std::abs(m.value - -8.125) < 1e-3);
  }
  const auto lin = find_minima(model_for(1.0, Coupling::linear));
  REQUIRE(lin.size() == 2);
  CHECK(std::abs(lin[1].x - 1.4120) < 1e-4);
  CHECK(std::abs(lin[1].y - 1.8959) < 1e-4);
  CHECK(std::abs(lin[0].x - -1.4120) < 1e-4);
  CHECK(std::abs(lin[0].y - -1.8959) < 1e-4);
  CHECK(std::abs(lin[0].value - -9.438) < 1e-3);
}

TEST_CASE("quadratic-coupling minima lie on the stationary valley") {
  const CoupledModel m = model_for(1.0, Coupling::quadratic);
  const auto minima = find_minima(m);
  REQUIRE(minima.size() == 2);
  CHECK(minima[0].y == doctest::Approx(minima[1].y));
  CHECK(minima[0].y > 0.0);
  // Brute-force oracle: along y = c x^2 / k the potential is V(x) - c^2 x^4 / 2k.
  double best_x = 0.0, best = 1e300;
  for (int i = 0; i <= 300000; ++i) {
    const double x = 3.0 * i / 300000;
    const double w = m.dw.potential(x) - std::pow(x, 4) / (2 * spring(m));
    if (w < best) {
      best = w;
      best_x = x;
    }
  }
  CHECK(std::abs(minima[1].x - best_x) < 2e-5);
  CHECK(minima[1].value == doctest::Approx(best).epsilon(1e-9));
  CHECK(minima[1].x == doctest::Approx(1.41).epsilon(0.1));
}

TEST_CASE("minima invariants across parameters") {
  for (Coupling d : {Coupling::linear, Coupling::quadratic}) {
    for (double c : {0.0, 0.3, 1.0, 1.7}) {
      for (double mass : {0.1, 1.0}) {
        CAPTURE(static_cast<int>(d));
        CAPTURE(c);
        CAPTURE(mass);
        const CoupledModel m = model_for(c, d, 1, mass);
        const auto minima = find_minima(m);
        REQUIRE(!minima.empty());
        for (std::size_t k = 1; k < minima.size(); ++k) {
          CHECK(minima[k].value >= minima[k - 1].value - 1e-9);
        }
        for (const auto& p : minima) {
          const PotentialGradient g = composite_gradient(p.x, p.y, m);
          CHECK(std::hypot(g.dx, g.dy) < 1e-8);
          CHECK(std::abs(p.y - c * std::pow(p.x, static_cast<int>(d)) / spring(m)) < 1e-8);
          const double mx = -p.x, my = d == Coupling::linear ? -p.y : p.y;
          bool mirrored = false;
          for (const auto& q : minima) {
            if (std::abs(q.x - mx) < 1e-8 && std::abs(q.y - my) < 1e-8 && std::abs(q.value - p.value) < 1e-8) mirrored = true;
          }
          CHECK(mirrored);
        }
      }
    }
  }
}

TEST_CASE("period against c") {
  const std::vector<double> cs{0.0, 1.0};
  const SweepResult r = sweep_c(model_for(0.0, Coupling::linear), cs);
  CHECK(r.parameter == "c");
  CHECK(r.periods[0] == doctest::Approx(2 * std::numbers::pi / 0.0862994965).epsilon(1e-8));
  CHECK(std::abs(r.periods[0] - 72.80) < 0.01);
  CHECK(std::abs(r.periods[1] - 158.73) < 0.05);
  CHECK(r.alpha == doctest::Approx(10.0));

  std::vector<double> grid;
  for (int k = 0; k <= 40; ++k) grid.push_back(0.05 * k);
  for (auto [m, alpha] : {std::pair{1.0, 10.0}, {0.1, 10.0}, {1.0, 2.0}}) {
    const SweepResult s = sweep_c(model_for(0.0, Coupling::linear, 1, m, alpha), grid, 3);
    REQUIRE(s.periods.size() == grid.size());
    for (std::size_t k = 1; k < grid.size(); ++k) CHECK(s.periods[k] >= s.periods[k - 1]);
    for (double t : s.periods) CHECK(t > 0.0);
  }
  CHECK_THROWS_AS(sweep_c(model_for(0.0, Coupling::linear), std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_c(model_for(0.0, Coupling::linear), std::vector<double>{-1.0}), std::invalid_argument);
}

TEST_CASE("period against N") {
  const std::vector<int> ns{0, 1, 5};
  const SweepResult r = sweep_N(model_for(1.0, Coupling::linear, 1, 1.0, 2.0), ns);
  CHECK(r.parameter == "N");
  CHECK(std::abs(r.periods[0] - 72.80) < 0.01);
  CHECK(std::abs(r.periods[1] - 1056.6) < 0.1);
  CHECK(std::abs(r.periods[2] - 68046.6) < 1.0);
  CHECK(std::abs(r.periods[2] / r.periods[1] - 64.4) < 0.5);

  std::vector<int> all;
  for (int n = 0; n <= 10; ++n) all.push_back(n);
  for (auto [m, alpha] : {std::pair{1.0, 10.0}, {0.1, 10.0}, {1.0, 2.0}}) {
    const SweepResult s = sweep_N(model_for(1.0, Coupling::linear, 1, m, alpha), all, 2);
    for (std::size_t k = 1; k < all.size(); ++k) CHECK(s.periods[k] >= s.periods[k - 1]);
  }
  // (1, 10): the step from N - 1 to N stays below 1% from N = 6 on; the
  // N = 5 step is 3.5%
  const SweepResult sat = sweep_N(model_for(1.0, Coupling::linear), all);
  for (int n = 6; n <= 10; ++n) CHECK(std::abs(sat.periods[n] - sat.periods[n - 1]) / sat.periods[n] < 0.01);
  CHECK(std::abs(sat.periods[5] - sat.periods[4]) / sat.periods[5] == doctest::Approx(0.0351).epsilon(0.01));

  CHECK_THROWS_AS(sweep_N(model_for(1.0, Coupling::linear), std::vector<int>{11}), std::invalid_argument);
  CHECK_THROWS_AS(sweep_N(model_for(1.0, Coupling::linear), std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("recommended cutoff") {
  const RazavyModel dw;
  CHECK(std::abs(recommend_N(10.0, dw) - 3.5) < 0.05);
  CHECK(std::abs(recommend_N(2.0, dw) - 19.6) < 0.05);
  const auto s = dw.spectrum();
  CHECK(recommend_N(10.0, dw) == doctest::Approx((s.levels[2] - s.levels[0]) / (10.0 * s.splitting) - 0.5));
  CHECK_THROWS_AS(recommend_N(0.0, dw), std::invalid_argument);
}
