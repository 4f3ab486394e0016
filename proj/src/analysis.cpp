#include "dwho/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dwho/parallel.hpp"

namespace dwho {

namespace {

double spring(const CoupledModel& model) {
  const double w = model.ho.omega();
  return model.ho.mass() * w * w;
}

double power(double x, Coupling order) { return order == Coupling::linear ? x : x * x; }

double power_derivative(double x, Coupling order) { return order == Coupling::linear ? 1.0 : 2.0 * x; }

// Newton on dU/dx = 0 in x at fixed y, then the exact y minimizer for that x.
void descend(double& x, double& y, const CoupledModel& model) {
  const double k = spring(model);
  for (int sweep = 0; sweep < 200; ++sweep) {
    for (int it = 0; it < 50; ++it) {
      const double g = model.dw.potential_derivative(x) - model.c * power_derivative(x, model.order) * y;
      const double curvature =
          model.dw.potential_second_derivative(x) - (model.order == Coupling::quadratic ? 2.0 * model.c * y : 0.0);
      if (!(curvature > 0.0)) {
        x -= std::clamp(g, -0.05, 0.05);
      } else {
        x -= std::clamp(g / curvature, -0.1, 0.1);
      }
      if (std::abs(g) < 1e-13) break;
    }
    const double y_new = model.c * power(x, model.order) / k;
    const double shift = std::abs(y_new - y);
    y = y_new;
    if (shift < 1e-13) break;
  }
}

bool newton_polish(double& x, double& y, const CoupledModel& model, double tolerance) {
  const double k = spring(model);
  for (int it = 0; it < 100; ++it) {
    const PotentialGradient g = composite_gradient(x, y, model);
    if (std::hypot(g.dx, g.dy) < tolerance) return true;
    const double hxx =
        model.dw.potential_second_derivative(x) - (model.order == Coupling::quadratic ? 2.0 * model.c * y : 0.0);
    const double hxy = -model.c * power_derivative(x, model.order);
    const double hyy = k;
    const double det = hxx * hyy - hxy * hxy;
    if (det == 0.0) return false;
    x -= (hyy * g.dx - hxy * g.dy) / det;
    y -= (hxx * g.dy - hxy * g.dx) / det;
  }
  const PotentialGradient g = composite_gradient(x, y, model);
  return std::hypot(g.dx, g.dy) < tolerance;
}

bool positive_definite(double x, double y, const CoupledModel& model) {
  const double h = 1e-4;
  auto u = [&](double a, double b) { return composite_potential(a, b, model); };
  const double f = u(x, y);
  const double hxx = (u(x + h, y) - 2.0 * f + u(x - h, y)) / (h * h);
  const double hyy = (u(x, y + h) - 2.0 * f + u(x, y - h)) / (h * h);
  const double hxy = (u(x + h, y + h) - u(x + h, y - h) - u(x - h, y + h) + u(x - h, y - h)) / (4.0 * h * h);
  return hxx > 0.0 && hxx * hyy - hxy * hxy > 0.0;
}

}  // namespace

double composite_potential(double x, double y, const CoupledModel& model) {
  return model.dw.potential(x) + 0.5 * spring(model) * y * y - model.c * power(x, model.order) * y;
}

PotentialGradient composite_gradient(double x, double y, const CoupledModel& model) {
  return {model.dw.potential_derivative(x) - model.c * power_derivative(x, model.order) * y,
          spring(model) * y - model.c * power(x, model.order)};
}

std::vector<PotentialMinimum> find_minima(const CoupledModel& model, const MinimaOptions& options) {
  if (options.grid < 3) throw std::invalid_argument("find_minima: grid must have at least 3 points per axis");
  const int n = options.grid;
  const double xw = options.x_half_width;
  const double yw = 9.0 * model.c / spring(model) + 3.0 * model.ho.length();
  auto coord = [n](double half, int i) { return -half + 2.0 * half * i / (n - 1); };

  std::vector<double> u(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) u[static_cast<std::size_t>(i) * n + j] = composite_potential(coord(xw, i), coord(yw, j), model);
  }
  std::vector<PotentialMinimum> found;
  for (int i = 1; i + 1 < n; ++i) {
    for (int j = 1; j + 1 < n; ++j) {
      const double here = u[static_cast<std::size_t>(i) * n + j];
      bool lowest = true;
      for (int di = -1; di <= 1 && lowest; ++di) {
        for (int dj = -1; dj <= 1; ++dj) {
          if ((di || dj) && u[static_cast<std::size_t>(i + di) * n + j + dj] < here) {
            lowest = false;
            break;
          }
        }
      }
      if (!lowest) continue;
      double x = coord(xw, i), y = coord(yw, j);
      descend(x, y, model);
      if (!newton_polish(x, y, model, options.gradient_tolerance)) continue;
      if (std::abs(x) > xw || std::abs(y) > yw) continue;
      if (!positive_definite(x, y, model)) continue;
      const bool duplicate = std::any_of(found.begin(), found.end(), [&](const PotentialMinimum& m) {
        return std::abs(m.x - x) < 1e-6 && std::abs(m.y - y) < 1e-6;
      });
      if (!duplicate) found.push_back({x + 0.0, y + 0.0, composite_potential(x, y, model)});
    }
  }
  if (found.empty()) throw std::runtime_error("find_minima: no minimum inside the search box");
  std::sort(found.begin(), found.end(), [](const PotentialMinimum& a, const PotentialMinimum& b) {
    if (std::abs(a.value - b.value) > 1e-9) return a.value < b.value;
    return a.x < b.x;
  });
  return found;
}

namespace {

SweepResult blank_result(const CoupledModel& base, const char* parameter, std::size_t count) {
  SweepResult r;
  r.parameter = parameter;
  r.values.resize(count);
  r.periods.resize(count);
  r.omega1.resize(count);
  r.mass = base.ho.mass();
  r.alpha = base.alpha();
  r.order = base.order;
  return r;
}

}  // namespace

SweepResult sweep_c(const CoupledModel& base, std::span<const double> c_values, int jobs) {
  if (c_values.empty()) throw std::invalid_argument("sweep_c: no c values");
  for (double c : c_values) {
    if (!(c >= 0.0)) throw std::invalid_argument("sweep_c: c values must be non-negative");
  }
  const OverlapTable table = overlap_table(base.dw, base.ho);
  SweepResult r = blank_result(base, "c", c_values.size());
  parallel_for(c_values.size(), jobs, [&](std::size_t k) {
    CoupledModel model = base;
    model.c = c_values[k];
    const auto sd = diagonalize(assemble(model, table), model.ho.hbar());
    r.values[k] = c_values[k];
    r.omega1[k] = sd.omega1;
    r.periods[k] = 2.0 * std::numbers::pi / sd.omega1;
  });
  return r;
}

SweepResult sweep_N(const CoupledModel& base, std::span<const int> n_values, int jobs) {
  if (n_values.empty()) throw std::invalid_argument("sweep_N: no N values");
  for (int n : n_values) {
    if (n < 0 || n > kDefaultMaxCutoff) throw std::invalid_argument("sweep_N: N values must lie in [0, 10]");
  }
  const OverlapTable table = overlap_table(base.dw, base.ho);
  SweepResult r = blank_result(base, "N", n_values.size());
  parallel_for(n_values.size(), jobs, [&](std::size_t k) {
    CoupledModel model = base;
    model.cutoff = n_values[k];
    const auto sd = diagonalize(assemble(model, table), model.ho.hbar());
    r.values[k] = n_values[k];
    r.omega1[k] = sd.omega1;
    r.periods[k] = 2.0 * std::numbers::pi / sd.omega1;
  });
  return r;
}

double recommend_N(double alpha, const RazavyModel& dw) {
  if (!(alpha > 0.0)) throw std::invalid_argument("recommend_N: alpha must be positive");
  const RazavySpectrum s = dw.spectrum();
  return (s.levels[2] - s.levels[0]) / (alpha * s.splitting) - 0.5;
}

}  // namespace dwho
