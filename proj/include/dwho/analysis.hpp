#pragma once

#include <span>
#include <string>
#include <vector>

#include "dwho/hamiltonian.hpp"

namespace dwho {

/// U(x, y) = V(x) + m omega^2 y^2 / 2 - c x^d y.
double composite_potential(double x, double y, const CoupledModel& model);

struct PotentialGradient {
  double dx = 0.0;
  double dy = 0.0;
};

PotentialGradient composite_gradient(double x, double y, const CoupledModel& model);

struct PotentialMinimum {
  double x = 0.0;
  double y = 0.0;
  double value = 0.0;
};

struct MinimaOptions {
  int grid = 401;
  double x_half_width = 3.0;
  double gradient_tolerance = 1e-10;
};

/// Local minima of U inside x in [-3, 3], |y| <= 9c/(m omega^2) + 3g:
/// grid seeds refined by coordinate descent (Newton in x, exact in y),
/// polished by 2D Newton, checked for a positive-definite finite-difference
/// Hessian, deduplicated and sorted by value then x.
std::vector<PotentialMinimum> find_minima(const CoupledModel& model, const MinimaOptions& options = {});

/// Parameter sweep over c or N; periods use the two-term definition.
struct SweepResult {
  std::string parameter;  ///< "c" or "N"
  std::vector<double> values;
  std::vector<double> periods;
  std::vector<double> omega1;
  double mass = 1.0;
  double alpha = 0.0;
  Coupling order = Coupling::linear;
};

/// One two-term period per c, N fixed by `base`. Throws std::invalid_argument
/// for an empty list or negative c.
SweepResult sweep_c(const CoupledModel& base, std::span<const double> c_values, int jobs = 1);

/// One two-term period per N in [0, 10]; N = 0 is the uncoupled doublet.
SweepResult sweep_N(const CoupledModel& base, std::span<const int> n_values, int jobs = 1);

/// Oscillator cutoff at which (N + 1/2) hbar omega reaches epsilon_2 - epsilon_0:
/// (epsilon_2 - epsilon_0) / (alpha delta) - 1/2. Throws for alpha <= 0.
double recommend_N(double alpha, const RazavyModel& dw);

}  // namespace dwho
