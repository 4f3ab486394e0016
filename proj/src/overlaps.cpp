#include "dwho/overlaps.hpp"

#include <cmath>
#include <stdexcept>

#include "dwho/quadrature.hpp"

namespace dwho {

OverlapTable overlap_table(const RazavyModel& dw, const HoModel& ho, const OverlapOptions& options) {
  const double tol = options.tolerance;
  const double xa = -options.x_half_width;
  const double xb = options.x_half_width;

  auto phi0 = [&](double x) { return dw.eigenfunction(DwLevel::ground, x); };
  auto phi1 = [&](double x) { return dw.eigenfunction(DwLevel::excited, x); };
  auto dphi0 = [&](double x) { return dw.eigenfunction_derivative(DwLevel::ground, x); };
  auto dphi1 = [&](double x) { return dw.eigenfunction_derivative(DwLevel::excited, x); };

  OverlapTable t;
  t.gamma = integrate([&](double x) { return phi0(x) * x * phi1(x); }, xa, xb, tol);
  t.gamma0 = integrate([&](double x) { return x * x * phi0(x) * phi0(x); }, xa, xb, tol);
  t.gamma1 = integrate([&](double x) { return x * x * phi1(x) * phi1(x); }, xa, xb, tol);
  t.eta = integrate([&](double x) { return phi0(x) * dphi1(x); }, xa, xb, tol);
  t.chi0 = integrate([&](double x) { return dphi0(x) * dphi0(x); }, xa, xb, tol);
  t.chi1 = integrate([&](double x) { return dphi1(x) * dphi1(x); }, xa, xb, tol);
  t.b = -integrate([&](double x) { return phi0(x) * phi1(x); }, xa, 0.0, tol);

  const double half = ho.window(1);
  t.gamma_y = integrate([&](double y) { return ho.wavefunction(0, y) * y * ho.wavefunction(1, y); }, -half, half, tol);
  t.eta_y = integrate([&](double y) { return ho.wavefunction(0, y) * ho.wavefunction_derivative(1, y); }, -half,
                      half, tol);
  return t;
}

ZetaCoefficients zeta_coefficients(double c, double m, double alpha, const OverlapTable& table, double delta,
                                   double hbar) {
  if (!(m > 0.0) || !(alpha > 0.0)) throw std::invalid_argument("zeta_coefficients: m and alpha must be positive");
  if (!(delta > 0.0)) throw std::invalid_argument("zeta_coefficients: splitting delta must be positive");
  const double scale = c * std::pow(hbar * hbar / (4.0 * m * alpha * delta), 0.25);
  return {scale * table.gamma, scale * table.gamma0, scale * table.gamma1};
}

}  // namespace dwho
