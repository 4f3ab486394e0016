#include "dwho/razavy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "dwho/errors.hpp"
#include "dwho/quadrature.hpp"

namespace dwho {
namespace {

constexpr double kNormHalfWidth = 8.0;

[[noreturn]] void overflow(const char* what, double x) {
  throw DomainError(std::string(what) + ": hyperbolic terms overflow at x = " + std::to_string(x));
}

}  // namespace

RazavyModel::RazavyModel(double mass, double xi, double hbar) : mass_(mass), xi_(xi), hbar_(hbar) {
  if (!(mass > 0.0)) throw std::invalid_argument("RazavyModel: mass M must be positive");
  if (!(xi > 0.0)) throw std::invalid_argument("RazavyModel: xi must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("RazavyModel: hbar must be positive");
  scale_ = hbar * hbar / (2.0 * mass);
  bracket_[0] = 4.0 - xi + 2.0 * std::sqrt(4.0 - 2.0 * xi + xi * xi);
  bracket_[1] = 4.0 + xi + 2.0 * std::sqrt(4.0 + 2.0 * xi + xi * xi);

  for (int level = 0; level < 2; ++level) {
    const auto lv = static_cast<DwLevel>(level);
    const double s = integrate(
        [&](double x) {
          const double f = unnormalized(lv, x);
          return f * f;
        },
        -kNormHalfWidth, kNormHalfWidth, 1e-13);
    norm_[level] = 1.0 / std::sqrt(s);
  }
}

double RazavyModel::potential(double x) const {
  const double c4 = std::cosh(4.0 * x);
  if (!std::isfinite(c4)) overflow("razavy_potential", x);
  return scale_ * (xi_ * xi_ / 8.0 * c4 - 4.0 * xi_ * std::cosh(2.0 * x) - xi_ * xi_ / 8.0);
}

double RazavyModel::potential_derivative(double x) const {
  const double s4 = std::sinh(4.0 * x);
  if (!std::isfinite(s4)) overflow("razavy_potential_derivative", x);
  return scale_ * (xi_ * xi_ / 2.0 * s4 - 8.0 * xi_ * std::sinh(2.0 * x));
}

double RazavyModel::potential_second_derivative(double x) const {
  const double c4 = std::cosh(4.0 * x);
  if (!std::isfinite(c4)) overflow("razavy_potential_second_derivative", x);
  return scale_ * (2.0 * xi_ * xi_ * c4 - 16.0 * xi_ * std::cosh(2.0 * x));
}

RazavySpectrum RazavyModel::spectrum() const noexcept {
  const double r0 = std::sqrt(4.0 - 2.0 * xi_ + xi_ * xi_);
  const double r1 = std::sqrt(4.0 + 2.0 * xi_ + xi_ * xi_);
  RazavySpectrum s{};
  s.levels = {scale_ * (-xi_ - 5.0 - 2.0 * r0), scale_ * (xi_ - 5.0 - 2.0 * r1),
              scale_ * (-xi_ - 5.0 + 2.0 * r0), scale_ * (xi_ - 5.0 + 2.0 * r1)};
  s.splitting = s.levels[1] - s.levels[0];
  s.doublet_sum = s.levels[1] + s.levels[0];
  return s;
}

double RazavyModel::unnormalized(DwLevel level, double x) const {
  const double envelope = std::exp(-xi_ * std::cosh(2.0 * x) / 4.0);
  double poly;
  if (level == DwLevel::ground) {
    poly = 3.0 * xi_ * std::cosh(x) + bracket_[0] * std::cosh(3.0 * x);
  } else {
    poly = 3.0 * xi_ * std::sinh(x) + bracket_[1] * std::sinh(3.0 * x);
  }
  if (!std::isfinite(poly)) overflow("razavy_eigenfunction", x);
  return envelope * poly;
}

double RazavyModel::eigenfunction(DwLevel level, double x) const {
  return norm_[static_cast<int>(level)] * unnormalized(level, x);
}

void RazavyModel::eigenfunction_with_derivative(DwLevel level, double x, double& value,
                                                double& derivative) const {
  const double envelope = std::exp(-xi_ * std::cosh(2.0 * x) / 4.0);
  const double damping = -0.5 * xi_ * std::sinh(2.0 * x);  // d/dx of the exponent
  double poly;
  double dpoly;
  if (level == DwLevel::ground) {
    poly = 3.0 * xi_ * std::cosh(x) + bracket_[0] * std::cosh(3.0 * x);
    dpoly = 3.0 * xi_ * std::sinh(x) + 3.0 * bracket_[0] * std::sinh(3.0 * x);
  } else {
    poly = 3.0 * xi_ * std::sinh(x) + bracket_[1] * std::sinh(3.0 * x);
    dpoly = 3.0 * xi_ * std::cosh(x) + 3.0 * bracket_[1] * std::cosh(3.0 * x);
  }
  if (!std::isfinite(poly) || !std::isfinite(dpoly) || !std::isfinite(damping)) {
    overflow("razavy_eigenfunction_derivative", x);
  }
  const double a = norm_[static_cast<int>(level)];
  value = a * envelope * poly;
  derivative = envelope == 0.0 ? 0.0 : a * envelope * (damping * poly + dpoly);
}

double RazavyModel::eigenfunction_derivative(DwLevel level, double x) const {
  double value;
  double derivative;
  eigenfunction_with_derivative(level, x, value, derivative);
  return derivative;
}

}  // namespace dwho
