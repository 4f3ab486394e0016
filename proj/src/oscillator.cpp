#include "dwho/oscillator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwho {
namespace {

void check_degree(int n) {
  if (n < 0 || n > kMaxHermiteDegree) {
    throw std::invalid_argument("oscillator level " + std::to_string(n) + " outside [0, " +
                                std::to_string(kMaxHermiteDegree) + "]");
  }
}

}  // namespace

HoModel::HoModel(double mass, double omega, double hbar) : mass_(mass), omega_(omega), hbar_(hbar) {
  if (!(mass > 0.0)) throw std::invalid_argument("HoModel: mass m must be positive");
  if (!(omega > 0.0)) throw std::invalid_argument("HoModel: omega must be positive");
  if (!(hbar > 0.0)) throw std::invalid_argument("HoModel: hbar must be positive");
  length_ = std::sqrt(hbar / (mass * omega));
}

HoModel HoModel::from_ratio(double mass, double alpha, const RazavyModel& dw) {
  if (!(alpha > 0.0)) throw std::invalid_argument("HoModel: alpha must be positive");
  HoModel model(mass, alpha * dw.spectrum().splitting / dw.hbar(), dw.hbar());
  model.alpha_ = alpha;
  return model;
}

double HoModel::energy(int n) const {
  if (n < 0) throw std::invalid_argument("ho_energy: n must be non-negative");
  return (n + 0.5) * hbar_ * omega_;
}

void HoModel::wavefunctions(double y, std::span<double> values, std::span<double> derivatives) const {
  const int count = static_cast<int>(values.size());
  if (count == 0) return;
  check_degree(count - 1);
  // Normalized recurrence: the Gaussian rides along with every term, so
  // nothing overflows for large n or |y|.
  const double z = y / length_;
  values[0] = std::pow(mass_ * omega_ / (std::numbers::pi * hbar_), 0.25) * std::exp(-0.5 * z * z);
  if (count > 1) values[1] = std::sqrt(2.0) * z * values[0];
  for (int n = 1; n + 1 < count; ++n) {
    values[n + 1] = std::sqrt(2.0 / (n + 1)) * z * values[n] - std::sqrt(static_cast<double>(n) / (n + 1)) * values[n - 1];
  }
  if (derivatives.empty()) return;
  // psi_n' = (sqrt(n/2) psi_{n-1} - sqrt((n+1)/2) psi_{n+1}) / length
  // psi_count is needed for the top derivative.
  const int top = count - 1;
  const double next = std::sqrt(2.0 / (top + 1)) * z * values[top] -
                      (top > 0 ? std::sqrt(static_cast<double>(top) / (top + 1)) * values[top - 1] : 0.0);
  for (int n = 0; n < count; ++n) {
    const double below = n > 0 ? std::sqrt(0.5 * n) * values[n - 1] : 0.0;
    const double above = std::sqrt(0.5 * (n + 1)) * (n + 1 < count ? values[n + 1] : next);
    derivatives[n] = (below - above) / length_;
  }
}

double HoModel::wavefunction(int n, double y) const {
  check_degree(n);
  std::vector<double> values(n + 1);
  wavefunctions(y, values);
  return values[n];
}

double HoModel::wavefunction_derivative(int n, double y) const {
  check_degree(n);
  std::vector<double> values(n + 1);
  std::vector<double> derivatives(n + 1);
  wavefunctions(y, values, derivatives);
  return derivatives[n];
}

double HoModel::window(int n_max, double margin) const {
  return length_ * (std::sqrt(2.0 * n_max + 1.0) + margin);
}

double hermite(int n, double z) {
  check_degree(n);
  double previous = 1.0;
  if (n == 0) return previous;
  double current = 2.0 * z;
  for (int k = 1; k < n; ++k) {
    const double next = 2.0 * z * current - 2.0 * k * previous;
    previous = current;
    current = next;
  }
  return current;
}

}  // namespace dwho
