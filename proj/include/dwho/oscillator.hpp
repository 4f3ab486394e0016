#pragma once

#include <span>

#include "dwho/razavy.hpp"

namespace dwho {

/// Highest oscillator quantum number the recurrences accept.
inline constexpr int kMaxHermiteDegree = 64;

/// Harmonic oscillator of mass m and angular frequency omega, with the
/// frequency usually tied to the double-well splitting by hbar*omega = alpha*delta.
class HoModel {
 public:
  /// Throws std::invalid_argument unless mass, omega and hbar are positive.
  HoModel(double mass, double omega, double hbar = 1.0);

  /// Oscillator with hbar*omega = alpha * (epsilon_1 - epsilon_0) of `dw`.
  static HoModel from_ratio(double mass, double alpha, const RazavyModel& dw);

  double mass() const noexcept { return mass_; }
  double omega() const noexcept { return omega_; }
  double hbar() const noexcept { return hbar_; }
  /// alpha = hbar*omega / delta when built through from_ratio, else 0.
  double alpha() const noexcept { return alpha_; }
  /// Oscillator length sqrt(hbar / (m omega)).
  double length() const noexcept { return length_; }

  double energy(int n) const;
  double wavefunction(int n, double y) const;
  double wavefunction_derivative(int n, double y) const;

  /// Fills values[k] = psi_k(y) and derivatives[k] = psi_k'(y) for
  /// k = 0 .. values.size()-1. `derivatives` may be empty.
  void wavefunctions(double y, std::span<double> values, std::span<double> derivatives = {}) const;

  /// Half-width of the y window holding every psi_n with n <= n_max:
  /// classical turning point plus `margin` oscillator lengths.
  double window(int n_max, double margin = 8.0) const;

 private:
  double mass_;
  double omega_;
  double hbar_;
  double alpha_ = 0.0;
  double length_;
};

/// Physicists' Hermite polynomial H_n(z) by the three-term recurrence.
/// Throws std::invalid_argument for n < 0 or n > kMaxHermiteDegree.
double hermite(int n, double z);

inline double ho_wavefunction(int n, double y, const HoModel& model) { return model.wavefunction(n, y); }

inline double ho_energy(int n, const HoModel& model) { return model.energy(n); }

}  // namespace dwho
