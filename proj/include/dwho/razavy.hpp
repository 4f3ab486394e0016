#pragma once

#include <array>

namespace dwho {

/// Lowest doublet levels carried by the double-well basis.
enum class DwLevel : int { ground = 0, excited = 1 };

struct RazavySpectrum {
  std::array<double, 4> levels;  ///< epsilon_0 .. epsilon_3, closed form
  double splitting;              ///< epsilon_1 - epsilon_0
  double doublet_sum;            ///< epsilon_1 + epsilon_0
};

/// Razavy hyperbolic double well
///   V(x) = (hbar^2 / 2M) [ (xi^2/8) cosh 4x - 4 xi cosh 2x - xi^2/8 ]
/// with its quasi-exactly known ground and first excited states. The
/// normalization constants of the two eigenfunctions are fixed at
/// construction by quadrature over [-8, 8]; the object is immutable after.
class RazavyModel {
 public:
  /// Throws std::invalid_argument unless mass, xi and hbar are positive.
  explicit RazavyModel(double mass = 1.0, double xi = 1.0, double hbar = 1.0);

  double mass() const noexcept { return mass_; }
  double xi() const noexcept { return xi_; }
  double hbar() const noexcept { return hbar_; }
  double norm0() const noexcept { return norm_[0]; }
  double norm1() const noexcept { return norm_[1]; }

  /// V(x). Throws DomainError when cosh 4x overflows.
  double potential(double x) const;
  /// dV/dx, closed form.
  double potential_derivative(double x) const;
  /// d^2V/dx^2, closed form.
  double potential_second_derivative(double x) const;

  RazavySpectrum spectrum() const noexcept;

  /// Normalized phi_0 (even, positive) or phi_1 (odd, positive for x > 0).
  /// Throws DomainError when the hyperbolic factors overflow.
  double eigenfunction(DwLevel level, double x) const;
  /// Analytic d phi / dx.
  double eigenfunction_derivative(DwLevel level, double x) const;

  /// Value and derivative in one pass; used to fill basis tables.
  void eigenfunction_with_derivative(DwLevel level, double x, double& value, double& derivative) const;

 private:
  double unnormalized(DwLevel level, double x) const;

  double mass_;
  double xi_;
  double hbar_;
  double scale_;                  // hbar^2 / 2M
  std::array<double, 2> bracket_; // cosh 3x / sinh 3x coefficients
  std::array<double, 2> norm_{1.0, 1.0};
};

// Free-function forms of the module operations.

inline double razavy_potential(double x, const RazavyModel& model) { return model.potential(x); }

inline RazavySpectrum razavy_eigenvalues(const RazavyModel& model) { return model.spectrum(); }

inline double razavy_eigenfunction(DwLevel level, double x, const RazavyModel& model) {
  return model.eigenfunction(level, x);
}

}  // namespace dwho
