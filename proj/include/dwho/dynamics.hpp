#pragma once

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include "dwho/hamiltonian.hpp"
#include "dwho/quadrature.hpp"

namespace dwho {

enum class PacketKind { two_term, four_term, custom };

/// Superposition sum_kappa a_kappa Phi_kappa exp(-i E_kappa t / hbar) of
/// coupled eigenstates. Holds the system it was built on.
class Wavepacket {
 public:
  /// a_0 = a_1 = 1/sqrt(2).
  static Wavepacket two_term(std::shared_ptr<const CoupledSystem> system);
  /// a_0 .. a_3 = 1/2; needs at least four eigenstates.
  static Wavepacket four_term(std::shared_ptr<const CoupledSystem> system);
  /// Arbitrary coefficients, one per eigenstate or fewer (missing ones are
  /// zero). Throws std::invalid_argument unless sum |a|^2 = 1 to 1e-12.
  static Wavepacket custom(std::shared_ptr<const CoupledSystem> system, std::vector<std::complex<double>> coeffs);

  PacketKind kind() const noexcept { return kind_; }
  const std::vector<std::complex<double>>& coefficients() const noexcept { return coeffs_; }
  const CoupledSystem& system() const noexcept { return *system_; }
  const std::shared_ptr<const CoupledSystem>& system_ptr() const noexcept { return system_; }
  const SpectralDecomposition& spectrum() const noexcept { return system_->spectrum; }

  /// Product-basis coefficients C_{nu n}(t) in flat order 2n + nu.
  std::vector<std::complex<double>> basis_coefficients(double t) const;

  /// Psi(x, y, t) evaluated pointwise from the basis functions.
  std::complex<double> amplitude(double x, double y, double t) const;
  double density(double x, double y, double t) const { return std::norm(amplitude(x, y, t)); }

 private:
  Wavepacket(std::shared_ptr<const CoupledSystem> system, std::vector<std::complex<double>> coeffs, PacketKind kind);

  std::shared_ptr<const CoupledSystem> system_;
  std::vector<std::complex<double>> coeffs_;
  PacketKind kind_;
};

inline double evaluate_density(const Wavepacket& wp, double x, double y, double t) { return wp.density(x, y, t); }

/// Gamma(t) = |sum |a_kappa|^2 exp(-i Omega_kappa t)|.
double correlation(const Wavepacket& wp, double t);

struct PeriodOptions {
  double threshold = 0.99;
  /// Scan limit; zero picks 50 periods of the slowest nonzero Omega_kappa.
  double horizon = 0.0;
};

/// Two-term packets: exactly 2 pi hbar / (E_1 - E_0). Otherwise the first
/// local maximum of Gamma at t > 0 reaching the threshold, found on a scan
/// of step 2 pi / (100 max Omega) and refined by successive parabolas.
/// Throws std::invalid_argument for a threshold outside (0.9, 1] or a
/// negative horizon, RecurrenceError when nothing qualifies.
double tunneling_period(const Wavepacket& wp, const PeriodOptions& options = {});

/// Quadrature layout for the grid observables. x runs over a composite
/// Gauss-Legendre rule on [-x_half_width, x_half_width] with an even panel
/// count, so x = 0 is a panel edge and P_r is a plain partial sum.
struct GridOptions {
  double x_half_width = 6.0;
  int x_panels = 16;
  int y_panels = 16;
  int order = 16;
  double y_margin = 8.0;  ///< oscillator lengths past the top turning point
};

struct Expectations {
  double x = 0.0;
  double px = 0.0;
  double y = 0.0;
  double py = 0.0;
  /// Real parts of the integrals that define <p_x>, <p_y>, which must vanish.
  double px_residual = 0.0;
  double py_residual = 0.0;
};

struct Uncertainty {
  double dx = 0.0;
  double dpx = 0.0;
  double product = 0.0;
};

/// One row of an observable time series.
struct ObservableRecord {
  double t = 0.0;
  double x_mean = 0.0;
  double px_mean = 0.0;
  double y_mean = 0.0;
  double py_mean = 0.0;
  double pr = 0.0;
  double dx = 0.0;
  double dpx = 0.0;
  double dxdpx = 0.0;
  double gamma_corr = 0.0;
  double norm = 0.0;
};

/// Sampled density on a uniform grid, row-major with x outer.
struct DensityGrid {
  double t = 0.0;
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> values;

  double at(std::size_t ix, std::size_t iy) const { return values[ix * ys.size() + iy]; }
};

struct Peak {
  double x = 0.0;
  double y = 0.0;
  double density = 0.0;
};

/// Grid observables of one packet. Basis values and derivatives are
/// tabulated once on the quadrature nodes; each time slice then costs one
/// pass over the grid. All methods are const and safe to call concurrently.
class Observables {
 public:
  explicit Observables(Wavepacket wp, const GridOptions& options = {});

  const Wavepacket& packet() const noexcept { return wp_; }

  /// Integral of |Psi|^2.
  double norm(double t) const;
  double tunneling_probability(double t) const;
  Expectations expectations(double t) const;
  /// Throws std::runtime_error on a negative variance.
  Uncertainty uncertainty(double t) const;
  /// Everything at once; the correlation column is the closed form.
  ObservableRecord sample(double t) const;

  /// rho_x at arbitrary x (integral over y on the y nodes).
  std::vector<double> marginal_x(double t, std::span<const double> xs) const;
  /// rho_y at arbitrary y (integral over x on the x nodes).
  std::vector<double> marginal_y(double t, std::span<const double> ys) const;

  const NodeSet& x_nodes() const noexcept { return xq_; }
  const NodeSet& y_nodes() const noexcept { return yq_; }

 private:
  struct Accumulated;
  Accumulated accumulate(double t) const;

  Wavepacket wp_;
  NodeSet xq_;
  NodeSet yq_;
  int n_levels_;
  std::vector<double> phi_[2];
  std::vector<double> dphi_[2];
  std::vector<std::vector<double>> psi_;   // [n][j]
  std::vector<std::vector<double>> dpsi_;  // [n][j]
  std::vector<double> wy_y_;
  std::vector<double> wy_y2_;

  friend struct EhrenfestReport ehrenfest_check(const Observables& obs, int samples);
};

/// Uniform snapshot grid: x in [-x_half_width, x_half_width], y in
/// [-s, s] with s = g (sqrt(2N + 1) + 4), nx * ny points.
DensityGrid density_grid(const Wavepacket& wp, double t, int nx = 121, int ny = 121, double x_half_width = 3.0);

/// Argmax of a density grid, then compass-search refinement of the
/// pointwise density down to `tolerance` in both coordinates.
Peak locate_peak(const Wavepacket& wp, const DensityGrid& grid, double tolerance = 1e-9);

/// Times k T / (samples - 1), k = 0 .. samples - 1.
std::vector<double> uniform_times(double period, int samples);

/// Observables at every time, fanned out over `jobs` threads; output in input order.
std::vector<ObservableRecord> observable_series(const Observables& obs, std::span<const double> times, int jobs = 1);

/// Residuals of the closed equations of motion of a two-term packet.
/// a_x = <Phi_0|x|Phi_1>, b_x = <Phi_0|d/dx|Phi_1>, both by grid quadrature.
struct EhrenfestReport {
  double omega1 = 0.0;
  double a_x = 0.0;
  double b_x = 0.0;
  /// Omega_1 a_x against hbar b_x / M.
  double velocity_lhs = 0.0;
  double velocity_rhs = 0.0;
  double velocity_identity_residual = 0.0;
  /// hbar Omega_1 b_x against <Phi_0| dU/dx |Phi_1> with the literal force
  /// V'(x) - c d x^(d-1) y.
  double force_lhs = 0.0;
  double force_rhs = 0.0;
  double force_identity_residual = 0.0;
  /// Same left side against the force the truncated basis actually
  /// carries, <Phi_0|[d/dx, H]|Phi_1> built from the basis matrices.
  double basis_force_rhs = 0.0;
  double basis_force_residual = 0.0;
  /// Largest relative mismatch of the finite-difference time derivatives of
  /// <x>, <p_x> against the closed linear system, over the sampled times.
  double velocity_equation_residual = 0.0;
  double force_equation_residual = 0.0;
  /// Largest |(<x>/a_x)^2 + (<p_x>/(hbar b_x))^2 - 1| over the sampled times.
  double ellipse_residual = 0.0;
};

/// Requires a two-term packet with real coefficients a_0 = a_1 = 1/sqrt(2);
/// throws std::invalid_argument otherwise. `samples` times are spread over
/// one period for the finite-difference and ellipse checks.
EhrenfestReport ehrenfest_check(const Observables& obs, int samples = 16);

}  // namespace dwho
