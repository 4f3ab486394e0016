#pragma once

#include <array>
#include <memory>
#include <vector>

#include "dwho/matrix.hpp"
#include "dwho/oscillator.hpp"
#include "dwho/overlaps.hpp"
#include "dwho/razavy.hpp"

namespace dwho {

/// Power of x in the -c x^d y coupling.
enum class Coupling : int { linear = 1, quadratic = 2 };

/// Default guard on the oscillator cutoff; assembly refuses larger N unless
/// the caller raises it explicitly.
inline constexpr int kDefaultMaxCutoff = 10;

/// Flat parameter set of the coupled system, ħ = 1 units by default.
struct ModelParameters {
  double big_mass = 1.0;  ///< M, double-well particle
  double xi = 1.0;
  double hbar = 1.0;
  double mass = 1.0;   ///< m, oscillator
  double alpha = 10.0; ///< hbar*omega / delta
  double c = 1.0;
  Coupling order = Coupling::linear;
  int cutoff = 1;      ///< N, highest oscillator level kept
};

/// Double well + oscillator + coupling, truncated to the lowest doublet
/// times oscillator levels 0..N. N = 0 is the uncoupled reference.
struct CoupledModel {
  RazavyModel dw;
  HoModel ho;
  Coupling order = Coupling::linear;
  double c = 0.0;
  int cutoff = 1;

  int dimension() const noexcept { return 2 * (cutoff + 1); }
  /// hbar*omega / delta, whether or not the oscillator was built from a ratio.
  double alpha() const noexcept;
  /// Throws std::invalid_argument on c < 0, N < 0 or N > max_cutoff.
  void validate(int max_cutoff = kDefaultMaxCutoff) const;
};

CoupledModel make_model(const ModelParameters& p);

/// Product basis state |nu n> = phi_nu(x) psi_n(y), flattened as 2n + nu.
struct BasisIndex {
  int nu = 0;
  int n = 0;

  constexpr int flat() const noexcept { return 2 * n + nu; }
  static constexpr BasisIndex from_flat(int flat) noexcept { return {flat % 2, flat / 2}; }
};

struct SpectralDecomposition {
  std::vector<double> energies;  ///< ascending
  Matrix vectors;                ///< column kappa is the eigenvector of energies[kappa]
  double omega1 = 0.0;           ///< (E_1 - E_0) / hbar
  double hbar = 1.0;
  int sweeps = 0;

  int size() const noexcept { return static_cast<int>(energies.size()); }
  double component(BasisIndex index, int kappa) const { return vectors(index.flat(), kappa); }
  /// Omega_kappa = (E_kappa - E_0) / hbar.
  double omega(int kappa) const { return (energies.at(kappa) - energies.front()) / hbar; }
};

/// Real symmetric matrix of H over the product basis. Diagonal entries are
/// epsilon_nu + (n + 1/2) hbar omega; the linear coupling flips nu and moves
/// n by one with -zeta sqrt(max(n, k)), the quadratic coupling keeps nu and
/// moves n by one with -zeta_nu sqrt(max(n, k)).
Matrix assemble(const CoupledModel& model, const OverlapTable& table, int max_cutoff = kDefaultMaxCutoff);

/// Ascending eigenpairs by cyclic Jacobi. Ties keep the diagonal order; each
/// eigenvector is flipped so its largest-magnitude component is positive.
/// Throws std::invalid_argument for input asymmetric beyond 1e-12.
SpectralDecomposition diagonalize(const Matrix& matrix, double hbar = 1.0, const JacobiOptions& options = {});

ZetaCoefficients model_zetas(const CoupledModel& model, const OverlapTable& table);

/// Closed-form N = 1 eigenpairs. Energies and vectors are listed in the
/// formula order (E_0 .. E_3 of the closed forms), which is ascending except
/// past level crossings. Vectors use the flat basis order.
struct AnalyticN1 {
  std::array<double, 4> energies{};
  double theta1 = 0.0;
  double theta2 = 0.0;
  std::array<std::array<double, 4>, 4> vectors{};
};

/// Requires model.cutoff == 1; for the linear coupling also hbar*omega > delta,
/// where the closed-form vectors are attached to the listed energies.
AnalyticN1 analytic_n1(const CoupledModel& model, const ZetaCoefficients& zetas);

/// Model, constants and spectrum bundled; what the dynamics layer runs on.
struct CoupledSystem {
  CoupledModel model;
  OverlapTable table;
  ZetaCoefficients zetas;
  SpectralDecomposition spectrum;
};

/// assemble + diagonalize with a freshly computed (or supplied) table.
std::shared_ptr<const CoupledSystem> solve(const CoupledModel& model, int max_cutoff = kDefaultMaxCutoff);
std::shared_ptr<const CoupledSystem> solve(const CoupledModel& model, const OverlapTable& table,
                                           int max_cutoff = kDefaultMaxCutoff);

}  // namespace dwho
