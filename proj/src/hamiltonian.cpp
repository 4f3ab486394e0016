#include "dwho/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dwho {

double CoupledModel::alpha() const noexcept {
  return ho.hbar() * ho.omega() / dw.spectrum().splitting;
}

void CoupledModel::validate(int max_cutoff) const {
  if (order != Coupling::linear && order != Coupling::quadratic) throw std::invalid_argument("d must be 1 or 2");
  if (!(c >= 0.0)) throw std::invalid_argument("coupling strength c must be non-negative");
  if (cutoff < 0) throw std::invalid_argument("oscillator cutoff N must be non-negative");
  if (cutoff > max_cutoff) {
    throw std::invalid_argument("oscillator cutoff N = " + std::to_string(cutoff) + " exceeds the guard " +
                                std::to_string(max_cutoff));
  }
}

CoupledModel make_model(const ModelParameters& p) {
  RazavyModel dw(p.big_mass, p.xi, p.hbar);
  HoModel ho = HoModel::from_ratio(p.mass, p.alpha, dw);
  CoupledModel model{dw, ho, p.order, p.c, p.cutoff};
  model.validate(std::max(kDefaultMaxCutoff, p.cutoff));
  return model;
}

ZetaCoefficients model_zetas(const CoupledModel& model, const OverlapTable& table) {
  const double delta = model.dw.spectrum().splitting;
  return zeta_coefficients(model.c, model.ho.mass(), model.alpha(), table, delta, model.ho.hbar());
}

Matrix assemble(const CoupledModel& model, const OverlapTable& table, int max_cutoff) {
  model.validate(max_cutoff);
  const auto levels = model.dw.spectrum().levels;
  const ZetaCoefficients z = model_zetas(model, table);
  const int size = model.dimension();
  Matrix h(size, size);
  for (int n = 0; n <= model.cutoff; ++n) {
    for (int nu = 0; nu < 2; ++nu) {
      const int row = BasisIndex{nu, n}.flat();
      h(row, row) = levels[nu] + model.ho.energy(n);
      if (n == model.cutoff) continue;
      // Couple to oscillator level n + 1; sqrt(n + 1) is the ladder factor.
      const double ladder = std::sqrt(n + 1.0);
      int col;
      double strength;
      if (model.order == Coupling::linear) {
        col = BasisIndex{1 - nu, n + 1}.flat();
        strength = z.zeta;
      } else {
        col = BasisIndex{nu, n + 1}.flat();
        strength = nu == 0 ? z.zeta0 : z.zeta1;
      }
      h(row, col) = -strength * ladder;
      h(col, row) = -strength * ladder;
    }
  }
  return h;
}

SpectralDecomposition diagonalize(const Matrix& matrix, double hbar, const JacobiOptions& options) {
  if (matrix.rows() != matrix.cols()) throw std::invalid_argument("diagonalize: matrix must be square");
  if (matrix.asymmetry() > 1e-12) throw std::invalid_argument("diagonalize: matrix is not symmetric");
  JacobiResult jr = jacobi_eigen(matrix, options);
  const std::size_t n = jr.eigenvalues.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return jr.eigenvalues[a] < jr.eigenvalues[b]; });

  SpectralDecomposition sd;
  sd.hbar = hbar;
  sd.sweeps = jr.sweeps;
  sd.energies.resize(n);
  sd.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    sd.energies[k] = jr.eigenvalues[src];
    std::size_t lead = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::abs(jr.eigenvectors(i, src)) > std::abs(jr.eigenvectors(lead, src))) lead = i;
    }
    const double sign = jr.eigenvectors(lead, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) sd.vectors(i, k) = sign * jr.eigenvectors(i, src);
  }
  sd.omega1 = n > 1 ? (sd.energies[1] - sd.energies[0]) / hbar : 0.0;
  return sd;
}

AnalyticN1 analytic_n1(const CoupledModel& model, const ZetaCoefficients& zetas) {
  if (model.cutoff != 1) throw std::invalid_argument("analytic_n1: closed forms exist for N = 1 only");
  const RazavySpectrum s = model.dw.spectrum();
  const double hw = model.ho.hbar() * model.ho.omega();
  const double delta = s.splitting;
  AnalyticN1 out;
  if (model.order == Coupling::linear) {
    if (!(hw > delta)) {
      throw std::invalid_argument("analytic_n1: linear-coupling closed forms assume hbar*omega > delta");
    }
    const double mid = 0.5 * s.doublet_sum + hw;
    const double outer = std::sqrt(0.25 * (hw + delta) * (hw + delta) + zetas.zeta * zetas.zeta);
    const double inner = std::sqrt(0.25 * (hw - delta) * (hw - delta) + zetas.zeta * zetas.zeta);
    out.energies = {mid - outer, mid - inner, mid + inner, mid + outer};
    out.theta1 = 0.5 * std::atan(2.0 * zetas.zeta / (hw + delta));
    out.theta2 = 0.5 * std::atan(2.0 * zetas.zeta / (hw - delta));
    const double c1 = std::cos(out.theta1), s1 = std::sin(out.theta1);
    const double c2 = std::cos(out.theta2), s2 = std::sin(out.theta2);
    // basis order: psi0 phi0, psi0 phi1, psi1 phi0, psi1 phi1
    out.vectors[0] = {c1, 0.0, 0.0, s1};
    out.vectors[1] = {0.0, c2, s2, 0.0};
    out.vectors[2] = {0.0, -s2, c2, 0.0};
    out.vectors[3] = {-s1, 0.0, 0.0, c1};
  } else {
    const double r0 = std::sqrt(0.25 * hw * hw + zetas.zeta0 * zetas.zeta0);
    const double r1 = std::sqrt(0.25 * hw * hw + zetas.zeta1 * zetas.zeta1);
    out.energies = {s.levels[0] + hw - r0, s.levels[1] + hw - r1, s.levels[0] + hw + r0, s.levels[1] + hw + r1};
    out.theta1 = 0.5 * std::atan(2.0 * zetas.zeta0 / hw);
    out.theta2 = 0.5 * std::atan(2.0 * zetas.zeta1 / hw);
    const double c1 = std::cos(out.theta1), s1 = std::sin(out.theta1);
    const double c2 = std::cos(out.theta2), s2 = std::sin(out.theta2);
    out.vectors[0] = {c1, 0.0, s1, 0.0};
    out.vectors[1] = {0.0, c2, 0.0, s2};
    out.vectors[2] = {-s1, 0.0, c1, 0.0};
    out.vectors[3] = {0.0, -s2, 0.0, c2};
  }
  return out;
}

std::shared_ptr<const CoupledSystem> solve(const CoupledModel& model, const OverlapTable& table, int max_cutoff) {
  auto system = std::make_shared<CoupledSystem>(CoupledSystem{model, table, model_zetas(model, table), {}});
  system->spectrum = diagonalize(assemble(model, table, max_cutoff), model.ho.hbar());
  return system;
}

std::shared_ptr<const CoupledSystem> solve(const CoupledModel& model, int max_cutoff) {
  return solve(model, overlap_table(model.dw, model.ho), max_cutoff);
}

}  // namespace dwho
