#include "dwho/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "dwho/parallel.hpp"
#include "dwho/simd/kernels.hpp"

namespace dwho {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_system(const std::shared_ptr<const CoupledSystem>& system) {
  if (!system) throw std::invalid_argument("wavepacket: null system");
}

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out[i] = n == 1 ? a : a + (b - a) * i / (n - 1);
  return out;
}

}  // namespace

Wavepacket::Wavepacket(std::shared_ptr<const CoupledSystem> system, std::vector<std::complex<double>> coeffs,
                       PacketKind kind)
    : system_(std::move(system)), coeffs_(std::move(coeffs)), kind_(kind) {}

Wavepacket Wavepacket::two_term(std::shared_ptr<const CoupledSystem> system) {
  require_system(system);
  const double a = 1.0 / std::sqrt(2.0);
  return Wavepacket(std::move(system), {a, a}, PacketKind::two_term);
}

Wavepacket Wavepacket::four_term(std::shared_ptr<const CoupledSystem> system) {
  require_system(system);
  if (system->spectrum.size() < 4) throw std::invalid_argument("four-term packet needs at least four eigenstates");
  return Wavepacket(std::move(system), {0.5, 0.5, 0.5, 0.5}, PacketKind::four_term);
}

Wavepacket Wavepacket::custom(std::shared_ptr<const CoupledSystem> system, std::vector<std::complex<double>> coeffs) {
  require_system(system);
  if (coeffs.empty() || static_cast<int>(coeffs.size()) > system->spectrum.size()) {
    throw std::invalid_argument("wavepacket: coefficient count must be between 1 and the basis size");
  }
  double total = 0.0;
  for (const auto& a : coeffs) total += std::norm(a);
  if (std::abs(total - 1.0) > 1e-12) {
    throw std::invalid_argument("wavepacket: coefficients are not normalized (sum |a|^2 = " + std::to_string(total) +
                                ")");
  }
  return Wavepacket(std::move(system), std::move(coeffs), PacketKind::custom);
}

std::vector<std::complex<double>> Wavepacket::basis_coefficients(double t) const {
  const SpectralDecomposition& sd = spectrum();
  const int dim = sd.size();
  std::vector<std::complex<double>> out(static_cast<std::size_t>(dim));
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const std::complex<double> phased = coeffs_[k] * std::polar(1.0, -sd.energies[k] * t / sd.hbar);
    for (int f = 0; f < dim; ++f) out[f] += phased * sd.vectors(f, k);
  }
  return out;
}

std::complex<double> Wavepacket::amplitude(double x, double y, double t) const {
  const auto c = basis_coefficients(t);
  const int levels = system_->model.cutoff + 1;
  std::vector<double> psi(static_cast<std::size_t>(levels));
  system_->model.ho.wavefunctions(y, psi);
  const double phi0 = system_->model.dw.eigenfunction(DwLevel::ground, x);
  const double phi1 = system_->model.dw.eigenfunction(DwLevel::excited, x);
  std::complex<double> sum = 0.0;
  for (int n = 0; n < levels; ++n) sum += (c[2 * n] * phi0 + c[2 * n + 1] * phi1) * psi[n];
  return sum;
}

double correlation(const Wavepacket& wp, double t) {
  const SpectralDecomposition& sd = wp.spectrum();
  std::complex<double> sum = 0.0;
  const auto& a = wp.coefficients();
  for (std::size_t k = 0; k < a.size(); ++k) sum += std::norm(a[k]) * std::polar(1.0, -sd.omega(static_cast<int>(k)) * t);
  return std::abs(sum);
}

double tunneling_period(const Wavepacket& wp, const PeriodOptions& options) {
  if (!(options.threshold > 0.9 && options.threshold <= 1.0)) {
    throw std::invalid_argument("tunneling_period: threshold must lie in (0.9, 1]");
  }
  if (!(options.horizon >= 0.0)) throw std::invalid_argument("tunneling_period: horizon must be positive");
  const SpectralDecomposition& sd = wp.spectrum();
  if (wp.kind() == PacketKind::two_term) {
    if (!(sd.omega1 > 0.0)) throw std::domain_error("tunneling_period: degenerate lowest doublet");
    return kTwoPi / sd.omega1;
  }

  double max_omega = 0.0;
  double min_omega = 0.0;
  const auto& a = wp.coefficients();
  for (std::size_t k = 1; k < a.size(); ++k) {
    if (std::norm(a[k]) == 0.0) continue;
    const double w = sd.omega(static_cast<int>(k));
    if (w <= 0.0) continue;
    max_omega = std::max(max_omega, w);
    min_omega = min_omega == 0.0 ? w : std::min(min_omega, w);
  }
  if (max_omega == 0.0) throw std::domain_error("tunneling_period: packet has no nonzero frequencies");
  const double step = kTwoPi / (100.0 * max_omega);
  const double horizon = options.horizon > 0.0 ? options.horizon : 50.0 * kTwoPi / min_omega;

  auto gamma = [&](double t) { return correlation(wp, t); };
  double best_time = 0.0;
  double best_value = -1.0;
  double g_prev = gamma(0.0);
  double g_here = gamma(step);
  for (long k = 1; k * step < horizon; ++k) {
    const double g_next = gamma((k + 1) * step);
    if (g_here >= g_prev && g_here > g_next) {
      double tc = k * step;
      double h = step;
      while (h > 1e-13 * std::max(1.0, tc)) {
        const double fm = gamma(tc - h), f0 = gamma(tc), fp = gamma(tc + h);
        const double curvature = fm - 2.0 * f0 + fp;
        if (curvature < 0.0) tc += std::clamp(0.5 * h * (fm - fp) / curvature, -h, h);
        h *= 0.25;
      }
      const double peak = gamma(tc);
      if (peak >= options.threshold) return tc;
      if (peak > best_value) {
        best_value = peak;
        best_time = tc;
      }
    }
    g_prev = g_here;
    g_here = g_next;
  }
  throw RecurrenceError("tunneling_period: no recurrence with Gamma >= " + std::to_string(options.threshold) +
                            " before t = " + std::to_string(horizon) + "; best Gamma " +
                            std::to_string(best_value) + " at t = " + std::to_string(best_time),
                        best_time, best_value);
}

struct Observables::Accumulated {
  double norm = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  double y1 = 0.0;
  double y2 = 0.0;
  double px_im = 0.0;
  double px_re = 0.0;
  double py_im = 0.0;
  double py_re = 0.0;
  double px2 = 0.0;
  double left = 0.0;
};

Observables::Observables(Wavepacket wp, const GridOptions& options) : wp_(std::move(wp)) {
  if (options.x_panels <= 0 || options.x_panels % 2 != 0) {
    throw std::invalid_argument("observables: x panel count must be even and positive");
  }
  if (options.y_panels <= 0 || !(options.x_half_width > 0.0)) throw std::invalid_argument("observables: bad grid");
  const CoupledModel& model = wp_.system().model;
  n_levels_ = model.cutoff + 1;
  xq_ = composite_gauss_legendre(-options.x_half_width, options.x_half_width, options.x_panels, options.order);
  const double half = model.ho.window(model.cutoff, options.y_margin);
  yq_ = composite_gauss_legendre(-half, half, options.y_panels, options.order);

  for (int nu = 0; nu < 2; ++nu) {
    phi_[nu].resize(xq_.size());
    dphi_[nu].resize(xq_.size());
    for (std::size_t i = 0; i < xq_.size(); ++i) {
      model.dw.eigenfunction_with_derivative(static_cast<DwLevel>(nu), xq_.nodes[i], phi_[nu][i], dphi_[nu][i]);
    }
  }
  psi_.assign(n_levels_, std::vector<double>(yq_.size()));
  dpsi_.assign(n_levels_, std::vector<double>(yq_.size()));
  std::vector<double> v(n_levels_), dv(n_levels_);
  wy_y_.resize(yq_.size());
  wy_y2_.resize(yq_.size());
  for (std::size_t j = 0; j < yq_.size(); ++j) {
    const double y = yq_.nodes[j];
    model.ho.wavefunctions(y, v, dv);
    for (int n = 0; n < n_levels_; ++n) {
      psi_[n][j] = v[n];
      dpsi_[n][j] = dv[n];
    }
    wy_y_[j] = yq_.weights[j] * y;
    wy_y2_[j] = yq_.weights[j] * y * y;
  }
}

Observables::Accumulated Observables::accumulate(double t) const {
  const auto c = wp_.basis_coefficients(t);
  const std::size_t ny = yq_.size();
  std::vector<double> re(ny), im(ny), dxre(ny), dxim(ny), dyre(ny), dyim(ny);
  Accumulated acc;
  for (std::size_t i = 0; i < xq_.size(); ++i) {
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    std::fill(dxre.begin(), dxre.end(), 0.0);
    std::fill(dxim.begin(), dxim.end(), 0.0);
    std::fill(dyre.begin(), dyre.end(), 0.0);
    std::fill(dyim.begin(), dyim.end(), 0.0);
    for (int n = 0; n < n_levels_; ++n) {
      const std::complex<double> alpha = c[2 * n] * phi_[0][i] + c[2 * n + 1] * phi_[1][i];
      const std::complex<double> alpha_x = c[2 * n] * dphi_[0][i] + c[2 * n + 1] * dphi_[1][i];
      simd::complex_axpy(alpha, psi_[n], re, im);
      simd::complex_axpy(alpha, dpsi_[n], dyre, dyim);
      simd::complex_axpy(alpha_x, psi_[n], dxre, dxim);
    }
    const double wx = xq_.weights[i];
    const double x = xq_.nodes[i];
    const double row = wx * simd::weighted_norm2(yq_.weights, re, im);
    acc.norm += row;
    acc.x1 += x * row;
    acc.x2 += x * x * row;
    if (x < 0.0) acc.left += row;
    acc.y1 += wx * simd::weighted_norm2(wy_y_, re, im);
    acc.y2 += wx * simd::weighted_norm2(wy_y2_, re, im);
    const auto [pxi, pxr] = simd::weighted_cross(yq_.weights, re, im, dxre, dxim);
    const auto [pyi, pyr] = simd::weighted_cross(yq_.weights, re, im, dyre, dyim);
    acc.px_im += wx * pxi;
    acc.px_re += wx * pxr;
    acc.py_im += wx * pyi;
    acc.py_re += wx * pyr;
    acc.px2 += wx * simd::weighted_norm2(yq_.weights, dxre, dxim);
  }
  return acc;
}

double Observables::norm(double t) const { return accumulate(t).norm; }

double Observables::tunneling_probability(double t) const { return accumulate(t).left; }

Expectations Observables::expectations(double t) const {
  const Accumulated a = accumulate(t);
  const double hbar = wp_.spectrum().hbar;
  return {a.x1, hbar * a.px_im, a.y1, hbar * a.py_im, hbar * a.px_re, hbar * a.py_re};
}

Uncertainty Observables::uncertainty(double t) const {
  const Accumulated a = accumulate(t);
  const double hbar = wp_.spectrum().hbar;
  const double var_x = a.x2 - a.x1 * a.x1;
  const double var_p = hbar * hbar * (a.px2 - a.px_im * a.px_im);
  if (var_x < 0.0 || var_p < 0.0) {
    throw std::runtime_error("uncertainty: negative variance at t = " + std::to_string(t));
  }
  const double dx = std::sqrt(var_x), dp = std::sqrt(var_p);
  return {dx, dp, dx * dp};
}

ObservableRecord Observables::sample(double t) const {
  const Accumulated a = accumulate(t);
  const double hbar = wp_.spectrum().hbar;
  ObservableRecord r;
  r.t = t;
  r.x_mean = a.x1;
  r.px_mean = hbar * a.px_im;
  r.y_mean = a.y1;
  r.py_mean = hbar * a.py_im;
  r.pr = a.left;
  r.dx = std::sqrt(std::max(0.0, a.x2 - a.x1 * a.x1));
  r.dpx = hbar * std::sqrt(std::max(0.0, a.px2 - a.px_im * a.px_im));
  r.dxdpx = r.dx * r.dpx;
  r.gamma_corr = correlation(wp_, t);
  r.norm = a.norm;
  return r;
}

std::vector<double> Observables::marginal_x(double t, std::span<const double> xs) const {
  const auto c = wp_.basis_coefficients(t);
  const CoupledModel& model = wp_.system().model;
  const std::size_t ny = yq_.size();
  std::vector<double> re(ny), im(ny), out;
  out.reserve(xs.size());
  for (double x : xs) {
    const double phi0 = model.dw.eigenfunction(DwLevel::ground, x);
    const double phi1 = model.dw.eigenfunction(DwLevel::excited, x);
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    for (int n = 0; n < n_levels_; ++n) simd::complex_axpy(c[2 * n] * phi0 + c[2 * n + 1] * phi1, psi_[n], re, im);
    out.push_back(simd::weighted_norm2(yq_.weights, re, im));
  }
  return out;
}

std::vector<double> Observables::marginal_y(double t, std::span<const double> ys) const {
  const auto c = wp_.basis_coefficients(t);
  const CoupledModel& model = wp_.system().model;
  const std::size_t nx = xq_.size();
  std::vector<double> re(nx), im(nx), psi(n_levels_), out;
  out.reserve(ys.size());
  for (double y : ys) {
    model.ho.wavefunctions(y, psi);
    std::complex<double> beta[2] = {0.0, 0.0};
    for (int n = 0; n < n_levels_; ++n) {
      beta[0] += c[2 * n] * psi[n];
      beta[1] += c[2 * n + 1] * psi[n];
    }
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    simd::complex_axpy(beta[0], phi_[0], re, im);
    simd::complex_axpy(beta[1], phi_[1], re, im);
    out.push_back(simd::weighted_norm2(xq_.weights, re, im));
  }
  return out;
}

DensityGrid density_grid(const Wavepacket& wp, double t, int nx, int ny, double x_half_width) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("density_grid: need at least 2 points per axis");
  const CoupledModel& model = wp.system().model;
  const int levels = model.cutoff + 1;
  const double y_scale = model.ho.length() * (std::sqrt(2.0 * model.cutoff + 1.0) + 4.0);
  DensityGrid grid;
  grid.t = t;
  grid.xs = linspace(-x_half_width, x_half_width, nx);
  grid.ys = linspace(-y_scale, y_scale, ny);
  grid.values.resize(static_cast<std::size_t>(nx) * ny);

  std::vector<std::vector<double>> psi(levels, std::vector<double>(ny));
  std::vector<double> v(levels);
  for (int j = 0; j < ny; ++j) {
    model.ho.wavefunctions(grid.ys[j], v);
    for (int n = 0; n < levels; ++n) psi[n][j] = v[n];
  }
  const auto c = wp.basis_coefficients(t);
  std::vector<double> re(ny), im(ny);
  for (int i = 0; i < nx; ++i) {
    const double phi0 = model.dw.eigenfunction(DwLevel::ground, grid.xs[i]);
    const double phi1 = model.dw.eigenfunction(DwLevel::excited, grid.xs[i]);
    std::fill(re.begin(), re.end(), 0.0);
    std::fill(im.begin(), im.end(), 0.0);
    for (int n = 0; n < levels; ++n) simd::complex_axpy(c[2 * n] * phi0 + c[2 * n + 1] * phi1, psi[n], re, im);
    simd::norm2(re, im, std::span<double>(grid.values).subspan(static_cast<std::size_t>(i) * ny, ny));
  }
  return grid;
}

Peak locate_peak(const Wavepacket& wp, const DensityGrid& grid, double tolerance) {
  if (grid.values.empty()) throw std::invalid_argument("locate_peak: empty grid");
  const auto top = std::max_element(grid.values.begin(), grid.values.end());
  const std::size_t flat = static_cast<std::size_t>(top - grid.values.begin());
  double x = grid.xs[flat / grid.ys.size()];
  double y = grid.ys[flat % grid.ys.size()];
  double best = wp.density(x, y, grid.t);
  double hx = grid.xs[1] - grid.xs[0];
  double hy = grid.ys[1] - grid.ys[0];
  while (hx > tolerance || hy > tolerance) {
    bool moved = false;
    const double trial[4][2] = {{x + hx, y}, {x - hx, y}, {x, y + hy}, {x, y - hy}};
    for (const auto& p : trial) {
      const double d = wp.density(p[0], p[1], grid.t);
      if (d > best) {
        best = d;
        x = p[0];
        y = p[1];
        moved = true;
      }
    }
    if (!moved) {
      hx *= 0.5;
      hy *= 0.5;
    }
  }
  return {x, y, best};
}

std::vector<double> uniform_times(double period, int samples) {
  if (samples < 2) throw std::invalid_argument("uniform_times: need at least two samples");
  if (!(period > 0.0)) throw std::invalid_argument("uniform_times: period must be positive");
  return linspace(0.0, period, samples);
}

std::vector<ObservableRecord> observable_series(const Observables& obs, std::span<const double> times, int jobs) {
  for (std::size_t k = 1; k < times.size(); ++k) {
    if (!(times[k] > times[k - 1])) throw std::invalid_argument("observable_series: times must increase strictly");
  }
  std::vector<ObservableRecord> out(times.size());
  parallel_for(times.size(), jobs, [&](std::size_t k) { out[k] = obs.sample(times[k]); });
  return out;
}

EhrenfestReport ehrenfest_check(const Observables& obs, int samples) {
  const Wavepacket& wp = obs.packet();
  const auto& a = wp.coefficients();
  const double expected = 1.0 / std::sqrt(2.0);
  if (a.size() != 2 || std::abs(a[0] - expected) > 1e-15 || std::abs(a[1] - expected) > 1e-15) {
    throw std::invalid_argument("ehrenfest_check: needs the two-term packet with real equal coefficients");
  }
  if (samples < 1) throw std::invalid_argument("ehrenfest_check: samples must be positive");
  const CoupledSystem& sys = wp.system();
  const CoupledModel& model = sys.model;
  const SpectralDecomposition& sd = sys.spectrum;
  const double hbar = sd.hbar;
  const double big_mass = model.dw.mass();
  const int d = static_cast<int>(model.order);

  EhrenfestReport r;
  r.omega1 = sd.omega1;

  const std::size_t ny = obs.yq_.size();
  std::vector<double> f0(ny), f1(ny), df1(ny);
  double force = 0.0;
  for (std::size_t i = 0; i < obs.xq_.size(); ++i) {
    std::fill(f0.begin(), f0.end(), 0.0);
    std::fill(f1.begin(), f1.end(), 0.0);
    std::fill(df1.begin(), df1.end(), 0.0);
    for (int n = 0; n < obs.n_levels_; ++n) {
      const double c0 = sd.vectors(2 * n, 0) * obs.phi_[0][i] + sd.vectors(2 * n + 1, 0) * obs.phi_[1][i];
      const double c1 = sd.vectors(2 * n, 1) * obs.phi_[0][i] + sd.vectors(2 * n + 1, 1) * obs.phi_[1][i];
      const double dc1 = sd.vectors(2 * n, 1) * obs.dphi_[0][i] + sd.vectors(2 * n + 1, 1) * obs.dphi_[1][i];
      for (std::size_t j = 0; j < ny; ++j) {
        f0[j] += c0 * obs.psi_[n][j];
        f1[j] += c1 * obs.psi_[n][j];
        df1[j] += dc1 * obs.psi_[n][j];
      }
    }
    const double x = obs.xq_.nodes[i];
    const double wx = obs.xq_.weights[i];
    const double overlap = simd::weighted_dot(obs.yq_.weights, f0, f1);
    r.a_x += wx * x * overlap;
    r.b_x += wx * simd::weighted_dot(obs.yq_.weights, f0, df1);
    const double dcoupling = model.c * d * (d == 1 ? 1.0 : x);
    force += wx * (model.dw.potential_derivative(x) * overlap - dcoupling * simd::weighted_dot(obs.wy_y_, f0, f1));
  }

  auto relative = [](double lhs, double rhs) {
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    return scale == 0.0 ? 0.0 : std::abs(lhs - rhs) / scale;
  };
  r.velocity_lhs = r.omega1 * r.a_x;
  r.velocity_rhs = hbar * r.b_x / big_mass;
  r.velocity_identity_residual = relative(r.velocity_lhs, r.velocity_rhs);
  r.force_lhs = hbar * r.omega1 * r.b_x;
  r.force_rhs = force;
  r.force_identity_residual = relative(r.force_lhs, r.force_rhs);

  // d/dx within the basis only mixes the doublet: <phi0|d|phi1> = eta = -<phi1|d|phi0>.
  const int dim = model.dimension();
  Matrix dx(dim, dim);
  for (int n = 0; n <= model.cutoff; ++n) {
    dx(2 * n, 2 * n + 1) = sys.table.eta;
    dx(2 * n + 1, 2 * n) = -sys.table.eta;
  }
  const Matrix h = assemble(model, sys.table, std::max(kDefaultMaxCutoff, model.cutoff));
  const Matrix commutator = dx * h;
  const Matrix reverse = h * dx;
  for (int p = 0; p < dim; ++p) {
    for (int q = 0; q < dim; ++q) r.basis_force_rhs += sd.vectors(p, 0) * (commutator(p, q) - reverse(p, q)) * sd.vectors(q, 1);
  }
  r.basis_force_residual = relative(r.force_lhs, r.basis_force_rhs);

  const double period = kTwoPi / r.omega1;
  const double step = period / 1e5;
  const double vel_scale = std::abs(r.omega1 * r.a_x);
  const double force_scale = std::abs(hbar * r.omega1 * r.b_x);
  for (int k = 0; k < samples; ++k) {
    const double t = period * k / samples;
    Expectations e[5];
    for (int s = 0; s < 5; ++s) e[s] = obs.expectations(t + (s - 2) * step);
    const double dxdt = (e[0].x - 8.0 * e[1].x + 8.0 * e[3].x - e[4].x) / (12.0 * step);
    const double dpdt = (e[0].px - 8.0 * e[1].px + 8.0 * e[3].px - e[4].px) / (12.0 * step);
    const double x = e[2].x, p = e[2].px;
    const double predicted_v = r.omega1 * r.a_x / (hbar * r.b_x) * p;
    const double predicted_f = -hbar * r.omega1 * r.b_x / r.a_x * x;
    r.velocity_equation_residual = std::max(r.velocity_equation_residual, std::abs(dxdt - predicted_v) / vel_scale);
    r.force_equation_residual = std::max(r.force_equation_residual, std::abs(dpdt - predicted_f) / force_scale);
    const double u = x / r.a_x, v = p / (hbar * r.b_x);
    r.ellipse_residual = std::max(r.ellipse_residual, std::abs(u * u + v * v - 1.0));
  }
  return r;
}

}  // namespace dwho
