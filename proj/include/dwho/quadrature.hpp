#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dwho/errors.hpp"

namespace dwho {

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Rule of the given order (number of nodes), 1 <= order <= 128. Nodes are
/// found by Newton iteration on P_n and returned in ascending order.
GaussLegendreRule gauss_legendre(int order);

/// Flattened nodes/weights of a composite rule.
struct NodeSet {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }
};

/// Composite Gauss-Legendre rule: `panels` equal subintervals of [a, b],
/// `order` nodes each.
NodeSet composite_gauss_legendre(double a, double b, int panels, int order);

struct IntegrateOptions {
  int order = 10;
  int max_depth = 48;
};

namespace detail {

const GaussLegendreRule& cached_rule(int order);

template <class F>
double panel_estimate(F& f, double a, double b, const GaussLegendreRule& rule) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  return half * sum;
}

template <class F>
double adaptive(F& f, double a, double b, double whole, double tol, int depth, const IntegrateOptions& opts,
                const GaussLegendreRule& rule) {
  const double mid = 0.5 * (a + b);
  const double left = panel_estimate(f, a, mid, rule);
  const double right = panel_estimate(f, mid, b, rule);
  const double residual = std::abs(left + right - whole);
  if (!std::isfinite(left + right)) {
    throw QuadratureError("integrand not finite on [" + std::to_string(a) + ", " + std::to_string(b) + "]", a, b,
                          residual);
  }
  // Past roundoff level the halves cannot agree any better.
  const double noise = 64.0 * std::numeric_limits<double>::epsilon() * (std::abs(left) + std::abs(right));
  if (residual <= tol || residual <= noise) return left + right;
  if (depth >= opts.max_depth) {
    throw QuadratureError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " +
                              std::to_string(b) + "], residual " + std::to_string(residual),
                          a, b, residual);
  }
  return adaptive(f, a, mid, left, 0.5 * tol, depth + 1, opts, rule) +
         adaptive(f, mid, b, right, 0.5 * tol, depth + 1, opts, rule);
}

}  // namespace detail

/// Adaptive composite Gauss-Legendre estimate of the integral of f over
/// [a, b]. A panel is accepted once the two-half estimate agrees with the
/// whole-panel estimate to within its share of `tol`.
///
/// Throws std::invalid_argument for a >= b or tol <= 0, and QuadratureError
/// when the depth limit is hit or the integrand is not finite.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-10, const IntegrateOptions& opts = {}) {
  if (!(a < b)) throw std::invalid_argument("integrate: lower bound must be below upper bound");
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
  const GaussLegendreRule& rule = detail::cached_rule(opts.order);
  const double whole = detail::panel_estimate(f, a, b, rule);
  return detail::adaptive(f, a, b, whole, tol, 0, opts, rule);
}

}  // namespace dwho
