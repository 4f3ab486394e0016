#include "dwho/quadrature.hpp"

#include <array>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace dwho {

GaussLegendreRule gauss_legendre(int order) {
  if (order < 1 || order > 128) throw std::invalid_argument("gauss_legendre: order must be in [1, 128]");
  const int n = order;
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    // Tricomi initial guess for the i-th largest root.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged root.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[n - 1 - i] = x;
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

NodeSet composite_gauss_legendre(double a, double b, int panels, int order) {
  if (!(a < b)) throw std::invalid_argument("composite_gauss_legendre: empty interval");
  if (panels < 1) throw std::invalid_argument("composite_gauss_legendre: need at least one panel");
  const GaussLegendreRule& rule = detail::cached_rule(order);
  NodeSet set;
  set.nodes.reserve(static_cast<std::size_t>(panels) * order);
  set.weights.reserve(set.nodes.capacity());
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double half = 0.5 * width;
    const double mid = lo + half;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      set.nodes.push_back(mid + half * rule.nodes[i]);
      set.weights.push_back(half * rule.weights[i]);
    }
  }
  return set;
}

namespace detail {

const GaussLegendreRule& cached_rule(int order) {
  if (order < 1 || order > 128) throw std::invalid_argument("gauss_legendre: order must be in [1, 128]");
  static std::array<GaussLegendreRule, 129> rules;
  static std::array<std::once_flag, 129> flags;
  std::call_once(flags[order], [order] { rules[order] = gauss_legendre(order); });
  return rules[order];
}

}  // namespace detail

}  // namespace dwho
