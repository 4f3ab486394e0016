#pragma once

#include <array>
#include <string_view>
#include <utility>

#include "dwho/oscillator.hpp"
#include "dwho/razavy.hpp"

namespace dwho {

/// Matrix-element constants of the truncated basis. All are plain 1D
/// integrals over the double-well or oscillator eigenfunctions.
struct OverlapTable {
  double gamma = 0.0;    ///< <phi0| x |phi1>
  double gamma0 = 0.0;   ///< <phi0| x^2 |phi0>
  double gamma1 = 0.0;   ///< <phi1| x^2 |phi1>
  double eta = 0.0;      ///< <phi0| d/dx |phi1>
  double gamma_y = 0.0;  ///< <psi0| y |psi1>
  double eta_y = 0.0;    ///< <psi0| d/dy |psi1>
  double chi0 = 0.0;     ///< integral of (phi0')^2
  double chi1 = 0.0;     ///< integral of (phi1')^2
  double b = 0.0;        ///< minus the integral of phi0 phi1 over x < 0

  /// (name, value) pairs in the order the `constants` command prints them.
  std::array<std::pair<std::string_view, double>, 9> entries() const {
    return {{{"gamma", gamma},
             {"gamma0", gamma0},
             {"gamma1", gamma1},
             {"eta", eta},
             {"gamma_y", gamma_y},
             {"eta_y", eta_y},
             {"chi0", chi0},
             {"chi1", chi1},
             {"b", b}}};
  }
};

struct OverlapOptions {
  double tolerance = 1e-10;  ///< absolute, per integral
  double x_half_width = 8.0;
};

/// Computes every entry by adaptive quadrature; derivatives of the basis
/// functions are taken in closed form. Propagates QuadratureError.
OverlapTable overlap_table(const RazavyModel& dw, const HoModel& ho, const OverlapOptions& options = {});

/// Coupling energies of the linear (zeta) and quadratic (zeta0, zeta1)
/// matrix elements.
struct ZetaCoefficients {
  double zeta = 0.0;
  double zeta0 = 0.0;
  double zeta1 = 0.0;
};

/// zeta_lambda = c * gamma_lambda * (hbar^2 / (4 m alpha delta))^(1/4),
/// the form that reproduces the 1.485 / 1.776 / 1.885 prefactors.
ZetaCoefficients zeta_coefficients(double c, double m, double alpha, const OverlapTable& table, double delta,
                                   double hbar = 1.0);

}  // namespace dwho
