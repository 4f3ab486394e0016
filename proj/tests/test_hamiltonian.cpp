#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>

#include "dwho/errors.hpp"
#include "dwho/hamiltonian.hpp"

using namespace dwho;

namespace {

CoupledModel canonical(double c, Coupling d, int n = 1, double m = 1.0, double alpha = 10.0) {
  ModelParameters p;
  p.c = c;
  p.order = d;
  p.cutoff = n;
  p.mass = m;
  p.alpha = alpha;
  return make_model(p);
}

const OverlapTable& table() {
  static const OverlapTable t = [] {
    const CoupledModel m = canonical(0.0, Coupling::linear);
    return overlap_table(m.dw, m.ho);
  }();
  return t;
}

Matrix random_symmetric(std::mt19937& rng, std::size_t n) {
  std::normal_distribution<double> g;
  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) a(i, j) = a(j, i) = g(rng);
  }
  return a;
}

}  // namespace

TEST_CASE("basis flattening") {
  CHECK(BasisIndex{1, 2}.flat() == 5);
  for (int f = 0; f < 22; ++f) CHECK(BasisIndex::from_flat(f).flat() == f);
  CHECK(canonical(1.0, Coupling::linear, 3).dimension() == 8);
}

TEST_CASE("linear coupling matrix for N = 1") {
  const CoupledModel m = canonical(1.0, Coupling::linear);
  const Matrix h = assemble(m, table());
  const ZetaCoefficients z = model_zetas(m, table());
  CHECK(z.zeta == doctest::Approx(0.8351).epsilon(1e-4));
  const auto eps = m.dw.spectrum().levels;
  const double hw = m.ho.hbar() * m.ho.omega();
  // rows: psi0 phi0, psi0 phi1, psi1 phi0, psi1 phi1
  const double expected[4][4] = {{eps[0] + 0.5 * hw, 0, 0, -z.zeta},
                                 {0, eps[1] + 0.5 * hw, -z.zeta, 0},
                                 {0, -z.zeta, eps[0] + 1.5 * hw, 0},
                                 {-z.zeta, 0, 0, eps[1] + 1.5 * hw}};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) CHECK(h(i, j) == doctest::Approx(expected[i][j]).epsilon(1e-15));
  }
}

TEST_CASE("selection rules and structure for larger N") {
  const CoupledModel quad = canonical(0.7, Coupling::quadratic, 4);
  const Matrix h = assemble(quad, table());
  const ZetaCoefficients z = model_zetas(quad, table());
  CHECK(h.asymmetry() == 0.0);
  CHECK(h(BasisIndex{1, 2}.flat(), BasisIndex{1, 1}.flat()) == doctest::Approx(-z.zeta1 * std::sqrt(2.0)));
  CHECK(h(BasisIndex{0, 3}.flat(), BasisIndex{0, 4}.flat()) == doctest::Approx(-z.zeta0 * 2.0));
  // quadratic coupling never mixes nu = 0 with nu = 1
  for (int i = 0; i < quad.dimension(); ++i) {
    for (int j = 0; j < quad.dimension(); ++j) {
      if (BasisIndex::from_flat(i).nu != BasisIndex::from_flat(j).nu) CHECK(h(i, j) == 0.0);
    }
  }
  const CoupledModel lin = canonical(0.7, Coupling::linear, 4);
  const Matrix hl = assemble(lin, table());
  CHECK(hl(BasisIndex{0, 3}.flat(), BasisIndex{1, 4}.flat()) == doctest::Approx(-model_zetas(lin, table()).zeta * 2.0));
  for (int i = 0; i < lin.dimension(); ++i) {
    for (int j = 0; j < lin.dimension(); ++j) {
      const auto a = BasisIndex::from_flat(i), b = BasisIndex::from_flat(j);
      if (i != j && !(a.nu != b.nu && std::abs(a.n - b.n) == 1)) CHECK(hl(i, j) == 0.0);
    }
  }
}

TEST_CASE("uncoupled matrix is diagonal") {
  for (int n : {0, 1, 5}) {
    const CoupledModel m = canonical(0.0, Coupling::linear, n);
    const Matrix h = assemble(m, table());
    const auto eps = m.dw.spectrum().levels;
    for (int i = 0; i < m.dimension(); ++i) {
      for (int j = 0; j < m.dimension(); ++j) {
        const auto b = BasisIndex::from_flat(i);
        CHECK(h(i, j) == (i == j ? eps[b.nu] + m.ho.energy(b.n) : 0.0));
      }
    }
  }
}

TEST_CASE("cutoff guard and validation") {
  CoupledModel m = canonical(1.0, Coupling::linear, 1);
  m.cutoff = 11;
  CHECK_THROWS_AS(assemble(m, table()), std::invalid_argument);
  CHECK(assemble(m, table(), 12).rows() == 24);
  m.cutoff = -1;
  CHECK_THROWS_AS(assemble(m, table()), std::invalid_argument);
  m.cutoff = 1;
  m.c = -0.1;
  CHECK_THROWS_AS(assemble(m, table()), std::invalid_argument);
  ModelParameters p;
  p.order = static_cast<Coupling>(3);
  CHECK_THROWS_WITH_AS(make_model(p), "d must be 1 or 2", std::invalid_argument);
}

TEST_CASE("Jacobi eigenpairs of random symmetric matrices") {
  std::mt19937 rng(2718);
  for (std::size_t n : {1u, 2u, 3u, 6u, 12u, 22u}) {
    CAPTURE(n);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix a = random_symmetric(rng, n);
      const SpectralDecomposition sd = diagonalize(a);
      const Matrix& v = sd.vectors;
      const Matrix vtv = transpose(v) * v;
      const Matrix av = a * v;
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        sum += sd.energies[k];
        if (k > 0) CHECK(sd.energies[k] >= sd.energies[k - 1]);
        std::size_t lead = 0;
        for (std::size_t i = 0; i < n; ++i) {
          CHECK(std::abs(vtv(i, k) - (i == k ? 1.0 : 0.0)) < 1e-10);
          CHECK(std::abs(av(i, k) - sd.energies[k] * v(i, k)) < 1e-10 * a.frobenius_norm());
          if (std::abs(v(i, k)) > std::abs(v(lead, k))) lead = i;
        }
        CHECK(v(lead, k) > 0.0);
      }
      CHECK(sum == doctest::Approx(a.trace()).epsilon(1e-10).scale(1.0));
    }
  }
}

TEST_CASE("diagonalize edge cases") {
  const SpectralDecomposition id = diagonalize(Matrix::identity(4));
  CHECK(id.vectors == Matrix::identity(4));
  CHECK(id.omega1 == 0.0);
  Matrix two(2, 2);
  two(0, 0) = 2.0;
  two(0, 1) = two(1, 0) = 1.0;
  two(1, 1) = 2.0;
  const SpectralDecomposition sd = diagonalize(two);
  CHECK(sd.energies[0] == doctest::Approx(1.0));
  CHECK(sd.energies[1] == doctest::Approx(3.0));
  CHECK(std::abs(sd.vectors(0, 1)) == doctest::Approx(1.0 / std::sqrt(2.0)));
  Matrix skew = two;
  skew(0, 1) += 1e-9;
  CHECK_THROWS_AS(diagonalize(skew), std::invalid_argument);
  CHECK_THROWS_AS(diagonalize(Matrix(2, 3)), std::invalid_argument);
  JacobiOptions none;
  none.max_sweeps = 0;
  CHECK_THROWS_AS(jacobi_eigen(two, none), ConvergenceError);
}

TEST_CASE("quoted gaps") {
  CHECK(std::abs(solve(canonical(1.0, Coupling::linear))->spectrum.omega1 - 0.03958) < 1e-4);
  CHECK(std::abs(solve(canonical(1.0, Coupling::quadratic))->spectrum.omega1 - 0.02989) < 1e-4);
  const auto uncoupled = solve(canonical(0.0, Coupling::linear));
  CHECK(std::abs(uncoupled->spectrum.omega1 - uncoupled->model.dw.spectrum().splitting) < 1e-10);
  const auto n5 = solve(canonical(1.0, Coupling::linear, 5, 1.0, 2.0));
  CHECK(n5->spectrum.omega1 == doctest::Approx(0.923365e-4).epsilon(1e-3));
  const auto four = solve(canonical(0.1, Coupling::linear));
  const std::array<double, 4> quoted{-4.30784, -4.22313, -3.42868, -3.34397};
  for (int k = 0; k < 4; ++k) CHECK(std::abs(four->spectrum.energies[k] - quoted[k]) < 1e-4);
}

TEST_CASE("closed-form N = 1 solutions agree with the numerical ones") {
  for (Coupling d : {Coupling::linear, Coupling::quadratic}) {
    for (double c : {0.0, 0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 1.75, 2.0}) {
      CAPTURE(static_cast<int>(d));
      CAPTURE(c);
      const auto sys = solve(canonical(c, d));
      const AnalyticN1 an = analytic_n1(sys->model, sys->zetas);
      if (c == 0.0) {
        CHECK(an.theta1 == 0.0);
        CHECK(an.theta2 == 0.0);
        CHECK(an.energies[0] == doctest::Approx(sys->model.dw.spectrum().levels[0] + 0.5 * sys->model.ho.omega()));
      }
      CHECK(an.theta1 > -std::numbers::pi / 4);
      CHECK(an.theta1 <= std::numbers::pi / 4);
      std::array<int, 4> order{0, 1, 2, 3};
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return an.energies[a] < an.energies[b]; });
      for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(sys->spectrum.energies[k] - an.energies[order[k]]) < 1e-10);
        auto v = an.vectors[order[k]];
        int lead = 0;
        for (int i = 1; i < 4; ++i) {
          if (std::abs(v[i]) > std::abs(v[lead])) lead = i;
        }
        const double sign = v[lead] < 0 ? -1.0 : 1.0;
        for (int i = 0; i < 4; ++i) CHECK(std::abs(sys->spectrum.vectors(i, k) - sign * v[i]) < 1e-8);
      }
    }
  }
  CHECK_THROWS_AS(analytic_n1(canonical(1.0, Coupling::linear, 2), ZetaCoefficients{}), std::invalid_argument);
  // linear-coupling closed forms need hbar omega above the splitting
  const CoupledModel slow = canonical(1.0, Coupling::linear, 1, 1.0, 0.5);
  CHECK_THROWS_AS(analytic_n1(slow, model_zetas(slow, table())), std::invalid_argument);
}

TEST_CASE("the gap shrinks with c") {
  double previous = 1e300;
  for (int k = 0; k <= 8; ++k) {
    const double c = 0.25 * k;
    const double gap = solve(canonical(c, Coupling::linear), table())->spectrum.omega1;
    CHECK(gap < previous);
    previous = gap;
  }
  // For the quadratic coupling the two lowest N = 1 levels come from
  // different doublet members and cross near c = 1.467; the gap shrinks up
  // to the crossing and then reopens.
  previous = 1e300;
  for (int k = 0; k <= 6; ++k) {
    const double gap = solve(canonical(0.25 * k, Coupling::quadratic), table())->spectrum.omega1;
    CHECK(gap < previous);
    previous = gap;
  }
  const auto before = solve(canonical(1.25, Coupling::quadratic), table());
  const auto after = solve(canonical(1.75, Coupling::quadratic), table());
  CHECK(after->spectrum.omega1 > before->spectrum.omega1);
  // ground state switches from the phi_0 family to the phi_1 family
  CHECK(std::abs(before->spectrum.vectors(0, 0)) > 0.5);
  CHECK(std::abs(after->spectrum.vectors(1, 0)) > 0.5);
}
