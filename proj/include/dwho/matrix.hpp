#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace dwho {

/// Small dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  std::span<const double> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> data() const noexcept { return data_; }

  double frobenius_norm() const noexcept;
  double trace() const noexcept;
  /// Largest |a_ij - a_ji|; zero for an exactly symmetric matrix.
  double asymmetry() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
std::vector<double> operator*(const Matrix& a, std::span<const double> v);

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm falls below this fraction of
  /// the full Frobenius norm.
  double off_diagonal_tolerance = 1e-13;
  int max_sweeps = 100;
};

struct JacobiResult {
  std::vector<double> eigenvalues;  ///< unsorted, diagonal order
  Matrix eigenvectors;              ///< column k belongs to eigenvalues[k]
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a dense symmetric matrix. Throws
/// ConvergenceError when max_sweeps is exhausted.
JacobiResult jacobi_eigen(Matrix a, const JacobiOptions& options = {});

}  // namespace dwho
