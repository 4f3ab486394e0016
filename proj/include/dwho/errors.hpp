#pragma once

#include <stdexcept>
#include <string>

namespace dwho {

/// Argument outside the range where a closed form can be evaluated in
/// double precision (e.g. cosh overflow).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Adaptive quadrature did not reach its tolerance.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double lower, double upper, double residual)
      : std::runtime_error(what), lower_(lower), upper_(upper), residual_(residual) {}

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  double residual() const noexcept { return residual_; }

 private:
  double lower_;
  double upper_;
  double residual_;
};

/// An iterative solver stopped before meeting its threshold.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, int iterations)
      : std::runtime_error(what), iterations_(iterations) {}

  int iterations() const noexcept { return iterations_; }

 private:
  int iterations_;
};

/// No recurrence of the correlation function reached the threshold before
/// the horizon. Carries the best local maximum seen.
class RecurrenceError : public std::runtime_error {
 public:
  RecurrenceError(const std::string& what, double best_time, double best_value)
      : std::runtime_error(what), best_time_(best_time), best_value_(best_value) {}

  double best_time() const noexcept { return best_time_; }
  double best_value() const noexcept { return best_value_; }

 private:
  double best_time_;
  double best_value_;
};

}  // namespace dwho
