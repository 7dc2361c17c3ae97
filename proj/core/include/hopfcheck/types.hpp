#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hopfcheck {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Absolute threshold for zero tests and projection checks. Thresholds
/// derived from it scale linearly with the matrix dimension.
class Tolerance {
 public:
  Tolerance() = default;

  explicit Tolerance(double eps) : eps_(eps) {
    if (!(eps > 0.0) || !(eps < 1.0)) {
      throw std::invalid_argument("tolerance eps must lie in (0, 1), got " +
                                  std::to_string(eps));
    }
  }

  double eps() const { return eps_; }

  /// Dimension-scaled threshold.
  double scaled(Eigen::Index dim) const {
    return eps_ * static_cast<double>(dim);
  }

 private:
  double eps_ = 1e-9;
};

/// Resource guard for transfer-matrix construction: dense work is capped at
/// max_dim x max_dim and level k at max_k. Both limits are overridable.
struct Capacity {
  std::int64_t max_dim = 65536;
  int max_k = 12;
};

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class InvalidInputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class CapacityError : public std::runtime_error {
 public:
  CapacityError(const std::string& what, std::int64_t required)
      : std::runtime_error(what), required_(required) {}
  std::int64_t required() const { return required_; }

 private:
  std::int64_t required_;
};

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergenceError : public std::runtime_error {
 public:
  NonConvergenceError(const std::string& what, double residual, int rounds)
      : std::runtime_error(what), residual_(residual), rounds_(rounds) {}
  double residual() const { return residual_; }
  int rounds() const { return rounds_; }

 private:
  double residual_;
  int rounds_;
};

class MethodDisagreementError : public std::runtime_error {
 public:
  MethodDisagreementError(const std::string& what, long long kernel_count,
                          long long cesaro_count)
      : std::runtime_error(what),
        kernel_count_(kernel_count),
        cesaro_count_(cesaro_count) {}
  long long kernel_count() const { return kernel_count_; }
  long long cesaro_count() const { return cesaro_count_; }

 private:
  long long kernel_count_;
  long long cesaro_count_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopfcheck
