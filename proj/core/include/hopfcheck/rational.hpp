#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hopfcheck {

using Rational = mpq_class;
using Integer = mpz_class;

Rational rational_from_string(const std::string& text);
std::string to_string(const Rational& q);
double to_double(const Rational& q);
bool is_integer(const Rational& q);

/// Dense matrix of exact rationals, just big enough for Gram inversion.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  static RationalMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  const Rational& at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  RationalMatrix operator*(const RationalMatrix& other) const;
  bool operator==(const RationalMatrix& other) const;

  /// Exact Gauss-Jordan inverse; throws InvalidInputError on singular input.
  RationalMatrix inverse() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace hopfcheck
