#include "hopfcheck/rational.hpp"

#include "hopfcheck/types.hpp"

#include <stdexcept>
#include <utility>

namespace hopfcheck {

Rational rational_from_string(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) {
    throw InvalidInputError("cannot parse rational from '" + text + "'");
  }
  if (q.get_den() == 0) {
    throw InvalidInputError("rational with zero denominator: '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

RationalMatrix::RationalMatrix(int rows, int cols)
    : rows_(rows), cols_(cols),
      data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
            Rational(0)) {}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
  if (cols_ != other.rows_) {
    throw DimensionError("RationalMatrix: size mismatch in product");
  }
  RationalMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int l = 0; l < cols_; ++l) {
      const Rational& left = at(i, l);
      if (left == 0) continue;
      for (int j = 0; j < other.cols_; ++j) {
        out.at(i, j) += left * other.at(l, j);
      }
    }
  }
  return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) {
    throw DimensionError("RationalMatrix: only square matrices invert");
  }
  const int n = rows_;
  RationalMatrix work = *this;
  RationalMatrix inv = identity(n);

  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (work.at(r, col) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      throw InvalidInputError("RationalMatrix: singular matrix has no inverse");
    }
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(work.at(pivot, c), work.at(col, c));
        std::swap(inv.at(pivot, c), inv.at(col, c));
      }
    }
    const Rational scale = 1 / work.at(col, col);
    for (int c = 0; c < n; ++c) {
      work.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || work.at(r, col) == 0) continue;
      const Rational factor = work.at(r, col);
      for (int c = 0; c < n; ++c) {
        work.at(r, c) -= factor * work.at(col, c);
        inv.at(r, c) -= factor * inv.at(col, c);
      }
    }
  }
  return inv;
}

}  // namespace hopfcheck
