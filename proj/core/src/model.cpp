#include "hopfcheck/model.hpp"

#include "hopfcheck/linalg.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hopfcheck {

namespace {

std::string entry_name(int i, int j) {
  return "P_" + std::to_string(i) + std::to_string(j);
}

bool all_finite(const ComplexMatrix& m) {
  return m.allFinite();
}

}  // namespace

std::vector<std::string> validate_magic_unitary(const MagicUnitaryModel& model,
                                                Tolerance tol) {
  std::vector<std::string> report;
  if (model.n < 1 || model.d < 1) {
    report.push_back("model dimensions must be positive (n=" +
                     std::to_string(model.n) + ", d=" + std::to_string(model.d) +
                     ")");
    return report;
  }
  if (model.entries.size() != static_cast<std::size_t>(model.n) * model.n) {
    report.push_back("entry grid has " + std::to_string(model.entries.size()) +
                     " matrices, expected " + std::to_string(model.n * model.n));
    return report;
  }
  for (int i = 1; i <= model.n; ++i) {
    for (int j = 1; j <= model.n; ++j) {
      const ComplexMatrix& m = model.p(i, j);
      if (m.rows() != model.d || m.cols() != model.d) {
        report.push_back(entry_name(i, j) + " is " + std::to_string(m.rows()) +
                         "x" + std::to_string(m.cols()) + ", expected " +
                         std::to_string(model.d) + "x" + std::to_string(model.d));
        return report;
      }
      if (!all_finite(m)) {
        report.push_back(entry_name(i, j) + " has non-finite entries");
        return report;
      }
    }
  }

  const ComplexMatrix id = ComplexMatrix::Identity(model.d, model.d);
  const double bound = tol.scaled(model.d);

  if (model.diagonal) {
    // Group-dual tuple: unitary diagonal, vanishing off-diagonal; the magic
    // row/column sums do not apply.
    for (int i = 1; i <= model.n; ++i) {
      for (int j = 1; j <= model.n; ++j) {
        if (i == j) {
          const ComplexMatrix& u = model.p(i, i);
          if (max_abs(u * u.adjoint() - id) > bound) {
            report.push_back(entry_name(i, i) + " not unitary");
          }
        } else if (max_abs(model.p(i, j)) > bound) {
          report.push_back(entry_name(i, j) +
                           " must vanish in a diagonal-flagged model");
        }
      }
    }
    return report;
  }

  for (int i = 1; i <= model.n; ++i) {
    for (int j = 1; j <= model.n; ++j) {
      if (!is_hermitian_projection(model.p(i, j), tol)) {
        report.push_back(entry_name(i, j) + " not a projection");
      }
    }
  }
  for (int i = 1; i <= model.n; ++i) {
    ComplexMatrix row_sum = ComplexMatrix::Zero(model.d, model.d);
    for (int j = 1; j <= model.n; ++j) row_sum += model.p(i, j);
    if (max_abs(row_sum - id) > bound) {
      report.push_back("row " + std::to_string(i) + " does not sum to identity");
    }
  }
  for (int j = 1; j <= model.n; ++j) {
    ComplexMatrix col_sum = ComplexMatrix::Zero(model.d, model.d);
    for (int i = 1; i <= model.n; ++i) col_sum += model.p(i, j);
    if (max_abs(col_sum - id) > bound) {
      report.push_back("column " + std::to_string(j) +
                       " does not sum to identity");
    }
  }
  return report;
}

MagicUnitaryModel model_from_permutations(int n,
                                          const std::vector<Permutation>& points) {
  if (n < 1) throw InvalidInputError("model_from_permutations: n must be positive");
  if (points.empty()) {
    throw InvalidInputError("model_from_permutations: need at least one point");
  }
  for (const auto& g : points) {
    if (g.size() != n) {
      throw DimensionError("model_from_permutations: permutation degree " +
                           std::to_string(g.size()) + " does not match n=" +
                           std::to_string(n));
    }
  }
  const int d = static_cast<int>(points.size());
  MagicUnitaryModel model{n, d, false, {}};
  model.entries.assign(static_cast<std::size_t>(n) * n,
                       ComplexMatrix::Zero(d, d));
  for (int j = 1; j <= n; ++j) {
    for (int t = 0; t < d; ++t) {
      const int i = points[static_cast<std::size_t>(t)].apply(j);
      model.p(i, j)(t, t) = Complex(1.0, 0.0);
    }
  }
  return model;
}

MagicUnitaryModel model_from_hadamard(const ComplexMatrix& h, Tolerance tol) {
  if (h.rows() != h.cols()) {
    throw DimensionError("model_from_hadamard: matrix must be square");
  }
  const int n = static_cast<int>(h.rows());
  if (n < 1) throw InvalidInputError("model_from_hadamard: empty matrix");
  const double bound = tol.scaled(n);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (std::abs(std::abs(h(i, j)) - 1.0) > bound) {
        throw InvalidInputError(
            "Hadamard check failed: |H_" + std::to_string(i + 1) +
            std::to_string(j + 1) + "| != 1");
      }
    }
  }
  const ComplexMatrix gram = h * h.adjoint();
  const double defect =
      max_abs(gram - static_cast<double>(n) *
                         ComplexMatrix::Identity(n, n));
  if (defect > bound * n) {
    throw InvalidInputError("Hadamard check failed: H*H^adj != n*I (defect " +
                            std::to_string(defect) + ")");
  }

  MagicUnitaryModel model{n, n, false, {}};
  model.entries.assign(static_cast<std::size_t>(n) * n, ComplexMatrix());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      ComplexVector xi(n);
      for (int a = 0; a < n; ++a) {
        xi[a] = h(i - 1, a) / h(j - 1, a);
      }
      xi.normalize();
      model.p(i, j) = xi * xi.adjoint();
    }
  }
  return model;
}

MagicUnitaryModel model_from_unitaries(const std::vector<ComplexMatrix>& unitaries,
                                       Tolerance tol,
                                       bool allow_non_involutive) {
  if (unitaries.empty()) {
    throw InvalidInputError("model_from_unitaries: need at least one unitary");
  }
  const Eigen::Index d = unitaries.front().rows();
  const ComplexMatrix id = ComplexMatrix::Identity(d, d);
  const double bound = tol.scaled(d);
  for (std::size_t t = 0; t < unitaries.size(); ++t) {
    const ComplexMatrix& u = unitaries[t];
    if (u.rows() != u.cols() || u.rows() != d) {
      throw DimensionError("model_from_unitaries: matrix " +
                           std::to_string(t + 1) + " is not " +
                           std::to_string(d) + "x" + std::to_string(d));
    }
    if (max_abs(u * u.adjoint() - id) > bound) {
      throw InvalidInputError("model_from_unitaries: matrix " +
                              std::to_string(t + 1) + " is not unitary");
    }
    if (!allow_non_involutive && max_abs(u * u - id) > bound) {
      throw InvalidInputError(
          "model_from_unitaries: matrix " + std::to_string(t + 1) +
          " is not self-inverse (pass allow_non_involutive to accept; the "
          "certification criterion is only established for involutive tuples)");
    }
  }

  const int n = static_cast<int>(unitaries.size());
  MagicUnitaryModel model{n, static_cast<int>(d), true, {}};
  model.entries.assign(static_cast<std::size_t>(n) * n,
                       ComplexMatrix::Zero(d, d));
  for (int i = 1; i <= n; ++i) {
    model.p(i, i) = unitaries[static_cast<std::size_t>(i - 1)];
  }
  return model;
}

ComplexMatrix fourier_matrix(int n) {
  if (n < 1) throw InvalidInputError("fourier_matrix: n must be positive");
  ComplexMatrix f(n, n);
  const double theta = 2.0 * std::numbers::pi / static_cast<double>(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      // Reduce j*k mod n before evaluating to keep phases exact-ish.
      const int e = static_cast<int>((static_cast<long long>(j) * k) % n);
      f(j, k) = std::polar(1.0, theta * static_cast<double>(e));
    }
  }
  return f;
}

}  // namespace hopfcheck
