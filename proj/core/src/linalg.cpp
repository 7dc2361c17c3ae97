#include "hopfcheck/linalg.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <limits>
#include <string>

namespace hopfcheck {

namespace {

void require_square(const ComplexMatrix& m, const char* who) {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(who) + ": matrix must be square, got " +
                         std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  }
}

}  // namespace

double max_abs(const ComplexMatrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().maxCoeff();
}

bool is_hermitian_projection(const ComplexMatrix& m, Tolerance tol) {
  require_square(m, "is_hermitian_projection");
  const double bound = tol.scaled(m.rows());
  if (max_abs(m - m.adjoint()) > bound) return false;
  return max_abs(m * m - m) <= bound;
}

CesaroResult cesaro_projector(const ComplexMatrix& t, Tolerance tol,
                              int max_rounds) {
  require_square(t, "cesaro_projector");
  if (max_rounds < 1) {
    throw InvalidInputError("cesaro_projector: max_rounds must be >= 1");
  }
  const Eigen::Index dim = t.rows();
  const double bound = tol.scaled(dim);

  ComplexMatrix average = t;  // A_1
  ComplexMatrix power = t;    // T^N with N = 1
  double residual = std::numeric_limits<double>::infinity();

  for (int round = 1; round <= max_rounds; ++round) {
    ComplexMatrix next = 0.5 * (average + power * average);  // A_{2N}
    power = (power * power).eval();                          // T^{2N}
    const double step = max_abs(next - average);
    average = std::move(next);
    residual = max_abs(average * t - average);

    if (step <= bound && residual <= bound) {
      return {std::move(average), round, residual};
    }
    if (!std::isfinite(residual) || residual > 1e3) {
      // The averages are blowing up; ||T|| > 1 beyond repair.
      throw NonConvergenceError(
          "cesaro_projector: averages diverge (operator norm exceeds 1), "
          "residual=" + std::to_string(residual),
          residual, round);
    }
  }
  throw NonConvergenceError(
      "cesaro_projector: residual " + std::to_string(residual) +
          " above tolerance after " + std::to_string(max_rounds) +
          " doubling rounds (norm > 1 or slow mixing)",
      residual, max_rounds);
}

namespace {

RankCount count_small_singular_values(const Eigen::VectorXd& sigma,
                                      Eigen::Index dim, Tolerance tol) {
  const double zero_bound = tol.scaled(dim);
  const double band_top = 100.0 * zero_bound;
  RankCount out;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] < zero_bound) {
      ++out.count;
    } else if (sigma[i] <= band_top) {
      out.marginal = true;
    }
  }
  return out;
}

}  // namespace

RankCount eigenvalue_one_multiplicity(const ComplexMatrix& t, Tolerance tol) {
  require_square(t, "eigenvalue_one_multiplicity");
  const Eigen::Index dim = t.rows();
  ComplexMatrix shifted = t;
  shifted.diagonal().array() -= Complex(1.0, 0.0);
  Eigen::BDCSVD<ComplexMatrix> svd(shifted);
  return count_small_singular_values(svd.singularValues(), dim, tol);
}

RankCount numeric_rank(const ComplexMatrix& m, Tolerance tol) {
  require_square(m, "numeric_rank");
  const Eigen::Index dim = m.rows();
  Eigen::BDCSVD<ComplexMatrix> svd(m);
  RankCount zeros = count_small_singular_values(svd.singularValues(), dim, tol);
  return {dim - zeros.count, zeros.marginal};
}

double operator_norm_estimate(const ComplexMatrix& t, int iters) {
  require_square(t, "operator_norm_estimate");
  if (iters < 1) {
    throw InvalidInputError("operator_norm_estimate: iters must be >= 1");
  }
  const Eigen::Index dim = t.rows();
  if (dim == 0) return 0.0;

  // Deterministic seed: reproducible reports.
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    v[i] = Complex(1.0 / static_cast<double>(i + 1), 0.0);
  }
  v.normalize();

  double best = 0.0;
  for (int it = 0; it < iters; ++it) {
    ComplexVector w = t * v;
    const double gain = w.norm();  // sqrt of the Rayleigh quotient of T*T at v
    if (gain > best) best = gain;
    if (gain == 0.0) break;  // v in the kernel of (T*T)^k for all further k
    v = t.adjoint() * w;
    const double norm = v.norm();
    if (norm == 0.0) break;
    v /= norm;
  }
  return best;
}

}  // namespace hopfcheck
