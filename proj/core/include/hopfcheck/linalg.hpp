#pragma once

#include "hopfcheck/types.hpp"

namespace hopfcheck {

/// Entrywise max-modulus norm.
double max_abs(const ComplexMatrix& m);

/// True iff m is Hermitian and idempotent within the dimension-scaled
/// tolerance. Throws DimensionError for non-square input.
bool is_hermitian_projection(const ComplexMatrix& m, Tolerance tol = {});

struct CesaroResult {
  ComplexMatrix projector;
  int rounds = 0;       // doubling rounds used (partial sum covers 2^rounds powers)
  double residual = 0;  // ||P*T - P||_max at acceptance
};

/// Long-run average of the powers of a contraction: the limit of
/// (1/N) * sum_{r=1..N} T^r. For ||T|| <= 1 this is the spectral projection
/// onto the 1-eigenspace.
///
/// Schedule: partial averages with N doubling (A_{2N} = (A_N + T^N A_N)/2),
/// accepted once both ||A_{2N} - A_N||_max and ||A_{2N} T - A_{2N}||_max fall
/// below the scaled tolerance. The second condition certifies fixed-point-ness
/// independently of the first. The caller asserts ||T|| <= 1 + eps; failure to
/// converge within max_rounds signals either ||T|| > 1 or slow mixing.
CesaroResult cesaro_projector(const ComplexMatrix& t, Tolerance tol = {},
                              int max_rounds = 48);

struct RankCount {
  long long count = 0;
  /// Set when some singular magnitude falls in the ambiguous band
  /// [eps*dim, 100*eps*dim]; integer decisions built on it are suspect.
  bool marginal = false;
};

/// dim ker(T - I) by a rank-revealing SVD of T - I. For power-bounded T this
/// equals the eigenvalue-1 multiplicity (the eigenvalue is semisimple).
RankCount eigenvalue_one_multiplicity(const ComplexMatrix& t,
                                      Tolerance tol = {});

/// Numeric rank at the same thresholds (used to rank Cesaro projectors).
RankCount numeric_rank(const ComplexMatrix& m, Tolerance tol = {});

/// Lower bound on the operator norm, converging to ||T||: power iteration on
/// T^*T from the fixed start vector (1, 1/2, 1/3, ...) normalized; returns the
/// square root of the largest Rayleigh quotient seen.
double operator_norm_estimate(const ComplexMatrix& t, int iters = 100);

}  // namespace hopfcheck
