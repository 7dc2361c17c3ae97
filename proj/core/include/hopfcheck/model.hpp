#pragma once

#include "hopfcheck/permutation.hpp"
#include "hopfcheck/types.hpp"

#include <string>
#include <vector>

namespace hopfcheck {

/// Matrix model of a quantum permutation: an n x n grid of d x d matrices
/// P_ij, the images of the fundamental corepresentation coefficients u_ij.
///
/// For ordinary (magic unitary) models every P_ij is a Hermitian projection
/// and each row and column of the grid sums to the identity. Models flagged
/// `diagonal` instead store a group-dual tuple on the diagonal: P_ii is a
/// unitary generator, off-diagonal entries are zero, and the row/column sum
/// invariant deliberately does not apply.
struct MagicUnitaryModel {
  int n = 0;
  int d = 0;
  bool diagonal = false;
  std::vector<ComplexMatrix> entries;  // n*n grid, row-major

  /// Grid access, 1-indexed in both coordinates.
  const ComplexMatrix& p(int i, int j) const {
    return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  }
  ComplexMatrix& p(int i, int j) {
    return entries[static_cast<std::size_t>((i - 1) * n + (j - 1))];
  }
};

/// Checks every model invariant at tol and reports the violated ones
/// (empty on success). Violations are data, not errors.
std::vector<std::string> validate_magic_unitary(const MagicUnitaryModel& model,
                                                Tolerance tol = {});

/// Model of C(S_n) evaluated at the given permutations: d equals the number
/// of points and P_ij is diagonal with (t,t) entry [g_t(j) == i].
MagicUnitaryModel model_from_permutations(int n,
                                          const std::vector<Permutation>& points);

/// Model built from an n x n complex Hadamard matrix (unimodular entries,
/// H H^* = n I): P_ij is the rank-1 projection onto the normalized entrywise
/// ratio vector (H_ia / H_ja)_a. Throws InvalidInputError naming the failed
/// Hadamard check.
MagicUnitaryModel model_from_hadamard(const ComplexMatrix& h, Tolerance tol = {});

/// Group-dual model from a tuple of d x d unitaries: n equals the tuple
/// length, P_ii = U_i, off-diagonal entries zero, diagonal flag set. Each U_i
/// must be unitary and, unless allow_non_involutive is set, self-inverse.
MagicUnitaryModel model_from_unitaries(const std::vector<ComplexMatrix>& unitaries,
                                       Tolerance tol = {},
                                       bool allow_non_involutive = false);

/// The n x n Fourier matrix F_jk = exp(2*pi*i*j*k/n), the canonical complex
/// Hadamard family.
ComplexMatrix fourier_matrix(int n);

}  // namespace hopfcheck
