#pragma once

#include "hopfcheck/linalg.hpp"
#include "hopfcheck/model.hpp"
#include "hopfcheck/types.hpp"
#include "hopfcheck/word.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace hopfcheck {

/// Level-k transfer matrix: the n^k x n^k matrix with entry
/// tr(P_{i_1 j_1} ... P_{i_k j_k}) at (encode(I), encode(J)), where tr is the
/// normalized trace (tr(I_d) = 1). Rows and columns are indexed by base-n
/// tuples in big-endian order: (i_1..i_k) -> sum_t (i_t - 1) * n^(k-t).
/// For every valid magic-unitary model the operator norm is at most 1.
struct TransferMatrix {
  int k = 0;
  int n = 0;
  ComplexMatrix data;
};

/// Big-endian base-n index of a 1-indexed tuple.
std::int64_t tuple_index(std::span<const int> tuple, int n);

/// Dense construction of T_k by depth-first prefix sharing: the partial
/// product P_{i_1 j_1}...P_{i_t j_t} is formed once and reused across every
/// continuation of the prefix. Diagonal-flagged models produce a diagonal
/// matrix with entries tr(U_{i_1}...U_{i_k}). Throws CapacityError when
/// n^k exceeds the cap.
TransferMatrix build_transfer(const MagicUnitaryModel& model, int k,
                              const Capacity& cap = {});

enum class MultiplicityMethod { kernel, cesaro, both };

struct Multiplicity {
  long long count = 0;
  bool marginal = false;
};

/// Eigenvalue-1 multiplicity of an already-built transfer matrix.
/// kernel: rank-revealing SVD of T - I. cesaro: numeric rank of the Cesaro
/// projector. both: computes the two and throws MethodDisagreementError if
/// they differ.
Multiplicity multiplicity_of_transfer(const TransferMatrix& transfer,
                                      MultiplicityMethod method,
                                      Tolerance tol = {});

/// Builds T_k and counts its eigenvalue-1 multiplicity m_k.
Multiplicity multiplicity_one(const MagicUnitaryModel& model, int k,
                              MultiplicityMethod method, Tolerance tol = {},
                              const Capacity& cap = {});

/// r-fold convolution power of the model's trace state, evaluated on a
/// monomial: ((T_k)^r) at the word's encoded indices. For r = 1 this is
/// tr(P_{i_1 j_1} ... P_{i_k j_k}).
Complex convolution_power_eval(const MagicUnitaryModel& model, const Word& word,
                               long long r, const Capacity& cap = {});

/// Value on a monomial of the idempotent state attached to the model: the
/// corresponding entry of the Cesaro projector of T_k. Checks the
/// contraction hypothesis first and propagates Cesaro non-convergence.
Complex idempotent_eval(const MagicUnitaryModel& model, const Word& word,
                        Tolerance tol = {}, const Capacity& cap = {});

}  // namespace hopfcheck
