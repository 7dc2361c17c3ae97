#pragma once

#include "hopfcheck/partition.hpp"
#include "hopfcheck/permutation.hpp"
#include "hopfcheck/rational.hpp"
#include "hopfcheck/word.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace hopfcheck {

// ---------------------------------------------------------------------------
// Classical permutation groups: exact character moments and Haar monomials.
// ---------------------------------------------------------------------------

/// Burnside count (1/|G|) sum_g fix(g)^k, the number of orbits of the group
/// on k-tuples of points. When the tuple space is no bigger than
/// crosscheck_cap the count is verified against a direct orbit enumeration
/// driven by crosscheck_generators (the full element list when empty).
Rational classical_character_moment(
    const std::vector<Permutation>& group, int k,
    std::int64_t crosscheck_cap = 65536,
    const std::vector<Permutation>& crosscheck_generators = {});

/// Haar integral of a coefficient monomial over a finite permutation group:
/// (1/|G|) #{g : g(j_t) = i_t for all t}.
Rational classical_haar_monomial(const std::vector<Permutation>& group,
                                 const Word& word);

// ---------------------------------------------------------------------------
// Free symmetric quantum groups: exact Weingarten calculus over NC(k).
// ---------------------------------------------------------------------------

/// Gram matrix of the non-crossing partition vectors: G(p,q) = n^|p v q|,
/// indexed by enumerate_noncrossing(k) order.
RationalMatrix gram_matrix(int n, int k);

/// Exact inverse of the Gram matrix. Requires n >= 4 (for smaller n the
/// partition vectors are dependent and the classical oracle applies).
RationalMatrix weingarten_matrix(int n, int k);

/// Weingarten data for repeated monomial evaluation at one (n, k).
struct WeingartenTable {
  int n = 0;
  int k = 0;
  std::vector<SetPartition> partitions;
  RationalMatrix weingarten;
};

WeingartenTable make_weingarten_table(int n, int k);

/// Exact Haar integral of u_{i_1 j_1}...u_{i_k j_k} over the free symmetric
/// quantum group: sum_{p,q in NC(k)} [i constant on p][j constant on q] W(p,q).
Rational snplus_haar_monomial(const WeingartenTable& table, const Word& word);
Rational snplus_haar_monomial(int n, const Word& word);

// ---------------------------------------------------------------------------
// Finite group duals, given as explicit multiplication tables.
// ---------------------------------------------------------------------------

/// Finite group presented by its multiplication table (0-indexed element ids,
/// table[a][b] = a*b) together with a distinguished generator tuple.
struct GroupDual {
  std::vector<std::vector<int>> table;
  std::vector<int> generators;
  int identity = -1;

  /// Validates the table (size guard, bijective rows and columns, two-sided
  /// identity) and the generator indices.
  static GroupDual from_table(std::vector<std::vector<int>> table,
                              std::vector<int> generators);

  int order() const { return static_cast<int>(table.size()); }
};

/// Number of length-k generator words that multiply to the identity.
Rational group_dual_character_moment(const GroupDual& dual, int k);

// ---------------------------------------------------------------------------
// Oracle dispatch.
// ---------------------------------------------------------------------------

/// Classical ambient group, enumerated eagerly from its generators.
struct ClassicalOracle {
  int n = 0;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;

  ClassicalOracle(int n, std::vector<Permutation> generators,
                  std::size_t size_guard = 1000000);
};

/// Free symmetric quantum group of degree n >= 4. For n <= 3 the quantum and
/// classical symmetric groups coincide and the classical oracle must be used.
struct FreeSymmetricOracle {
  int n = 0;
  explicit FreeSymmetricOracle(int n);
};

/// Pre-tabulated moment sequence c_1, c_2, ... Every value must be a
/// nonnegative integer (fixed-space dimensions); violations are rejected here,
/// at load time.
struct ExplicitOracle {
  std::vector<Rational> values;
  explicit ExplicitOracle(std::vector<Rational> values);
};

using MomentOracle =
    std::variant<ClassicalOracle, FreeSymmetricOracle, GroupDual, ExplicitOracle>;

/// The exact moment c_k = h(chi^k) of the oracle's fundamental character;
/// equals the dimension of the fixed space of the k-th tensor power.
Rational character_moment(const MomentOracle& oracle, int k);

/// True when the oracle can evaluate Haar integrals of coefficient monomials
/// (classical and free symmetric kinds).
bool supports_haar_monomial(const MomentOracle& oracle);

Rational haar_monomial(const MomentOracle& oracle, const Word& word);

}  // namespace hopfcheck
