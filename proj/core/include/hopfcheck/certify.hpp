#pragma once

#include "hopfcheck/model.hpp"
#include "hopfcheck/moments.hpp"
#include "hopfcheck/rational.hpp"
#include "hopfcheck/transfer.hpp"
#include "hopfcheck/types.hpp"
#include "hopfcheck/word.hpp"

#include <string>
#include <vector>

namespace hopfcheck {

struct LevelRecord {
  int k = 0;
  long long multiplicity = 0;   // m_k, eigenvalue-1 multiplicity of T_k
  Rational moment;              // c_k, exact oracle moment
  bool marginal = false;
};

enum class VerdictKind { ConfirmedUpTo, RefutedAt, Inconsistent };

/// RefutedAt(k): m_k > c_k, a definite mathematical answer. Inconsistent(k):
/// m_k < c_k, which contradicts the unconditional containment of the fixed
/// space in the 1-eigenspace and therefore signals a numerical or modeling
/// fault, never a mathematical outcome.
struct Verdict {
  VerdictKind kind = VerdictKind::ConfirmedUpTo;
  int level = 0;
};

struct CertificateReport {
  std::vector<LevelRecord> levels;  // consecutive from k = 1
  Verdict verdict;
  bool warnings = false;  // some level was numerically marginal
  std::string model_digest;
  std::string oracle_digest;
  double tolerance = 0.0;
};

/// Errors mid-scan (capacity, non-convergence, method disagreement) are
/// rethrown wrapped with the partial report attached.
class CertifyError : public std::runtime_error {
 public:
  CertifyError(const std::string& what, CertificateReport partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const CertificateReport& partial_report() const { return partial_; }

 private:
  CertificateReport partial_;
};

/// Level-by-level comparison of the transfer-matrix multiplicity m_k against
/// the oracle moment c_k, for k = 1..k_max. Confirmed only when every level
/// matches; the verdict is deliberately "confirmed up to k_max" since a
/// finite scan cannot quantify over all k. Multiplicities use the kernel and
/// Cesaro methods together and error on disagreement. The oracle must
/// describe the ambient quantum group of which the model is a representation;
/// that correspondence is the caller's responsibility.
CertificateReport certify(const MagicUnitaryModel& model,
                          const MomentOracle& oracle, int k_max,
                          Tolerance tol = {}, const Capacity& cap = {});

struct IdempotentComparison {
  Word word;
  Complex cesaro_value;    // idempotent state of the model on the monomial
  Rational haar_value;     // exact oracle Haar integral
  double abs_difference = 0.0;
};

/// Pairs the model's idempotent state with the oracle's exact Haar monomial
/// on each word. When the oracle describes the model's Hopf image (for
/// permutation models: the generated subgroup) the differences must vanish.
/// Requires an oracle kind with Haar monomials (classical or free symmetric).
std::vector<IdempotentComparison> compare_idempotent_to_haar(
    const MagicUnitaryModel& model, const MomentOracle& oracle,
    const std::vector<Word>& words, Tolerance tol = {}, const Capacity& cap = {});

}  // namespace hopfcheck
