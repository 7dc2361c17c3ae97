#include "hopfcheck/certify.hpp"

#include "hopfcheck/io.hpp"
#include "hopfcheck/linalg.hpp"

#include <cmath>
#include <map>
#include <utility>

namespace hopfcheck {

CertificateReport certify(const MagicUnitaryModel& model,
                          const MomentOracle& oracle, int k_max, Tolerance tol,
                          const Capacity& cap) {
  if (k_max < 1) throw InvalidInputError("certify: k_max must be >= 1");

  CertificateReport report;
  report.tolerance = tol.eps();
  report.model_digest = model_digest(model);
  report.oracle_digest = oracle_digest(oracle);
  report.verdict = {VerdictKind::ConfirmedUpTo, k_max};

  for (int k = 1; k <= k_max; ++k) {
    LevelRecord level;
    level.k = k;
    try {
      const Multiplicity mult =
          multiplicity_one(model, k, MultiplicityMethod::both, tol, cap);
      level.multiplicity = mult.count;
      level.marginal = mult.marginal;
      level.moment = character_moment(oracle, k);
    } catch (const CapacityError& e) {
      throw CertifyError(e.what(), std::move(report));
    } catch (const NonConvergenceError& e) {
      throw CertifyError(e.what(), std::move(report));
    } catch (const MethodDisagreementError& e) {
      throw CertifyError(e.what(), std::move(report));
    }
    if (!is_integer(level.moment)) {
      throw CertifyError("certify: oracle moment c_" + std::to_string(k) +
                             " = " + to_string(level.moment) +
                             " is not an integer; fixed-space dimensions are",
                         std::move(report));
    }
    report.warnings = report.warnings || level.marginal;
    const Rational m(static_cast<long>(level.multiplicity));
    const Rational& c = level.moment;
    report.levels.push_back(level);
    if (m > c) {
      report.verdict = {VerdictKind::RefutedAt, k};
      return report;
    }
    if (m < c) {
      report.verdict = {VerdictKind::Inconsistent, k};
      return report;
    }
  }
  return report;
}

std::vector<IdempotentComparison> compare_idempotent_to_haar(
    const MagicUnitaryModel& model, const MomentOracle& oracle,
    const std::vector<Word>& words, Tolerance tol, const Capacity& cap) {
  if (!supports_haar_monomial(oracle)) {
    throw InvalidInputError(
        "compare_idempotent_to_haar: oracle kind has no Haar monomials");
  }

  // One Cesaro projector per word length serves every word of that length.
  std::map<int, CesaroResult> projector_by_level;
  for (const auto& word : words) {
    const int k = word.length();
    if (projector_by_level.contains(k)) continue;
    const TransferMatrix transfer = build_transfer(model, k, cap);
    const double estimate = operator_norm_estimate(transfer.data, 30);
    if (estimate > 1.0 + tol.scaled(transfer.data.rows())) {
      throw InvalidInputError(
          "compare_idempotent_to_haar: transfer matrix at level " +
          std::to_string(k) + " is not a contraction (norm >= " +
          std::to_string(estimate) + ")");
    }
    projector_by_level.emplace(k, cesaro_projector(transfer.data, tol));
  }

  std::vector<IdempotentComparison> rows;
  rows.reserve(words.size());
  for (const auto& word : words) {
    std::vector<int> row_tuple, col_tuple;
    for (const auto& [i, j] : word.letters) {
      if (i < 1 || i > model.n || j < 1 || j > model.n) {
        throw InvalidInputError("compare_idempotent_to_haar: word letter out of "
                                "range for the model");
      }
      row_tuple.push_back(i);
      col_tuple.push_back(j);
    }
    const auto& projector = projector_by_level.at(word.length()).projector;
    IdempotentComparison cmp;
    cmp.word = word;
    cmp.cesaro_value = projector(tuple_index(row_tuple, model.n),
                                 tuple_index(col_tuple, model.n));
    cmp.haar_value = haar_monomial(oracle, word);
    cmp.abs_difference = std::abs(cmp.cesaro_value - Complex(to_double(cmp.haar_value), 0.0));
    rows.push_back(std::move(cmp));
  }
  return rows;
}

}  // namespace hopfcheck
