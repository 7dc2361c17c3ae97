#include "hopfcheck/transfer.hpp"

#include <limits>
#include <string>
#include <utility>

namespace hopfcheck {

namespace {

constexpr int kNormGuardIters = 30;

std::int64_t checked_power_dim(const MagicUnitaryModel& model, int k,
                               const Capacity& cap) {
  if (model.n < 1 || model.d < 1) {
    throw InvalidInputError("transfer: model has empty dimensions");
  }
  if (k < 1) throw InvalidInputError("transfer: level k must be >= 1");
  if (k > cap.max_k) {
    throw CapacityError("transfer: level " + std::to_string(k) +
                            " exceeds the level guard " +
                            std::to_string(cap.max_k),
                        k);
  }
  std::int64_t dim = 1;
  for (int t = 0; t < k; ++t) {
    dim *= model.n;
    if (dim > cap.max_dim) {
      // Report the full required size even when it overflows the cap early.
      std::int64_t required = dim;
      for (int rest = t + 1; rest < k; ++rest) {
        if (required > std::numeric_limits<std::int64_t>::max() / model.n) {
          required = std::numeric_limits<std::int64_t>::max();
          break;
        }
        required *= model.n;
      }
      throw CapacityError("transfer: n^k = " + std::to_string(required) +
                              " exceeds the dimension cap " +
                              std::to_string(cap.max_dim),
                          required);
    }
  }
  return dim;
}

void validate_word(const Word& word, int n) {
  if (word.letters.empty()) {
    throw InvalidInputError("word must have at least one letter");
  }
  for (const auto& [i, j] : word.letters) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw InvalidInputError("word letter (" + std::to_string(i) + "," +
                              std::to_string(j) + ") out of range 1.." +
                              std::to_string(n));
    }
  }
}

// Walks all (i_1 j_1 ... i_k j_k) paths, keeping the running product of the
// first t grid entries on a stack so each prefix is multiplied exactly once.
class TransferBuilder {
 public:
  TransferBuilder(const MagicUnitaryModel& model, int k, ComplexMatrix& out)
      : model_(model), k_(k), out_(out), inv_d_(1.0 / model.d) {
    products_.resize(static_cast<std::size_t>(k) + 1);
    products_[0] = ComplexMatrix::Identity(model.d, model.d);
    for (int t = 1; t <= k; ++t) {
      products_[static_cast<std::size_t>(t)].resize(model.d, model.d);
    }
  }

  void run() {
    if (model_.diagonal) {
      descend_diagonal(0, 0);
    } else {
      descend(0, 0, 0);
    }
  }

 private:
  void descend(int t, std::int64_t row, std::int64_t col) {
    if (t == k_) {
      out_(row, col) = products_[static_cast<std::size_t>(t)].trace() * inv_d_;
      return;
    }
    auto& next = products_[static_cast<std::size_t>(t) + 1];
    const auto& prefix = products_[static_cast<std::size_t>(t)];
    for (int i = 1; i <= model_.n; ++i) {
      for (int j = 1; j <= model_.n; ++j) {
        next.noalias() = prefix * model_.p(i, j);
        descend(t + 1, row * model_.n + (i - 1), col * model_.n + (j - 1));
      }
    }
  }

  // Off-diagonal grid entries vanish, so only i_t = j_t paths survive.
  void descend_diagonal(int t, std::int64_t idx) {
    if (t == k_) {
      out_(idx, idx) = products_[static_cast<std::size_t>(t)].trace() * inv_d_;
      return;
    }
    auto& next = products_[static_cast<std::size_t>(t) + 1];
    const auto& prefix = products_[static_cast<std::size_t>(t)];
    for (int i = 1; i <= model_.n; ++i) {
      next.noalias() = prefix * model_.p(i, i);
      descend_diagonal(t + 1, idx * model_.n + (i - 1));
    }
  }

  const MagicUnitaryModel& model_;
  int k_;
  ComplexMatrix& out_;
  double inv_d_;
  std::vector<ComplexMatrix> products_;
};

// The Cesaro step requires a contraction; a norm estimate above 1 + tol is a
// definitive violation since the estimate is a lower bound.
void require_contraction(const TransferMatrix& transfer, Tolerance tol) {
  const double estimate = operator_norm_estimate(transfer.data, kNormGuardIters);
  if (estimate > 1.0 + tol.scaled(transfer.data.rows())) {
    throw InvalidInputError(
        "transfer matrix at level " + std::to_string(transfer.k) +
        " has operator norm >= " + std::to_string(estimate) +
        "; Cesaro averaging requires a contraction (invalid model?)");
  }
}

}  // namespace

std::int64_t tuple_index(std::span<const int> tuple, int n) {
  std::int64_t idx = 0;
  for (int v : tuple) idx = idx * n + (v - 1);
  return idx;
}

TransferMatrix build_transfer(const MagicUnitaryModel& model, int k,
                              const Capacity& cap) {
  const std::int64_t dim = checked_power_dim(model, k, cap);
  TransferMatrix transfer{k, model.n, ComplexMatrix::Zero(dim, dim)};
  TransferBuilder(model, k, transfer.data).run();
  return transfer;
}

Multiplicity multiplicity_of_transfer(const TransferMatrix& transfer,
                                      MultiplicityMethod method,
                                      Tolerance tol) {
  switch (method) {
    case MultiplicityMethod::kernel: {
      const RankCount kc = eigenvalue_one_multiplicity(transfer.data, tol);
      return {kc.count, kc.marginal};
    }
    case MultiplicityMethod::cesaro: {
      require_contraction(transfer, tol);
      const CesaroResult cesaro = cesaro_projector(transfer.data, tol);
      const RankCount rc = numeric_rank(cesaro.projector, tol);
      return {rc.count, rc.marginal};
    }
    case MultiplicityMethod::both: {
      const RankCount kc = eigenvalue_one_multiplicity(transfer.data, tol);
      require_contraction(transfer, tol);
      const CesaroResult cesaro = cesaro_projector(transfer.data, tol);
      const RankCount rc = numeric_rank(cesaro.projector, tol);
      if (kc.count != rc.count) {
        throw MethodDisagreementError(
            "multiplicity methods disagree at level " +
                std::to_string(transfer.k) + ": kernel says " +
                std::to_string(kc.count) + ", cesaro says " +
                std::to_string(rc.count) +
                " (tolerance failure or invalid model)",
            kc.count, rc.count);
      }
      return {kc.count, kc.marginal || rc.marginal};
    }
  }
  throw std::logic_error("unreachable multiplicity method");
}

Multiplicity multiplicity_one(const MagicUnitaryModel& model, int k,
                              MultiplicityMethod method, Tolerance tol,
                              const Capacity& cap) {
  return multiplicity_of_transfer(build_transfer(model, k, cap), method, tol);
}

Complex convolution_power_eval(const MagicUnitaryModel& model, const Word& word,
                               long long r, const Capacity& cap) {
  validate_word(word, model.n);
  if (r < 1) throw InvalidInputError("convolution power r must be >= 1");
  const int k = word.length();
  const TransferMatrix transfer = build_transfer(model, k, cap);
  const std::int64_t dim = transfer.data.rows();

  std::vector<int> row_tuple, col_tuple;
  for (const auto& [i, j] : word.letters) {
    row_tuple.push_back(i);
    col_tuple.push_back(j);
  }
  const std::int64_t row = tuple_index(row_tuple, model.n);
  const std::int64_t col = tuple_index(col_tuple, model.n);

  // Repeated matvec is cheaper than matrix powers unless r is large.
  if (r <= 4 * dim) {
    ComplexVector v = ComplexVector::Zero(dim);
    v[col] = Complex(1.0, 0.0);
    for (long long step = 0; step < r; ++step) v = transfer.data * v;
    return v[row];
  }
  ComplexMatrix result = ComplexMatrix::Identity(dim, dim);
  ComplexMatrix base = transfer.data;
  long long e = r;
  while (e > 0) {
    if (e & 1) result = (result * base).eval();
    base = (base * base).eval();
    e >>= 1;
  }
  return result(row, col);
}

Complex idempotent_eval(const MagicUnitaryModel& model, const Word& word,
                        Tolerance tol, const Capacity& cap) {
  validate_word(word, model.n);
  const TransferMatrix transfer = build_transfer(model, word.length(), cap);
  require_contraction(transfer, tol);
  const CesaroResult cesaro = cesaro_projector(transfer.data, tol);

  std::vector<int> row_tuple, col_tuple;
  for (const auto& [i, j] : word.letters) {
    row_tuple.push_back(i);
    col_tuple.push_back(j);
  }
  return cesaro.projector(tuple_index(row_tuple, model.n),
                          tuple_index(col_tuple, model.n));
}

}  // namespace hopfcheck
