#include "hopfcheck/moments.hpp"

#include "hopfcheck/types.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hopfcheck {

namespace {

void validate_word_range(const Word& word, int n, const char* who) {
  if (word.letters.empty()) {
    throw InvalidInputError(std::string(who) + ": word must be nonempty");
  }
  for (const auto& [i, j] : word.letters) {
    if (i < 1 || i > n || j < 1 || j > n) {
      throw InvalidInputError(std::string(who) + ": word letter (" +
                              std::to_string(i) + "," + std::to_string(j) +
                              ") out of range 1.." + std::to_string(n));
    }
  }
}

// Orbits of the generated group on {1..n}^k, by union-find over tuple ids.
long long orbit_count_on_tuples(const std::vector<Permutation>& generators,
                                int n, int k, std::int64_t space) {
  std::vector<std::int64_t> parent(static_cast<std::size_t>(space));
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::int64_t x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };

  std::vector<int> tuple(static_cast<std::size_t>(k));
  for (std::int64_t idx = 0; idx < space; ++idx) {
    std::int64_t rest = idx;
    for (int t = k - 1; t >= 0; --t) {
      tuple[static_cast<std::size_t>(t)] = static_cast<int>(rest % n) + 1;
      rest /= n;
    }
    for (const auto& g : generators) {
      std::int64_t image = 0;
      for (int t = 0; t < k; ++t) {
        image = image * n + (g.apply(tuple[static_cast<std::size_t>(t)]) - 1);
      }
      const std::int64_t a = find(idx);
      const std::int64_t b = find(image);
      if (a != b) parent[static_cast<std::size_t>(a)] = b;
    }
  }
  long long orbits = 0;
  for (std::int64_t x = 0; x < space; ++x) {
    if (find(x) == x) ++orbits;
  }
  return orbits;
}

}  // namespace

Rational classical_character_moment(
    const std::vector<Permutation>& group, int k, std::int64_t crosscheck_cap,
    const std::vector<Permutation>& crosscheck_generators) {
  if (group.empty()) {
    throw InvalidInputError("classical_character_moment: empty group");
  }
  if (k < 1) throw InvalidInputError("classical_character_moment: k must be >= 1");
  const int n = group.front().size();

  Integer total = 0;
  for (const auto& g : group) {
    if (g.size() != n) {
      throw DimensionError("classical_character_moment: mixed degrees in group");
    }
    Integer fixed(g.fixed_point_count());
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), fixed.get_mpz_t(),
               static_cast<unsigned long>(k));
    total += power;
  }
  Rational moment(total, Integer(static_cast<unsigned long>(group.size())));
  moment.canonicalize();

  std::int64_t space = 1;
  bool fits = true;
  for (int t = 0; t < k; ++t) {
    space *= n;
    if (space > crosscheck_cap) {
      fits = false;
      break;
    }
  }
  if (fits) {
    const auto& gens =
        crosscheck_generators.empty() ? group : crosscheck_generators;
    const long long orbits = orbit_count_on_tuples(gens, n, k, space);
    if (moment != Rational(static_cast<long>(orbits))) {
      throw std::logic_error(
          "classical_character_moment: Burnside count " + to_string(moment) +
          " disagrees with direct orbit enumeration " + std::to_string(orbits));
    }
  }
  return moment;
}

Rational classical_haar_monomial(const std::vector<Permutation>& group,
                                 const Word& word) {
  if (group.empty()) {
    throw InvalidInputError("classical_haar_monomial: empty group");
  }
  validate_word_range(word, group.front().size(), "classical_haar_monomial");
  long long matches = 0;
  for (const auto& g : group) {
    bool hit = true;
    for (const auto& [i, j] : word.letters) {
      if (g.apply(j) != i) {
        hit = false;
        break;
      }
    }
    if (hit) ++matches;
  }
  Rational value(Integer(static_cast<long>(matches)),
                 Integer(static_cast<unsigned long>(group.size())));
  value.canonicalize();
  return value;
}

RationalMatrix gram_matrix(int n, int k) {
  const std::vector<SetPartition> partitions = enumerate_noncrossing(k);
  const int size = static_cast<int>(partitions.size());
  RationalMatrix gram(size, size);
  for (int a = 0; a < size; ++a) {
    for (int b = a; b < size; ++b) {
      const int joined = join_block_count(partitions[static_cast<std::size_t>(a)],
                                          partitions[static_cast<std::size_t>(b)]);
      Integer value;
      mpz_ui_pow_ui(value.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(joined));
      gram.at(a, b) = Rational(value);
      gram.at(b, a) = gram.at(a, b);
    }
  }
  return gram;
}

RationalMatrix weingarten_matrix(int n, int k) {
  if (n < 4) {
    throw InvalidInputError(
        "weingarten_matrix: requires n >= 4 (for n <= 3 the free and classical "
        "symmetric groups coincide; use the classical oracle)");
  }
  return gram_matrix(n, k).inverse();
}

WeingartenTable make_weingarten_table(int n, int k) {
  WeingartenTable table;
  table.n = n;
  table.k = k;
  table.partitions = enumerate_noncrossing(k);
  table.weingarten = weingarten_matrix(n, k);
  return table;
}

Rational snplus_haar_monomial(const WeingartenTable& table, const Word& word) {
  if (word.length() != table.k) {
    throw DimensionError("snplus_haar_monomial: word length " +
                         std::to_string(word.length()) +
                         " does not match table level " + std::to_string(table.k));
  }
  validate_word_range(word, table.n, "snplus_haar_monomial");

  std::vector<int> row(static_cast<std::size_t>(table.k));
  std::vector<int> col(static_cast<std::size_t>(table.k));
  for (int t = 0; t < table.k; ++t) {
    row[static_cast<std::size_t>(t)] = word.letters[static_cast<std::size_t>(t)].first;
    col[static_cast<std::size_t>(t)] = word.letters[static_cast<std::size_t>(t)].second;
  }

  const int size = static_cast<int>(table.partitions.size());
  std::vector<char> row_ok(static_cast<std::size_t>(size));
  std::vector<char> col_ok(static_cast<std::size_t>(size));
  for (int a = 0; a < size; ++a) {
    row_ok[static_cast<std::size_t>(a)] =
        constant_on_blocks(table.partitions[static_cast<std::size_t>(a)], row);
    col_ok[static_cast<std::size_t>(a)] =
        constant_on_blocks(table.partitions[static_cast<std::size_t>(a)], col);
  }

  Rational value(0);
  for (int a = 0; a < size; ++a) {
    if (!row_ok[static_cast<std::size_t>(a)]) continue;
    for (int b = 0; b < size; ++b) {
      if (!col_ok[static_cast<std::size_t>(b)]) continue;
      value += table.weingarten.at(a, b);
    }
  }
  return value;
}

Rational snplus_haar_monomial(int n, const Word& word) {
  return snplus_haar_monomial(make_weingarten_table(n, word.length()), word);
}

GroupDual GroupDual::from_table(std::vector<std::vector<int>> table,
                                std::vector<int> generators) {
  constexpr std::size_t kTableGuard = 4096;
  const std::size_t order = table.size();
  if (order == 0) throw InvalidInputError("group table is empty");
  if (order > kTableGuard) {
    throw SizeGuardError("group table exceeds the size guard of " +
                         std::to_string(kTableGuard) + " elements");
  }
  for (const auto& row : table) {
    if (row.size() != order) {
      throw InvalidInputError("group table is not square");
    }
    for (int v : row) {
      if (v < 0 || static_cast<std::size_t>(v) >= order) {
        throw InvalidInputError("group table entry out of range");
      }
    }
  }
  // Rows and columns must be permutations of the element set.
  for (std::size_t a = 0; a < order; ++a) {
    std::vector<bool> seen_row(order, false), seen_col(order, false);
    for (std::size_t b = 0; b < order; ++b) {
      const int r = table[a][b];
      const int c = table[b][a];
      if (seen_row[static_cast<std::size_t>(r)] ||
          seen_col[static_cast<std::size_t>(c)]) {
        throw InvalidInputError(
            "group table row/column " + std::to_string(a) +
            " is not a bijection (not a group multiplication table)");
      }
      seen_row[static_cast<std::size_t>(r)] = true;
      seen_col[static_cast<std::size_t>(c)] = true;
    }
  }
  int identity = -1;
  for (std::size_t e = 0; e < order; ++e) {
    bool ok = true;
    for (std::size_t b = 0; b < order && ok; ++b) {
      ok = table[e][b] == static_cast<int>(b) && table[b][e] == static_cast<int>(b);
    }
    if (ok) {
      identity = static_cast<int>(e);
      break;
    }
  }
  if (identity < 0) {
    throw InvalidInputError("group table has no two-sided identity");
  }
  if (generators.empty()) {
    throw InvalidInputError("group dual needs at least one generator index");
  }
  for (int g : generators) {
    if (g < 0 || static_cast<std::size_t>(g) >= order) {
      throw InvalidInputError("generator index " + std::to_string(g) +
                              " out of range");
    }
  }
  GroupDual dual;
  dual.table = std::move(table);
  dual.generators = std::move(generators);
  dual.identity = identity;
  return dual;
}

Rational group_dual_character_moment(const GroupDual& dual, int k) {
  if (k < 1) throw InvalidInputError("group_dual_character_moment: k must be >= 1");
  const std::size_t order = dual.table.size();
  // Count length-k generator words landing on each element.
  std::vector<Integer> counts(order, Integer(0));
  counts[static_cast<std::size_t>(dual.identity)] = 1;
  for (int step = 0; step < k; ++step) {
    std::vector<Integer> next(order, Integer(0));
    for (std::size_t e = 0; e < order; ++e) {
      if (counts[e] == 0) continue;
      for (int g : dual.generators) {
        const int to = dual.table[e][static_cast<std::size_t>(g)];
        next[static_cast<std::size_t>(to)] += counts[e];
      }
    }
    counts = std::move(next);
  }
  return Rational(counts[static_cast<std::size_t>(dual.identity)]);
}

ClassicalOracle::ClassicalOracle(int n_in, std::vector<Permutation> generators_in,
                                 std::size_t size_guard)
    : n(n_in), generators(std::move(generators_in)) {
  if (n < 1) throw InvalidInputError("classical oracle: n must be positive");
  for (const auto& g : generators) {
    if (g.size() != n) {
      throw DimensionError("classical oracle: generator degree " +
                           std::to_string(g.size()) + " does not match n=" +
                           std::to_string(n));
    }
  }
  if (generators.empty()) {
    generators.push_back(Permutation::identity(n));
  }
  elements = generate_group(generators, size_guard);
}

FreeSymmetricOracle::FreeSymmetricOracle(int n_in) : n(n_in) {
  if (n < 4) {
    throw InvalidInputError(
        "free symmetric oracle requires n >= 4; for n <= 3 it coincides with "
        "the classical symmetric group, use the classical oracle");
  }
}

ExplicitOracle::ExplicitOracle(std::vector<Rational> values_in)
    : values(std::move(values_in)) {
  for (std::size_t t = 0; t < values.size(); ++t) {
    if (!is_integer(values[t]) || values[t] < 0) {
      throw InvalidInputError(
          "explicit oracle value c_" + std::to_string(t + 1) + " = " +
          to_string(values[t]) +
          " is not a nonnegative integer (moments are fixed-space dimensions)");
    }
  }
}

namespace {

// Catalan number as an exact integer, unguarded.
Integer catalan_integer(int k) {
  std::vector<Integer> c(static_cast<std::size_t>(k) + 1, Integer(0));
  c[0] = 1;
  for (int m = 1; m <= k; ++m) {
    for (int i = 0; i < m; ++i) {
      c[static_cast<std::size_t>(m)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(m - 1 - i)];
    }
  }
  return c[static_cast<std::size_t>(k)];
}

}  // namespace

Rational character_moment(const MomentOracle& oracle, int k) {
  if (k < 1) throw InvalidInputError("character_moment: k must be >= 1");
  return std::visit(
      [k](const auto& concrete) -> Rational {
        using T = std::decay_t<decltype(concrete)>;
        if constexpr (std::is_same_v<T, ClassicalOracle>) {
          return classical_character_moment(concrete.elements, k, 65536,
                                            concrete.generators);
        } else if constexpr (std::is_same_v<T, FreeSymmetricOracle>) {
          return Rational(catalan_integer(k));
        } else if constexpr (std::is_same_v<T, GroupDual>) {
          return group_dual_character_moment(concrete, k);
        } else {
          if (static_cast<std::size_t>(k) > concrete.values.size()) {
            throw InvalidInputError("explicit oracle defines only " +
                                    std::to_string(concrete.values.size()) +
                                    " moments, asked for level " +
                                    std::to_string(k));
          }
          return concrete.values[static_cast<std::size_t>(k - 1)];
        }
      },
      oracle);
}

bool supports_haar_monomial(const MomentOracle& oracle) {
  return std::holds_alternative<ClassicalOracle>(oracle) ||
         std::holds_alternative<FreeSymmetricOracle>(oracle);
}

Rational haar_monomial(const MomentOracle& oracle, const Word& word) {
  if (const auto* classical = std::get_if<ClassicalOracle>(&oracle)) {
    return classical_haar_monomial(classical->elements, word);
  }
  if (const auto* free = std::get_if<FreeSymmetricOracle>(&oracle)) {
    return snplus_haar_monomial(free->n, word);
  }
  throw InvalidInputError(
      "this oracle kind does not evaluate Haar monomials (classical and "
      "free_symmetric kinds do)");
}

}  // namespace hopfcheck
