#pragma once

// Test-only oracles, written independently of the library code they check.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "gc1p/bitmatrix.hpp"
#include "gc1p/cnf.hpp"

namespace gc1p::test {

// Blocks and gaps of `row` when column c sits at position pos[c - 1].
struct Shape {
  std::size_t blocks = 0;
  std::size_t widest_gap = 0;
};

inline Shape shape_of(const RowSupport& row, const std::vector<std::size_t>& pos) {
  std::vector<std::size_t> p;
  for (Column c : row) p.push_back(pos[c - 1]);
  std::sort(p.begin(), p.end());
  Shape s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i == 0 || p[i] != p[i - 1] + 1) ++s.blocks;
    if (i > 0 && p[i] > p[i - 1] + 1) s.widest_gap = std::max(s.widest_gap, p[i] - p[i - 1] - 1);
  }
  return s;
}

// max_blocks / max_gap of -1 mean unbounded.
inline bool admits(const BinaryMatrix& m, const std::vector<std::size_t>& pos, long max_blocks,
                   long max_gap) {
  for (const auto& row : m.rows()) {
    const auto s = shape_of(row, pos);
    if (max_blocks >= 0 && s.blocks > static_cast<std::size_t>(max_blocks)) return false;
    if (max_gap >= 0 && s.widest_gap > static_cast<std::size_t>(max_gap)) return false;
  }
  return true;
}

// Number of column permutations satisfying (max_blocks, max_gap).
inline std::uint64_t count_valid(const BinaryMatrix& m, long max_blocks, long max_gap) {
  std::vector<std::size_t> forward(m.num_columns());
  for (std::size_t i = 0; i < forward.size(); ++i) forward[i] = i + 1;
  std::uint64_t count = 0;
  do {
    std::vector<std::size_t> pos(forward.size());
    for (std::size_t p = 0; p < forward.size(); ++p) pos[forward[p] - 1] = p;
    if (admits(m, pos, max_blocks, max_gap)) ++count;
  } while (std::next_permutation(forward.begin(), forward.end()));
  return count;
}

inline BinaryMatrix random_matrix(std::mt19937_64& rng, std::uint32_t max_cols,
                                  std::uint32_t max_rows, double density) {
  std::uniform_int_distribution<std::uint32_t> width(1, max_cols);
  std::uniform_int_distribution<std::uint32_t> height(0, max_rows);
  std::bernoulli_distribution one(density);
  const auto cols = width(rng);
  std::vector<RowSupport> rows(height(rng));
  for (auto& row : rows)
    for (Column c = 1; c <= cols; ++c)
      if (one(rng)) row.push_back(c);
  return BinaryMatrix(cols, std::move(rows));
}

inline ColumnOrdering random_ordering(std::mt19937_64& rng, std::size_t n) {
  std::vector<Column> forward(n);
  for (std::size_t i = 0; i < n; ++i) forward[i] = static_cast<Column>(i + 1);
  std::shuffle(forward.begin(), forward.end(), rng);
  return ColumnOrdering::from_forward(std::move(forward));
}

// Truth-table satisfiability, independent of sat_brute_force's enumeration.
inline bool satisfiable(const Cnf& cnf) {
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << cnf.num_vars); ++bits) {
    const bool all = std::all_of(cnf.clauses.begin(), cnf.clauses.end(), [&](const Clause& c) {
      return std::any_of(c.begin(), c.end(), [&](const Literal& l) {
        return ((bits >> (l.variable - 1)) & 1) == (l.positive ? 1U : 0U);
      });
    });
    if (all) return true;
  }
  return false;
}

// All formulas over 1 or 2 variables with at most 2 clauses, each clause a
// set of 1 to 3 distinct literals.
inline std::vector<Cnf> tiny_corpus() {
  std::vector<Cnf> out;
  for (std::uint32_t n = 1; n <= 2; ++n) {
    std::vector<Literal> lits;
    for (std::uint32_t v = 1; v <= n; ++v) {
      lits.push_back({v, true});
      lits.push_back({v, false});
    }
    std::vector<Clause> clauses;
    for (std::uint32_t mask = 1; mask < (1U << lits.size()); ++mask) {
      Clause c;
      for (std::size_t i = 0; i < lits.size(); ++i)
        if (mask >> i & 1) c.push_back(lits[i]);
      if (c.size() <= 3) clauses.push_back(c);
    }
    out.push_back({n, {}});
    for (std::size_t i = 0; i < clauses.size(); ++i) {
      out.push_back({n, {clauses[i]}});
      for (std::size_t j = i; j < clauses.size(); ++j) out.push_back({n, {clauses[i], clauses[j]}});
    }
  }
  return out;
}

}  // namespace gc1p::test
