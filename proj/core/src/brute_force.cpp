#include <algorithm>
#include <bit>
#include <numeric>

#include "gc1p/solver.hpp"

namespace gc1p {
namespace {

// Checks one row given as a bitmask of occupied positions.
bool row_admissible(std::uint64_t mask, const GapSpec& spec) {
  if (mask == 0) return true;
  const auto blocks = static_cast<std::uint64_t>(std::popcount(mask & ~(mask << 1)));
  if (!spec.max_blocks.admits(blocks)) return false;
  if (spec.max_gap.is_unbounded() || blocks == 1) return true;
  // Walk the zero runs strictly between the first and last one.
  std::uint64_t rest = mask >> std::countr_zero(mask);
  while (rest) {
    rest >>= std::countr_one(rest);
    if (!rest) break;
    const auto zeros = static_cast<std::uint64_t>(std::countr_zero(rest));
    if (!spec.max_gap.admits(zeros)) return false;
    rest >>= zeros;
  }
  return true;
}

}  // namespace

void for_each_valid_ordering(const BinaryMatrix& matrix, const GapSpec& spec,
                             std::size_t column_cap,
                             const std::function<void(const ColumnOrdering&)>& visit) {
  const std::size_t n = matrix.num_columns();
  if (n > std::min(column_cap, kBruteForceMaxColumns))
    throw std::out_of_range("brute force over " + std::to_string(n) +
                            " columns exceeds the cap of " +
                            std::to_string(std::min(column_cap, kBruteForceMaxColumns)));

  std::vector<RowSupport> rows;
  for (const auto& row : matrix.rows())
    if (row.size() >= 2) rows.push_back(row);

  std::vector<Column> forward(n);
  std::iota(forward.begin(), forward.end(), Column{1});
  std::vector<std::uint32_t> position(n + 1);
  do {
    for (std::size_t p = 0; p < n; ++p) position[forward[p]] = static_cast<std::uint32_t>(p);
    bool ok = true;
    for (const auto& row : rows) {
      std::uint64_t mask = 0;
      for (Column c : row) mask |= std::uint64_t{1} << position[c];
      if (!row_admissible(mask, spec)) {
        ok = false;
        break;
      }
    }
    if (ok) visit(ColumnOrdering::from_forward(forward));
  } while (std::next_permutation(forward.begin(), forward.end()));
}

ExhaustiveReport brute_force(const BinaryMatrix& matrix, const GapSpec& spec,
                             const BruteForceOptions& options) {
  ExhaustiveReport report;
  for_each_valid_ordering(matrix, spec, options.column_cap, [&](const ColumnOrdering& o) {
    ++report.valid_count;
    if (report.witnesses.size() < options.witness_cap) report.witnesses.push_back(o);
  });
  return report;
}

}  // namespace gc1p
