#include "gc1p/bitmatrix.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace gc1p {

BinaryMatrix::BinaryMatrix(std::size_t num_columns, std::vector<RowSupport> rows)
    : num_columns_(num_columns), rows_(std::move(rows)) {
  if (num_columns_ == 0)
    throw std::invalid_argument("matrix must have at least one column");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    auto& row = rows_[r];
    std::sort(row.begin(), row.end());
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 1 || row[i] > num_columns_)
        throw std::invalid_argument("row " + std::to_string(r + 1) + ": index " +
                                    std::to_string(row[i]) + " outside [1, " +
                                    std::to_string(num_columns_) + "]");
      if (i > 0 && row[i] == row[i - 1])
        throw std::invalid_argument("row " + std::to_string(r + 1) + ": duplicate index " +
                                    std::to_string(row[i]));
    }
  }
}

ColumnOrdering ColumnOrdering::identity(std::size_t num_columns) {
  std::vector<Column> forward(num_columns);
  std::iota(forward.begin(), forward.end(), Column{1});
  return from_forward(std::move(forward));
}

ColumnOrdering ColumnOrdering::from_forward(std::vector<Column> forward) {
  ColumnOrdering result;
  result.inverse_.assign(forward.size(), 0);
  for (std::size_t p = 0; p < forward.size(); ++p) {
    const Column c = forward[p];
    if (c < 1 || c > forward.size())
      throw std::invalid_argument("ordering entry " + std::to_string(c) + " outside [1, " +
                                  std::to_string(forward.size()) + "]");
    if (result.inverse_[c - 1] != 0)
      throw std::invalid_argument("ordering repeats column " + std::to_string(c));
    result.inverse_[c - 1] = p + 1;
  }
  result.forward_ = std::move(forward);
  return result;
}

ColumnOrdering ColumnOrdering::reversed() const {
  std::vector<Column> forward(forward_.rbegin(), forward_.rend());
  return from_forward(std::move(forward));
}

Bound Bound::parse(std::string_view text) {
  if (text == "inf") return unbounded();
  std::uint32_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw std::invalid_argument("expected a nonnegative integer or 'inf', got '" +
                                std::string(text) + "'");
  return Bound(value);
}

std::string Bound::to_string() const {
  return is_unbounded() ? std::string("inf") : std::to_string(*value_);
}

GapSpec GapSpec::make(Bound max_blocks, Bound max_gap) {
  if (!max_blocks.is_unbounded() && max_blocks.value() == 0)
    throw std::invalid_argument("k must be at least 1");
  return GapSpec{max_blocks, max_gap};
}

std::string GapSpec::to_string() const {
  return "(" + max_blocks.to_string() + "," + max_gap.to_string() + ")";
}

std::size_t RowProfile::max_gap() const noexcept {
  return gaps.empty() ? 0 : *std::max_element(gaps.begin(), gaps.end());
}

std::string_view to_string(Violation v) {
  switch (v) {
    case Violation::kTooManyBlocks: return "TooManyBlocks";
    case Violation::kGapTooLarge: return "GapTooLarge";
  }
  return "?";
}

RowProfile profile_row(std::span<const Column> row, const ColumnOrdering& ordering) {
  std::vector<std::size_t> positions;
  positions.reserve(row.size());
  for (Column c : row) {
    if (c < 1 || c > ordering.size())
      throw std::invalid_argument("column " + std::to_string(c) + " outside ordering universe");
    positions.push_back(ordering.position_of(c));
  }
  std::sort(positions.begin(), positions.end());

  RowProfile profile;
  if (positions.empty()) return profile;
  profile.block_count = 1;
  for (std::size_t i = 1; i < positions.size(); ++i) {
    const std::size_t zeros = positions[i] - positions[i - 1] - 1;
    if (zeros > 0) {
      ++profile.block_count;
      profile.gaps.push_back(zeros);
    }
  }
  return profile;
}

CheckReport check_ordering(const BinaryMatrix& matrix, const ColumnOrdering& ordering,
                           const GapSpec& spec) {
  if (ordering.size() != matrix.num_columns())
    throw std::invalid_argument("ordering has " + std::to_string(ordering.size()) +
                                " columns, matrix has " + std::to_string(matrix.num_columns()));
  for (std::size_t r = 0; r < matrix.num_rows(); ++r) {
    RowProfile profile = profile_row(matrix.row(r), ordering);
    std::optional<Violation> kind;
    if (!spec.max_blocks.admits(profile.block_count))
      kind = Violation::kTooManyBlocks;
    else if (!spec.max_gap.admits(profile.max_gap()))
      kind = Violation::kGapTooLarge;
    if (kind) return CheckReport{false, RowViolation{r + 1, std::move(profile), *kind}};
  }
  return CheckReport{};
}

BinaryMatrix apply_ordering(const BinaryMatrix& matrix, const ColumnOrdering& ordering) {
  if (ordering.size() != matrix.num_columns())
    throw std::invalid_argument("ordering universe does not match matrix");
  std::vector<RowSupport> rows;
  rows.reserve(matrix.num_rows());
  for (const auto& row : matrix.rows()) {
    RowSupport moved;
    moved.reserve(row.size());
    for (Column c : row) moved.push_back(static_cast<Column>(ordering.position_of(c)));
    rows.push_back(std::move(moved));
  }
  return BinaryMatrix(matrix.num_columns(), std::move(rows));
}

}  // namespace gc1p
