#pragma once

// Binary matrices over a fixed, 1-based column universe, column orderings,
// and the block/gap profile of a row under an ordering.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gc1p {

/// 1-based column identifier.
using Column = std::uint32_t;

/// Strictly increasing list of the columns holding a one.
using RowSupport = std::vector<Column>;

/// Thrown by every text parser in the library; carries the 1-based line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class BinaryMatrix {
 public:
  /// Rows are sorted on construction. Throws std::invalid_argument on a
  /// zero-width universe, an index outside [1, num_columns], or a repeated
  /// index within one row. Empty and duplicate rows are kept.
  explicit BinaryMatrix(std::size_t num_columns, std::vector<RowSupport> rows = {});

  std::size_t num_columns() const noexcept { return num_columns_; }
  std::size_t num_rows() const noexcept { return rows_.size(); }
  const std::vector<RowSupport>& rows() const noexcept { return rows_; }
  const RowSupport& row(std::size_t index) const { return rows_.at(index); }

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  std::size_t num_columns_;
  std::vector<RowSupport> rows_;
};

/// A permutation of the columns: position p (1-based) holds column_at(p).
class ColumnOrdering {
 public:
  static ColumnOrdering identity(std::size_t num_columns);

  /// Throws std::invalid_argument unless `forward` is a permutation of
  /// 1..forward.size().
  static ColumnOrdering from_forward(std::vector<Column> forward);

  std::size_t size() const noexcept { return forward_.size(); }
  Column column_at(std::size_t position) const { return forward_.at(position - 1); }
  std::size_t position_of(Column column) const { return inverse_.at(column - 1); }
  std::span<const Column> forward() const noexcept { return forward_; }

  ColumnOrdering reversed() const;

  friend bool operator==(const ColumnOrdering& a, const ColumnOrdering& b) {
    return a.forward_ == b.forward_;
  }

 private:
  ColumnOrdering() = default;

  std::vector<Column> forward_;
  std::vector<std::size_t> inverse_;  // inverse_[c - 1] = 1-based position of c
};

/// A limit that is either a finite value or unbounded.
class Bound {
 public:
  constexpr Bound(std::uint32_t value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  static constexpr Bound unbounded() { return Bound(); }

  constexpr bool is_unbounded() const noexcept { return !value_.has_value(); }
  constexpr std::uint32_t value() const { return value_.value(); }
  constexpr bool admits(std::uint64_t x) const noexcept { return !value_ || x <= *value_; }

  /// Accepts a nonnegative decimal integer or the token "inf".
  static Bound parse(std::string_view text);
  std::string to_string() const;

  /// Unbounded compares greater than every finite bound.
  friend constexpr std::strong_ordering operator<=>(const Bound& a, const Bound& b) noexcept {
    if (a.is_unbounded() || b.is_unbounded())
      return static_cast<int>(a.is_unbounded()) <=> static_cast<int>(b.is_unbounded());
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const Bound&, const Bound&) = default;

 private:
  constexpr Bound() = default;
  std::optional<std::uint32_t> value_;
};

/// (k, delta): at most k blocks per row, no gap wider than delta.
struct GapSpec {
  Bound max_blocks;
  Bound max_gap;

  /// Throws std::invalid_argument when a finite max_blocks is 0.
  static GapSpec make(Bound max_blocks, Bound max_gap);
  std::string to_string() const;

  friend bool operator==(const GapSpec&, const GapSpec&) = default;
};

struct RowProfile {
  std::size_t block_count = 0;
  std::vector<std::size_t> gaps;  // left to right, boundary zeros excluded

  std::size_t max_gap() const noexcept;
  friend bool operator==(const RowProfile&, const RowProfile&) = default;
};

enum class Violation { kTooManyBlocks, kGapTooLarge };

std::string_view to_string(Violation v);

struct RowViolation {
  std::size_t row = 0;  // 1-based
  RowProfile profile;
  Violation kind = Violation::kTooManyBlocks;
};

struct CheckReport {
  bool ok = true;
  std::optional<RowViolation> first_violation;
};

RowProfile profile_row(std::span<const Column> row, const ColumnOrdering& ordering);

/// Throws std::invalid_argument when the ordering's universe differs from
/// the matrix's.
CheckReport check_ordering(const BinaryMatrix& matrix, const ColumnOrdering& ordering,
                           const GapSpec& spec);

/// Moves column c to position ordering.position_of(c).
BinaryMatrix apply_ordering(const BinaryMatrix& matrix, const ColumnOrdering& ordering);

// --- text formats ----------------------------------------------------------

enum class MatrixFormat { kSparse, kDense };

BinaryMatrix parse_matrix(std::string_view text, MatrixFormat format);
BinaryMatrix parse_matrix(std::istream& in, MatrixFormat format);
std::string serialize_matrix(const BinaryMatrix& matrix, MatrixFormat format);

/// Single line of space-separated column ids forming a permutation.
ColumnOrdering parse_ordering(std::string_view text);
std::string serialize_ordering(const ColumnOrdering& ordering);

}  // namespace gc1p
