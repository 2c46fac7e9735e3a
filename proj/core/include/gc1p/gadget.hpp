#pragma once

// Fixed-order gadget: for a target sequence C of n columns and a gap bound
// delta, one row {C[a], C[b]} for every a < b with b - a <= delta + 1. When
// n >= 2 delta + 3 these rows force C to appear consecutive and in target
// order (or its reversal) in every (k, delta)-consecutive ordering, k >= 2,
// whatever other columns and rows the matrix has.

#include <cstdint>
#include <optional>
#include <vector>

#include "gc1p/bitmatrix.hpp"

namespace gc1p {

struct GadgetSpec {
  std::vector<Column> target_order;
  std::uint32_t delta = 1;
  /// Permit n < 2 delta + 3. The output is then labelled non-rigid.
  bool allow_non_rigid = false;
};

struct Gadget {
  std::vector<RowSupport> rows;
  bool rigidity_guaranteed = true;
};

/// Smallest n for which the gadget is rigid.
constexpr std::uint64_t gadget_min_width(std::uint64_t delta) { return 2 * delta + 3; }

/// n(delta + 1) - delta(delta + 3)/2 - 1. Throws std::invalid_argument when
/// n < 2 delta + 3 unless `force` is set (the closed form then still counts
/// the pairs as long as n >= delta + 1).
std::uint64_t gadget_row_count(std::uint64_t n, std::uint64_t delta, bool force = false);

/// Rows in order of increasing distance, then increasing first position.
/// Throws std::invalid_argument on repeated target columns or, without the
/// override, n < 2 delta + 3.
Gadget build_gadget(const GadgetSpec& spec);

struct RigidityReport {
  bool rigid = false;
  std::uint64_t valid_count = 0;
  std::optional<ColumnOrdering> counterexample;
};

/// Places the gadget on columns 1..n of an (n + extra_columns)-column matrix
/// and enumerates every permutation under spec (k, delta), checking that the
/// gadget columns always sit consecutively in order 1..n or n..1.
/// Throws std::out_of_range when n + extra_columns exceeds `column_cap`.
RigidityReport verify_rigidity(std::uint32_t n, std::uint32_t delta, std::uint32_t k,
                               std::uint32_t extra_columns, std::size_t column_cap = 10);

/// True when columns 1..n occupy consecutive positions in increasing or
/// decreasing order.
bool keeps_target_order(const ColumnOrdering& ordering, std::uint32_t n);

}  // namespace gc1p
