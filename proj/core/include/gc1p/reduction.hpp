#pragma once

// 3SAT -> gapped consecutive-ones reductions.
//
// Column layout, left to right in every valid ordering (up to reversal):
//
//   b_1 .. b_n            variable blocks, b_i = {2i-1, 2i}; the orientation
//                         (2i-1, 2i) encodes v_i = true
//   2n+1 .. 2n+d          separator, pinned in order by a fixed-order gadget
//   B_1 .. B_m            clause blocks
//
// Two constructions are provided:
//
//   kWideGap  k >= 2, delta >= 2, clause blocks of 5 columns   (--theorem 2)
//   kUnitGap  k >= 3, delta = 1,  clause blocks of 4 columns   (--theorem 3)
//
// Variant::kLiteral reproduces the printed index formulas; kRepaired (the
// default) applies the fixes catalogued in REPAIRS.md.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gc1p/bitmatrix.hpp"
#include "gc1p/cnf.hpp"
#include "gc1p/solver.hpp"

namespace gc1p {

enum class Construction { kWideGap, kUnitGap };
enum class Variant { kLiteral, kRepaired };

std::string_view to_string(Construction c);
std::string_view to_string(Variant v);

/// Accepts "2" / "3" (the CLI's --theorem values).
Construction parse_construction(std::string_view text);
/// Accepts "literal" / "repaired".
Variant parse_variant(std::string_view text);

struct ColumnRole {
  enum class Kind { kVariable, kSeparator, kClause };
  Kind kind = Kind::kVariable;
  std::uint32_t index = 0;  // variable i, separator position, or clause j
  std::uint32_t slot = 0;   // 1-based within a variable or clause block

  friend bool operator==(const ColumnRole&, const ColumnRole&) = default;
};

struct ReductionParams {
  Construction construction = Construction::kUnitGap;
  Variant variant = Variant::kRepaired;
  std::uint32_t k = 0;
  std::uint32_t delta = 0;
  std::uint32_t d = 0;  // separator width
  std::uint32_t n = 0;  // variables
  std::uint32_t m = 0;  // clauses
  std::size_t nominal_columns = 0;  // printed closed forms
  std::size_t nominal_rows = 0;
};

struct ReductionOutput {
  BinaryMatrix matrix;
  std::vector<ColumnRole> legend;  // legend[c - 1] describes column c
  ReductionParams params;
  Cnf formula;

  GapSpec spec() const { return GapSpec::make(params.k, params.delta); }
};

/// Separator width: max(2k, 5), except kWideGap/kRepaired which uses
/// max(2k, 2 delta + 3) so the separator gadget is rigid.
std::uint32_t separator_width(Construction c, std::uint32_t k, std::uint32_t delta, Variant v);

/// (k, 1) construction. Requires k >= 3 and exactly three literals per
/// clause; throws std::invalid_argument otherwise.
ReductionOutput reduce_unit_gap(const Cnf& cnf3, std::uint32_t k,
                                Variant variant = Variant::kRepaired);

/// (k, delta) construction for k, delta >= 2. Same preconditions style.
ReductionOutput reduce_wide_gap(const Cnf& cnf3, std::uint32_t k, std::uint32_t delta,
                                Variant variant = Variant::kRepaired);

/// Dispatches on `c`; delta is ignored for kUnitGap.
ReductionOutput reduce(const Cnf& cnf3, Construction c, std::uint32_t k, std::uint32_t delta,
                       Variant variant = Variant::kRepaired);

/// Column -> role sidecar as a JSON document.
std::string legend_json(const ReductionOutput& output);

/// No internal order of some clause block satisfies the generated rows even
/// though the assignment satisfies the formula: the construction is broken.
class ConstructionDiscrepancy : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lays out variable blocks by truth value, the separator in order, and clause
/// blocks in index order with an internal arrangement found by exhaustive
/// search. Throws std::invalid_argument when `assignment` does not satisfy
/// output.formula, ConstructionDiscrepancy when no arrangement exists.
ColumnOrdering witness_from_assignment(const ReductionOutput& output,
                                       const Assignment& assignment);

/// Reads the truth assignment encoded by an ordering's variable-block
/// orientations (after undoing a global reversal of the separator).
Assignment assignment_from_ordering(const ReductionOutput& output,
                                    const ColumnOrdering& ordering);

struct EquivalenceReport {
  std::optional<bool> formula_satisfiable;
  SolveStatus matrix_decision = SolveStatus::kTimedOut;
  std::optional<bool> agree;  // set only when both sides are decided
  Variant variant = Variant::kRepaired;
  std::optional<bool> witness_valid;  // satisfiable formulas only
  std::string note;
  std::size_t columns = 0;
  std::size_t rows = 0;
  SearchStats stats;
};

/// Runs the SAT oracle on `cnf` and decide() on the generated matrix.
/// Clauses are brought to exactly three literals first.
EquivalenceReport verify_reduction(const Cnf& cnf, Construction c, std::uint32_t k,
                                   std::uint32_t delta, const SearchConfig& config = {},
                                   Variant variant = Variant::kRepaired);

}  // namespace gc1p
