#pragma once

// Exact decision procedures for (k, delta)-consecutive orderings.
//
//   decide       complete backtracking search with admissible pruning
//   brute_force  enumerates every permutation (oracle for small matrices)
//   classic_c1p  polynomial consecutive-ones test for the (1, 0) case

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "gc1p/bitmatrix.hpp"

namespace gc1p {

enum class SolveStatus { kSatisfied, kExhausted, kTimedOut };

std::string_view to_string(SolveStatus status);

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  std::chrono::duration<double> elapsed{0};
  std::uint64_t pruned_gap = 0;        // a row's open gap exceeded delta
  std::uint64_t pruned_blocks = 0;     // a row would open block k + 1
  std::uint64_t pruned_forced = 0;     // rows demanding the next position disagree
  std::uint64_t pruned_symmetry = 0;   // last column before the first
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kExhausted;
  std::optional<ColumnOrdering> witness;  // set iff status == kSatisfied
  SearchStats stats;
};

enum class ColumnHeuristic { kInputOrder, kMostConstrained };

struct SearchConfig {
  std::optional<std::chrono::duration<double>> timeout;
  std::optional<std::uint64_t> node_limit;
  bool symmetry_breaking = true;
  ColumnHeuristic column_heuristic = ColumnHeuristic::kMostConstrained;
  unsigned thread_count = 1;
};

/// Complete search: kExhausted is a proof that no ordering satisfies `spec`.
/// kTimedOut is returned only when a limit in `config` was reached.
SolveOutcome decide(const BinaryMatrix& matrix, const GapSpec& spec,
                    const SearchConfig& config = {});

struct ExhaustiveReport {
  std::uint64_t valid_count = 0;
  std::vector<ColumnOrdering> witnesses;  // lexicographic by forward map, capped
};

struct BruteForceOptions {
  std::size_t column_cap = 10;
  std::size_t witness_cap = 16;
};

/// Hard ceiling on brute_force's column_cap regardless of options.
inline constexpr std::size_t kBruteForceMaxColumns = 20;

/// Visits every valid ordering in lexicographic order of forward maps.
/// Throws std::out_of_range when num_columns exceeds `column_cap`.
void for_each_valid_ordering(const BinaryMatrix& matrix, const GapSpec& spec,
                             std::size_t column_cap,
                             const std::function<void(const ColumnOrdering&)>& visit);

ExhaustiveReport brute_force(const BinaryMatrix& matrix, const GapSpec& spec,
                             const BruteForceOptions& options = {});

/// Consecutive-ones test in polynomial time. Returns an ordering under
/// which every row is a single block, or nullopt when none exists.
std::optional<ColumnOrdering> classic_c1p(const BinaryMatrix& matrix);

}  // namespace gc1p
