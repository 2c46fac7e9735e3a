#pragma once

// Verification suites: oracle cross-checks for the solver, exhaustive
// rigidity checks for the gadget, and formula/matrix equivalence for the
// reductions. Shared by `gc1p verify` and the acceptance test binary.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gc1p {

struct CaseResult {
  std::string name;
  int criterion = 0;        // acceptance criterion number, 0 for supporting cases
  bool passed = false;
  bool skipped = false;     // over budget where the criterion allows skipping
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;  // a case slower than this fails
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;

  /// Every case that was not skipped passed.
  bool passed() const;
};

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  /// Per-search limit for the reduction instances. Unset means each case
  /// runs up to its own budget.
  std::optional<std::chrono::duration<double>> timeout;
  std::size_t corpus_size = 240;
  unsigned threads = 1;
  bool include_stretch = true;
  // Restrict the gadget suite to a single (n, delta, k) rigidity run.
  std::optional<std::uint32_t> gadget_n;
  std::optional<std::uint32_t> gadget_delta;
  std::optional<std::uint32_t> gadget_k;
};

SuiteReport run_gadget_suite(const SuiteOptions& options = {});
SuiteReport run_solver_suite(const SuiteOptions& options = {});
SuiteReport run_reduction_suite(const SuiteOptions& options = {});

/// "gadget", "solver", "reduction" or "all". Throws std::invalid_argument
/// on any other name.
std::vector<SuiteReport> run_suites(std::string_view name, const SuiteOptions& options = {});

struct RepairEntry {
  std::string_view id;              // heading in REPAIRS.md, e.g. "R3"
  std::string_view title;
  std::string_view motivating_run;  // name of the reduction-suite case
};

/// Every deviation of the repaired constructions from the printed ones.
const std::vector<RepairEntry>& repair_catalog();

/// REPAIRS.md as shipped, embedded at build time.
std::string_view repairs_ledger_text();

}  // namespace gc1p
