#include <algorithm>

#include "gc1p/reduction.hpp"

namespace gc1p {
namespace {

std::vector<std::vector<Column>> clause_groups(const ReductionOutput& output) {
  std::vector<std::vector<std::pair<std::uint32_t, Column>>> slots(output.params.m);
  for (std::size_t c = 0; c < output.legend.size(); ++c) {
    const auto& role = output.legend[c];
    if (role.kind == ColumnRole::Kind::kClause)
      slots[role.index - 1].emplace_back(role.slot, static_cast<Column>(c + 1));
  }
  std::vector<std::vector<Column>> groups;
  for (auto& group : slots) {
    std::sort(group.begin(), group.end());
    std::vector<Column> cols;
    for (auto [slot, c] : group) cols.push_back(c);
    groups.push_back(std::move(cols));
  }
  return groups;
}

bool row_ok(const RowSupport& row, const ColumnOrdering& ordering, const GapSpec& spec) {
  const auto profile = profile_row(row, ordering);
  return spec.max_blocks.admits(profile.block_count) && spec.max_gap.admits(profile.max_gap());
}

}  // namespace

ColumnOrdering witness_from_assignment(const ReductionOutput& output,
                                       const Assignment& assignment) {
  const auto& p = output.params;
  if (assignment.size() < output.formula.num_vars || !satisfies(output.formula, assignment))
    throw std::invalid_argument("assignment does not satisfy the formula");

  std::vector<Column> forward;
  forward.reserve(output.matrix.num_columns());
  for (std::uint32_t i = 1; i <= p.n; ++i) {
    if (assignment[i - 1]) {
      forward.push_back(2 * i - 1);
      forward.push_back(2 * i);
    } else {
      forward.push_back(2 * i);
      forward.push_back(2 * i - 1);
    }
  }
  for (std::uint32_t o = 1; o <= p.d; ++o) forward.push_back(2 * p.n + o);
  const auto groups = clause_groups(output);
  std::vector<std::size_t> group_start;
  for (const auto& group : groups) {
    group_start.push_back(forward.size());
    forward.insert(forward.end(), group.begin(), group.end());
  }
  if (forward.size() != output.matrix.num_columns())
    throw ConstructionDiscrepancy("legend does not cover every column");

  const GapSpec spec = output.spec();
  for (std::size_t j = 0; j < groups.size(); ++j) {
    // Only rows that cut through B_j depend on its internal order.
    std::vector<const RowSupport*> relevant;
    for (const auto& row : output.matrix.rows()) {
      const auto inside = std::count_if(row.begin(), row.end(), [&](Column c) {
        return std::find(groups[j].begin(), groups[j].end(), c) != groups[j].end();
      });
      if (inside > 0 && static_cast<std::size_t>(inside) < groups[j].size())
        relevant.push_back(&row);
    }
    auto first = forward.begin() + static_cast<std::ptrdiff_t>(group_start[j]);
    auto last = first + static_cast<std::ptrdiff_t>(groups[j].size());
    std::sort(first, last);
    bool found = false;
    do {
      const auto ordering = ColumnOrdering::from_forward(forward);
      found = std::all_of(relevant.begin(), relevant.end(),
                          [&](const RowSupport* row) { return row_ok(*row, ordering, spec); });
    } while (!found && std::next_permutation(first, last));
    if (!found)
      throw ConstructionDiscrepancy("no internal arrangement of clause block " +
                                    std::to_string(j + 1) + " satisfies its rows");
  }

  auto ordering = ColumnOrdering::from_forward(std::move(forward));
  const auto report = check_ordering(output.matrix, ordering, spec);
  if (!report.ok)
    throw ConstructionDiscrepancy("assembled witness violates row " +
                                  std::to_string(report.first_violation->row));
  return ordering;
}

Assignment assignment_from_ordering(const ReductionOutput& output,
                                    const ColumnOrdering& ordering) {
  const auto& p = output.params;
  const bool reversed = p.d >= 2 && ordering.position_of(2 * p.n + 1) > ordering.position_of(2 * p.n + 2);
  Assignment assignment(output.formula.num_vars, false);
  for (std::uint32_t i = 1; i <= p.n; ++i) {
    const bool left_first = ordering.position_of(2 * i - 1) < ordering.position_of(2 * i);
    assignment[i - 1] = left_first != reversed;
  }
  return assignment;
}

EquivalenceReport verify_reduction(const Cnf& cnf, Construction c, std::uint32_t k,
                                   std::uint32_t delta, const SearchConfig& config,
                                   Variant variant) {
  const Cnf cnf3 = to_exact3(cnf);
  const auto output = reduce(cnf3, c, k, delta, variant);

  EquivalenceReport report;
  report.variant = variant;
  report.columns = output.matrix.num_columns();
  report.rows = output.matrix.num_rows();

  const auto model = sat_brute_force(cnf3);
  report.formula_satisfiable = model.has_value();

  const auto outcome = decide(output.matrix, output.spec(), config);
  report.matrix_decision = outcome.status;
  report.stats = outcome.stats;
  if (outcome.status != SolveStatus::kTimedOut)
    report.agree = *report.formula_satisfiable == (outcome.status == SolveStatus::kSatisfied);
  if (outcome.witness && !check_ordering(output.matrix, *outcome.witness, output.spec()).ok) {
    report.agree = false;
    report.note = "solver witness fails the checker";
  }

  if (model) {
    try {
      const auto witness = witness_from_assignment(output, *model);
      report.witness_valid = check_ordering(output.matrix, witness, output.spec()).ok;
    } catch (const ConstructionDiscrepancy& e) {
      report.witness_valid = false;
      report.note = e.what();
    }
  }
  return report;
}

}  // namespace gc1p
