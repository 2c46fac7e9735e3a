#include "gc1p/gadget.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "gc1p/solver.hpp"

namespace gc1p {

std::uint64_t gadget_row_count(std::uint64_t n, std::uint64_t delta, bool force) {
  if (!force && n < gadget_min_width(delta))
    throw std::invalid_argument("gadget needs n >= 2*delta+3 (n=" + std::to_string(n) +
                                ", delta=" + std::to_string(delta) + ")");
  // delta(delta + 3) is always even.
  return n * (delta + 1) - delta * (delta + 3) / 2 - 1;
}

Gadget build_gadget(const GadgetSpec& spec) {
  const auto& target = spec.target_order;
  const std::size_t n = target.size();
  if (std::set<Column>(target.begin(), target.end()).size() != n)
    throw std::invalid_argument("gadget target columns must be distinct");
  const bool rigid = n >= gadget_min_width(spec.delta);
  if (!rigid && !spec.allow_non_rigid)
    throw std::invalid_argument("gadget on " + std::to_string(n) + " columns with delta=" +
                                std::to_string(spec.delta) +
                                " is not rigid (needs n >= 2*delta+3); pass the override");

  Gadget gadget;
  gadget.rigidity_guaranteed = rigid;
  for (std::size_t distance = 1; distance <= spec.delta + 1; ++distance)
    for (std::size_t a = 0; a + distance < n; ++a) {
      RowSupport row{target[a], target[a + distance]};
      std::sort(row.begin(), row.end());
      gadget.rows.push_back(std::move(row));
    }
  return gadget;
}

bool keeps_target_order(const ColumnOrdering& ordering, std::uint32_t n) {
  if (n == 0) return true;
  const std::size_t start = ordering.position_of(1);
  const bool ascending = n == 1 || ordering.position_of(2) == start + 1;
  for (Column c = 2; c <= n; ++c) {
    const std::size_t expected = ascending ? start + (c - 1) : start - (c - 1);
    if (!ascending && start < c - 1) return false;
    if (ordering.position_of(c) != expected) return false;
  }
  return true;
}

RigidityReport verify_rigidity(std::uint32_t n, std::uint32_t delta, std::uint32_t k,
                               std::uint32_t extra_columns, std::size_t column_cap) {
  const std::size_t width = std::size_t{n} + extra_columns;
  if (width > column_cap)
    throw std::out_of_range("rigidity check over " + std::to_string(width) +
                            " columns exceeds the cap of " + std::to_string(column_cap));
  std::vector<Column> target(n);
  for (std::uint32_t i = 0; i < n; ++i) target[i] = i + 1;
  auto gadget = build_gadget(GadgetSpec{target, delta, true});
  const BinaryMatrix matrix(width, std::move(gadget.rows));

  RigidityReport report;
  for_each_valid_ordering(matrix, GapSpec::make(k, delta), column_cap,
                          [&](const ColumnOrdering& o) {
                            ++report.valid_count;
                            if (!report.counterexample && !keeps_target_order(o, n))
                              report.counterexample = o;
                          });
  report.rigid = !report.counterexample.has_value();
  return report;
}

}  // namespace gc1p
