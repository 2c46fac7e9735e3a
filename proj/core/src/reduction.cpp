#include "gc1p/reduction.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "gc1p/gadget.hpp"

namespace gc1p {

std::string_view to_string(Construction c) {
  return c == Construction::kWideGap ? "wide-gap" : "unit-gap";
}

std::string_view to_string(Variant v) { return v == Variant::kLiteral ? "literal" : "repaired"; }

Construction parse_construction(std::string_view text) {
  if (text == "2") return Construction::kWideGap;
  if (text == "3") return Construction::kUnitGap;
  throw std::invalid_argument("construction must be 2 or 3, got '" + std::string(text) + "'");
}

Variant parse_variant(std::string_view text) {
  if (text == "literal") return Variant::kLiteral;
  if (text == "repaired") return Variant::kRepaired;
  throw std::invalid_argument("variant must be 'literal' or 'repaired', got '" +
                              std::string(text) + "'");
}

std::uint32_t separator_width(Construction c, std::uint32_t k, std::uint32_t delta, Variant v) {
  if (c == Construction::kWideGap && v == Variant::kRepaired)
    return std::max(2 * k, 2 * delta + 3);
  return std::max(2 * k, 5U);
}

namespace {

// Collects the ones of one generated row; sorted and deduplicated on finish.
class RowBuilder {
 public:
  RowBuilder(std::uint32_t n, std::uint32_t d) : n_(n), d_(d) {}

  RowBuilder& column(Column c) {
    cols_.insert(c);
    return *this;
  }
  RowBuilder& columns(Column first, Column last) {
    for (Column c = first; c <= last; ++c) cols_.insert(c);
    return *this;
  }
  /// Separator offset in 1..d; offsets outside the range are dropped.
  RowBuilder& separator(std::int64_t offset) {
    if (offset >= 1 && offset <= d_) cols_.insert(static_cast<Column>(2 * n_ + offset));
    return *this;
  }
  /// Offsets first, first+2, ..., up to last (inclusive), clamped to 1..d.
  RowBuilder& separator_every_other(std::int64_t first, std::int64_t last) {
    for (std::int64_t o = first; o <= last; o += 2) separator(o);
    return *this;
  }
  RowBuilder& separator_run(std::int64_t first, std::int64_t last) {
    for (std::int64_t o = first; o <= last; ++o) separator(o);
    return *this;
  }
  /// Separator segment with exactly `gaps` unit gaps that ends on offset d:
  /// offsets 1, 3, ..., 2 gaps + 1, then every offset up to d.
  RowBuilder& separator_with_gaps(std::int64_t gaps) {
    separator_every_other(1, 2 * gaps + 1);
    return separator_run(2 * gaps + 1, d_);
  }
  RowSupport finish() const { return RowSupport(cols_.begin(), cols_.end()); }

 private:
  std::uint32_t n_;
  std::uint32_t d_;
  std::set<Column> cols_;
};

struct Layout {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t d = 0;
  std::uint32_t width = 0;  // clause block width
  bool overlapping_blocks = false;

  std::uint32_t separator_begin() const { return 2 * n + 1; }
  std::uint32_t separator_end() const { return 2 * n + d; }
  /// Column of slot s (1-based) of clause block j.
  Column clause(std::uint32_t j, std::uint32_t s) const {
    if (overlapping_blocks) return 2 * n + d + 4 * j - 4 + (s - 1);
    return 2 * n + d + width * (j - 1) + s;
  }
  std::uint32_t total_columns() const { return 2 * n + d + width * m; }
};

void validate_formula(const Cnf& cnf) {
  if (!is_exact3(cnf))
    throw std::invalid_argument("reduction needs exactly three literals per clause");
  for (const auto& clause : cnf.clauses)
    for (const auto& lit : clause)
      if (lit.variable < 1 || lit.variable > cnf.num_vars)
        throw std::invalid_argument("literal variable out of range");
}

std::vector<ColumnRole> make_legend(const Layout& L) {
  std::vector<ColumnRole> legend(L.total_columns());
  for (std::uint32_t i = 1; i <= L.n; ++i) {
    legend[2 * i - 2] = {ColumnRole::Kind::kVariable, i, 1};
    legend[2 * i - 1] = {ColumnRole::Kind::kVariable, i, 2};
  }
  for (std::uint32_t o = 1; o <= L.d; ++o)
    legend[2 * L.n + o - 1] = {ColumnRole::Kind::kSeparator, o, 0};
  for (std::uint32_t j = 1; j <= L.m; ++j)
    for (std::uint32_t t = 1; t <= L.width; ++t) {
      const Column c = 2 * L.n + L.d + L.width * (j - 1) + t;
      // Overlapping blocks: slot 1 of B_j is the last column of B_{j-1} (or
      // the separator end), so the legend records each column by its
      // higher slot.
      legend[c - 1] = {ColumnRole::Kind::kClause, j, L.overlapping_blocks ? t + 1 : t};
    }
  return legend;
}

// Ones in b_alpha..b_n that are contiguous with the separator exactly when
// the literal is true: 2 alpha for a positive literal, 2 alpha - 1 for a
// negative one, then all of b_{alpha+1}..b_n.
void add_literal_variable_part(RowBuilder& row, const Literal& lit, std::uint32_t n) {
  row.column(lit.positive ? 2 * lit.variable : 2 * lit.variable - 1);
  if (lit.variable < n) row.columns(2 * lit.variable + 1, 2 * n);
}

void add_variable_rows(std::vector<RowSupport>& rows, const Layout& L, std::uint32_t k) {
  for (std::uint32_t i = 1; i <= L.n; ++i) {
    RowBuilder row(L.n, L.d);
    row.columns(2 * i - 1, 2 * L.n).separator_every_other(1, 2 * std::int64_t{k} - 1);
    rows.push_back(row.finish());
  }
}

void add_nesting_rows(std::vector<RowSupport>& rows, const Layout& L, std::uint32_t k) {
  for (std::uint32_t j = 1; j <= L.m; ++j) {
    RowBuilder row(L.n, L.d);
    row.separator_every_other(std::int64_t{L.d} - 2 * k + 2, L.d);
    for (std::uint32_t jj = 1; jj <= j; ++jj)
      for (std::uint32_t s = 1; s <= L.width; ++s) row.column(L.clause(jj, s));
    rows.push_back(row.finish());
  }
}

void add_preceding_blocks(RowBuilder& row, const Layout& L, std::uint32_t j) {
  for (std::uint32_t jj = 1; jj < j; ++jj)
    for (std::uint32_t s = 1; s <= L.width; ++s) row.column(L.clause(jj, s));
}

void add_separator_gadget(std::vector<RowSupport>& rows, const Layout& L, std::uint32_t delta) {
  std::vector<Column> target;
  for (Column c = L.separator_begin(); c <= L.separator_end(); ++c) target.push_back(c);
  auto gadget = build_gadget(GadgetSpec{std::move(target), delta, true});
  for (auto& row : gadget.rows) rows.push_back(std::move(row));
}

}  // namespace

ReductionOutput reduce_unit_gap(const Cnf& cnf3, std::uint32_t k, Variant variant) {
  if (k < 3) throw std::invalid_argument("the (k,1) construction needs k >= 3");
  validate_formula(cnf3);
  const bool literal = variant == Variant::kLiteral;

  Layout L;
  L.n = cnf3.num_vars;
  L.m = static_cast<std::uint32_t>(cnf3.clauses.size());
  L.d = separator_width(Construction::kUnitGap, k, 1, variant);
  L.width = 4;
  L.overlapping_blocks = literal;

  std::vector<RowSupport> rows;
  add_separator_gadget(rows, L, 1);
  add_variable_rows(rows, L, k);
  if (!literal) add_nesting_rows(rows, L, k);

  for (std::uint32_t j = 1; j <= L.m; ++j) {
    const auto& clause = cnf3.clauses[j - 1];
    for (std::uint32_t s = 0; s < 3; ++s) {
      RowBuilder row(L.n, L.d);
      add_literal_variable_part(row, clause[s], L.n);
      if (literal) {
        // 2n+1, 2n+3, ..., 2n+2k-5, 2n+2k-3, 2n+2k-2, 2n+d
        row.separator(1)
            .separator_every_other(3, 2 * std::int64_t{k} - 5)
            .separator(2 * std::int64_t{k} - 3)
            .separator(2 * std::int64_t{k} - 2)
            .separator(L.d);
      } else {
        // k-3 unit gaps before the clause block leaves room for one more gap
        // when the literal is false and two when it is true.
        row.separator_with_gaps(std::int64_t{k} - 3);
        add_preceding_blocks(row, L, j);
      }
      row.column(L.clause(j, 1)).column(L.clause(j, s + 2));
      rows.push_back(row.finish());
    }
  }

  ReductionOutput out{BinaryMatrix(L.total_columns(), std::move(rows)), make_legend(L),
                      ReductionParams{}, cnf3};
  out.params = ReductionParams{Construction::kUnitGap,
                               variant,
                               k,
                               1,
                               L.d,
                               L.n,
                               L.m,
                               std::size_t{2} * L.n + L.d + 4 * L.m,
                               std::size_t{L.n} + 4 * L.m + 2 * L.d - 3};
  return out;
}

ReductionOutput reduce_wide_gap(const Cnf& cnf3, std::uint32_t k, std::uint32_t delta,
                                Variant variant) {
  if (k < 2 || delta < 2)
    throw std::invalid_argument("the (k,delta) construction needs k >= 2 and delta >= 2");
  validate_formula(cnf3);

  Layout L;
  L.n = cnf3.num_vars;
  L.m = static_cast<std::uint32_t>(cnf3.clauses.size());
  L.d = separator_width(Construction::kWideGap, k, delta, variant);
  L.width = 5;

  std::vector<RowSupport> rows;
  add_separator_gadget(rows, L, delta);
  add_variable_rows(rows, L, k);
  add_nesting_rows(rows, L, k);

  // After k-2 separator gaps each clause row has one gap left. A false
  // literal spends it inside b_alpha, so its prefix {B^1}, {B^1,B^2} or
  // {B^1,B^2,B^3} must start B_j. All three prefixes at once put B^2 and B^4
  // two apart, which the extra {B^2, B^4} row cannot absorb.
  for (std::uint32_t j = 1; j <= L.m; ++j) {
    const auto& clause = cnf3.clauses[j - 1];
    for (std::uint32_t s = 0; s < 3; ++s) {
      RowBuilder row(L.n, L.d);
      add_literal_variable_part(row, clause[s], L.n);
      row.separator_with_gaps(std::int64_t{k} - 2);
      add_preceding_blocks(row, L, j);
      for (std::uint32_t t = 1; t <= s + 1; ++t) row.column(L.clause(j, t));
      rows.push_back(row.finish());
    }
    RowBuilder guard(L.n, L.d);
    guard.separator_with_gaps(std::int64_t{k} - 2);
    add_preceding_blocks(guard, L, j);
    guard.column(L.clause(j, 2)).column(L.clause(j, 4));
    rows.push_back(guard.finish());
  }

  ReductionOutput out{BinaryMatrix(L.total_columns(), std::move(rows)), make_legend(L),
                      ReductionParams{}, cnf3};
  out.params = ReductionParams{Construction::kWideGap,
                               variant,
                               k,
                               delta,
                               L.d,
                               L.n,
                               L.m,
                               std::size_t{2} * L.n + L.d + 5 * L.m,
                               std::size_t{L.n} + 6 * L.m + 2 * L.d - 3};
  return out;
}

ReductionOutput reduce(const Cnf& cnf3, Construction c, std::uint32_t k, std::uint32_t delta,
                       Variant variant) {
  return c == Construction::kWideGap ? reduce_wide_gap(cnf3, k, delta, variant)
                                     : reduce_unit_gap(cnf3, k, variant);
}

std::string legend_json(const ReductionOutput& output) {
  const auto& p = output.params;
  nlohmann::json doc;
  doc["construction"] = to_string(p.construction);
  doc["theorem"] = p.construction == Construction::kWideGap ? 2 : 3;
  doc["variant"] = to_string(p.variant);
  doc["k"] = p.k;
  doc["delta"] = p.delta;
  doc["d"] = p.d;
  doc["variables"] = p.n;
  doc["clauses"] = p.m;
  doc["columns"] = output.matrix.num_columns();
  doc["rows"] = output.matrix.num_rows();
  doc["nominal_columns"] = p.nominal_columns;
  doc["nominal_rows"] = p.nominal_rows;
  auto& legend = doc["legend"] = nlohmann::json::array();
  for (std::size_t c = 0; c < output.legend.size(); ++c) {
    const auto& role = output.legend[c];
    nlohmann::json entry{{"column", c + 1}};
    switch (role.kind) {
      case ColumnRole::Kind::kVariable:
        entry["role"] = "variable";
        entry["variable"] = role.index;
        entry["slot"] = role.slot;
        break;
      case ColumnRole::Kind::kSeparator:
        entry["role"] = "separator";
        entry["position"] = role.index;
        break;
      case ColumnRole::Kind::kClause:
        entry["role"] = "clause";
        entry["clause"] = role.index;
        entry["slot"] = role.slot;
        break;
    }
    legend.push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

}  // namespace gc1p
