#include <doctest.h>

#include <json.hpp>
#include <set>

#include "gc1p/gadget.hpp"
#include "gc1p/reduction.hpp"
#include "support.hpp"

using namespace gc1p;

namespace {

Literal pos(std::uint32_t v) { return {v, true}; }
Literal neg(std::uint32_t v) { return {v, false}; }

const Cnf kSingle{1, {{pos(1), pos(1), pos(1)}}};
const Cnf kContradiction{1, {{pos(1), pos(1), pos(1)}, {neg(1), neg(1), neg(1)}}};

// Column numbering for the (k,1) construction in the repaired variant.
struct UnitGapColumns {
  std::uint32_t n, d;
  Column separator(std::uint32_t offset) const { return 2 * n + offset; }
  Column clause(std::uint32_t j, std::uint32_t s) const { return 2 * n + d + 4 * (j - 1) + s; }
};

std::set<RowSupport> row_set(const BinaryMatrix& m) { return {m.rows().begin(), m.rows().end()}; }

}  // namespace

TEST_CASE("unit-gap sizes for the one- and two-clause formulas") {
  const auto one = reduce_unit_gap(kSingle, 3);
  CHECK(one.params.d == 6);
  CHECK(one.matrix.num_columns() == 12);
  CHECK(one.matrix.num_rows() == 14);

  Cnf two{2, {{pos(1), neg(2), pos(2)}, {neg(1), neg(1), pos(2)}}};
  const auto out = reduce_unit_gap(two, 3);
  CHECK(out.matrix.num_columns() == 18);
  CHECK(out.matrix.num_rows() == 19);

  CHECK_THROWS_AS(reduce_unit_gap(kSingle, 2), std::invalid_argument);
  CHECK_THROWS_AS(reduce_unit_gap(Cnf{1, {{pos(1)}}}, 3), std::invalid_argument);
}

TEST_CASE("unit-gap rows for (x1 | x1 | x1), k = 3, hand-derived") {
  // d = 6: b_1 = {1,2}, separator 3..8, B_1 = 9..12.
  const std::set<RowSupport> expected{
      // gadget, pairs at distance <= 2 along 3..8
      {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {3, 5}, {4, 6}, {5, 7}, {6, 8},
      // variable row: b_1 and separator offsets 1, 3, 5
      {1, 2, 3, 5, 7},
      // nesting row: offsets 2, 4, 6 and all of B_1
      {4, 6, 8, 9, 10, 11, 12},
      // literal rows: column 2, the whole separator (no gaps at k = 3),
      // B_1^1 and B_1^{2,3,4}
      {2, 3, 4, 5, 6, 7, 8, 9, 10},
      {2, 3, 4, 5, 6, 7, 8, 9, 11},
      {2, 3, 4, 5, 6, 7, 8, 9, 12}};
  const auto out = reduce_unit_gap(kSingle, 3);
  CHECK(row_set(out.matrix) == expected);
}

TEST_CASE("negative literals use the other column of the variable block") {
  const auto out = reduce_unit_gap(Cnf{2, {{neg(1), pos(2), neg(2)}}}, 3);
  const UnitGapColumns cols{2, 6};
  const auto rows = out.matrix.rows();
  // The last three rows are the literal rows, in literal order.
  const auto& first = rows[rows.size() - 3];
  const auto& second = rows[rows.size() - 2];
  const auto& third = rows[rows.size() - 1];
  CHECK(std::count(first.begin(), first.end(), 1U) == 1);
  CHECK(std::count(first.begin(), first.end(), 2U) == 0);
  CHECK(std::count(first.begin(), first.end(), 3U) == 1);
  CHECK(std::count(second.begin(), second.end(), 4U) == 1);
  CHECK(std::count(second.begin(), second.end(), 3U) == 0);
  CHECK(std::count(third.begin(), third.end(), 3U) == 1);
  CHECK(std::count(third.begin(), third.end(), 4U) == 0);
  CHECK(third.back() == cols.clause(1, 4));
}

TEST_CASE("wide-gap sizes") {
  const auto repaired = reduce_wide_gap(kSingle, 2, 2);
  CHECK(repaired.params.d == 7);
  CHECK(repaired.matrix.num_columns() == 14);
  CHECK(repaired.matrix.num_rows() == gadget_row_count(7, 2) + 1 + 1 + 4);

  const auto literal = reduce_wide_gap(kSingle, 2, 2, Variant::kLiteral);
  CHECK(literal.params.d == 5);
  CHECK(literal.matrix.num_columns() == 12);
  CHECK(literal.params.nominal_rows == 14);

  CHECK(reduce_wide_gap(kSingle, 4, 2).params.d == 8);
  CHECK(reduce_wide_gap(kSingle, 2, 3).params.d == 9);
  CHECK_THROWS_AS(reduce_wide_gap(kSingle, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(reduce_wide_gap(kSingle, 1, 2), std::invalid_argument);
}

TEST_CASE("property: size formulas of the unit-gap construction") {
  for (std::uint32_t k = 3; k <= 4; ++k)
    for (std::uint32_t n = 1; n <= 4; ++n)
      for (std::uint32_t m = 0; m <= 4; ++m) {
        Cnf cnf{n, {}};
        for (std::uint32_t j = 0; j < m; ++j)
          cnf.clauses.push_back({pos(j % n + 1), neg((j + 1) % n + 1), pos((j + 3) % n + 1)});
        const auto out = reduce_unit_gap(cnf, k);
        const std::uint32_t d = std::max(2 * k, 5U);
        CHECK(out.matrix.num_columns() == 2 * n + d + 4 * m);
        CHECK(out.matrix.num_rows() == n + 4 * m + 2 * d - 3);
        CHECK(out.params.nominal_rows == out.matrix.num_rows());
      }
}

TEST_CASE("property: legend partitions the columns and the separator carries the gadget") {
  for (auto c : {Construction::kUnitGap, Construction::kWideGap})
    for (auto variant : {Variant::kRepaired, Variant::kLiteral})
      for (std::uint32_t m = 0; m <= 3; ++m) {
        Cnf cnf{3, {}};
        for (std::uint32_t j = 0; j < m; ++j)
          cnf.clauses.push_back({pos(1), neg(2), pos(3 - j % 2)});
        const std::uint32_t k = c == Construction::kUnitGap ? 3 : 2;
        const std::uint32_t delta = c == Construction::kUnitGap ? 1 : 2;
        const auto out = reduce(cnf, c, k, delta, variant);
        const auto& p = out.params;
        REQUIRE(out.legend.size() == out.matrix.num_columns());

        std::size_t variables = 0, separators = 0, clauses = 0;
        Column previous_kind = 0;
        for (std::size_t i = 0; i < out.legend.size(); ++i) {
          const auto kind = static_cast<Column>(out.legend[i].kind);
          CHECK(kind >= previous_kind);  // variables, then separator, then clauses
          previous_kind = kind;
          switch (out.legend[i].kind) {
            case ColumnRole::Kind::kVariable: ++variables; break;
            case ColumnRole::Kind::kSeparator:
              ++separators;
              CHECK(out.legend[i].index == i + 1 - 2 * p.n);
              break;
            case ColumnRole::Kind::kClause: ++clauses; break;
          }
        }
        CHECK(variables == 2 * p.n);
        CHECK(separators == p.d);
        CHECK(clauses == (c == Construction::kUnitGap ? 4 : 5) * p.m);

        std::vector<Column> separator;
        for (Column s = 2 * p.n + 1; s <= 2 * p.n + p.d; ++s) separator.push_back(s);
        const auto rows = row_set(out.matrix);
        for (const auto& row : build_gadget({separator, delta, true}).rows)
          CHECK(rows.count(row) == 1);
      }
}

TEST_CASE("legend JSON") {
  const auto out = reduce_unit_gap(kSingle, 3);
  const auto doc = nlohmann::json::parse(legend_json(out));
  CHECK(doc["theorem"] == 3);
  CHECK(doc["variant"] == "repaired");
  CHECK(doc["columns"] == 12);
  REQUIRE(doc["legend"].size() == 12);
  CHECK(doc["legend"][0]["role"] == "variable");
  CHECK(doc["legend"][2]["role"] == "separator");
  CHECK(doc["legend"][2]["position"] == 1);
  CHECK(doc["legend"][11]["role"] == "clause");
  CHECK(doc["legend"][11]["slot"] == 4);
}

TEST_CASE("witness_from_assignment") {
  const auto out = reduce_unit_gap(kSingle, 3);
  const auto witness = witness_from_assignment(out, {true});
  CHECK(check_ordering(out.matrix, witness, out.spec()).ok);
  CHECK(check_ordering(out.matrix, witness.reversed(), out.spec()).ok);
  CHECK(witness.column_at(1) == 1);
  CHECK(witness.column_at(2) == 2);
  CHECK(assignment_from_ordering(out, witness) == Assignment{true});
  CHECK(assignment_from_ordering(out, witness.reversed()) == Assignment{true});
  CHECK_THROWS_AS(witness_from_assignment(out, {false}), std::invalid_argument);

  const auto wide = reduce_wide_gap(kSingle, 2, 2);
  CHECK(check_ordering(wide.matrix, witness_from_assignment(wide, {true}), wide.spec()).ok);
}

TEST_CASE("the printed unit-gap construction is flagged as broken") {
  const auto out = reduce_unit_gap(kSingle, 3, Variant::kLiteral);
  CHECK_THROWS_AS(witness_from_assignment(out, {true}), ConstructionDiscrepancy);
  const auto report = verify_reduction(kSingle, Construction::kUnitGap, 3, 1, {}, Variant::kLiteral);
  CHECK(report.agree == false);
  CHECK(report.witness_valid == false);
}

TEST_CASE("verify_reduction examples") {
  const auto sat = verify_reduction(kSingle, Construction::kUnitGap, 3, 1);
  CHECK(sat.agree == true);
  CHECK(sat.formula_satisfiable == true);
  CHECK(sat.matrix_decision == SolveStatus::kSatisfied);
  CHECK(sat.witness_valid == true);
  CHECK(sat.columns == 12);

  const auto unsat = verify_reduction(kContradiction, Construction::kUnitGap, 3, 1);
  CHECK(unsat.agree == true);
  CHECK(unsat.formula_satisfiable == false);
  CHECK(unsat.matrix_decision == SolveStatus::kExhausted);
  CHECK(unsat.columns == 16);

  const auto wide = verify_reduction(kSingle, Construction::kWideGap, 2, 2);
  CHECK(wide.agree == true);
  CHECK(wide.columns == 14);

  SearchConfig tiny;
  tiny.node_limit = 10;
  const auto undecided = verify_reduction(kContradiction, Construction::kUnitGap, 3, 1, tiny);
  CHECK(undecided.matrix_decision == SolveStatus::kTimedOut);
  CHECK_FALSE(undecided.agree.has_value());
}

TEST_CASE("property: equivalence on the tiny corpus, unit-gap k in {3,4}") {
  const auto corpus = test::tiny_corpus();
  REQUIRE(corpus.size() == 130);
  for (std::uint32_t k = 3; k <= 4; ++k)
    for (const auto& cnf : corpus) {
      CAPTURE(to_string(cnf));
      const auto report = verify_reduction(cnf, Construction::kUnitGap, k, 1);
      CHECK(report.formula_satisfiable == test::satisfiable(cnf));
      CHECK(report.agree == true);
      if (*report.formula_satisfiable) CHECK(report.witness_valid == true);
    }
}

TEST_CASE("property: equivalence on the tiny corpus, wide-gap k = delta = 2") {
  for (const auto& cnf : test::tiny_corpus()) {
    CAPTURE(to_string(cnf));
    const auto report = verify_reduction(cnf, Construction::kWideGap, 2, 2);
    CHECK(report.agree == true);
    if (*report.formula_satisfiable) CHECK(report.witness_valid == true);
  }
}

TEST_CASE("property: forced-gap mechanism on solver witnesses") {
  // Every literal row whose literal is false under the decoded assignment
  // has B_j^1 and its partner among the first three columns of B_j.
  std::size_t false_literals = 0;
  for (const auto& cnf : test::tiny_corpus()) {
    const auto out = reduce_unit_gap(to_exact3(cnf), 3);
    const auto outcome = decide(out.matrix, out.spec());
    if (!outcome.witness) continue;
    const auto& p = out.params;
    const UnitGapColumns cols{p.n, p.d};
    auto ordering = *outcome.witness;
    if (ordering.position_of(cols.separator(1)) > ordering.position_of(cols.separator(2)))
      ordering = ordering.reversed();
    const auto assignment = assignment_from_ordering(out, ordering);
    REQUIRE(satisfies(out.formula, assignment));
    for (std::uint32_t j = 1; j <= p.m; ++j) {
      std::vector<std::size_t> block_positions;
      for (std::uint32_t s = 1; s <= 4; ++s)
        block_positions.push_back(ordering.position_of(cols.clause(j, s)));
      std::sort(block_positions.begin(), block_positions.end());
      const auto rank = [&](Column c) {
        return std::find(block_positions.begin(), block_positions.end(), ordering.position_of(c)) -
               block_positions.begin();
      };
      for (std::uint32_t s = 0; s < 3; ++s) {
        const auto& lit = out.formula.clauses[j - 1][s];
        if (assignment[lit.variable - 1] == lit.positive) continue;
        ++false_literals;
        CHECK(rank(cols.clause(j, 1)) < 3);
        CHECK(rank(cols.clause(j, s + 2)) < 3);
      }
    }
  }
  CHECK(false_literals > 0);
}
