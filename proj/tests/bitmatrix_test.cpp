#include <doctest.h>

#include <numeric>
#include <random>

#include "gc1p/bitmatrix.hpp"
#include "support.hpp"

using namespace gc1p;

namespace {

ColumnOrdering identity(std::size_t n) { return ColumnOrdering::identity(n); }

std::string error_of(std::string_view text, MatrixFormat format) {
  try {
    parse_matrix(text, format);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse sparse and dense encodings of the same matrix") {
  const auto sparse = parse_matrix("2 3\n1 2\n3\n", MatrixFormat::kSparse);
  const auto dense = parse_matrix("2 3\n110\n001\n", MatrixFormat::kDense);
  CHECK(sparse.num_columns() == 3);
  CHECK(sparse.rows() == std::vector<RowSupport>{{1, 2}, {3}});
  CHECK(sparse == dense);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_of("1 2\n3\n", MatrixFormat::kSparse) == "line 2: index 3 exceeds 2 columns");
  CHECK(error_of("1 3\n2 2\n", MatrixFormat::kSparse) == "line 2: duplicate index 2");
  CHECK(error_of("2 3\n110\n0a1\n", MatrixFormat::kDense) == "line 3: invalid character 'a'");
  CHECK(error_of("2 3\n110\n01\n", MatrixFormat::kDense).starts_with("line 3:"));
  CHECK(error_of("x 3\n", MatrixFormat::kSparse).starts_with("line 1:"));
  CHECK(error_of("3\n", MatrixFormat::kSparse).starts_with("line 1:"));
  CHECK(error_of("", MatrixFormat::kSparse).starts_with("line 1:"));
  CHECK(error_of("2 0\n\n\n", MatrixFormat::kSparse).starts_with("line 1:"));
  CHECK(error_of("3 2\n1\n2\n", MatrixFormat::kSparse).starts_with("line 4:"));
  CHECK(error_of("1 2\n1\n2\n", MatrixFormat::kSparse) == "line 3: unexpected content after last row");
  try {
    parse_matrix("1 2\n3\n", MatrixFormat::kSparse);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("parser tolerates CRLF and trailing blank lines") {
  const auto m = parse_matrix("2 3\r\n1 2\r\n3\r\n\r\n", MatrixFormat::kSparse);
  CHECK(m.rows() == std::vector<RowSupport>{{1, 2}, {3}});
}

TEST_CASE("serialize matrices") {
  const BinaryMatrix m(3, {{1, 2}, {3}});
  CHECK(serialize_matrix(m, MatrixFormat::kSparse) == "2 3\n1 2\n3\n");
  CHECK(serialize_matrix(m, MatrixFormat::kDense) == "2 3\n110\n001\n");
  const BinaryMatrix empty_row(2, {{}});
  CHECK(serialize_matrix(empty_row, MatrixFormat::kSparse) == "1 2\n\n");
}

TEST_CASE("serialization round-trips on random matrices") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto m = test::random_matrix(rng, 9, 8, 0.35);
    for (auto f : {MatrixFormat::kSparse, MatrixFormat::kDense})
      CHECK(parse_matrix(serialize_matrix(m, f), f) == m);
  }
}

TEST_CASE("matrix construction keeps duplicate and empty rows, rejects bad indices") {
  const BinaryMatrix m(3, {{2, 1}, {}, {1, 2}});
  CHECK(m.num_rows() == 3);
  CHECK(m.row(0) == RowSupport{1, 2});
  CHECK(m.row(1).empty());
  CHECK_THROWS_AS(BinaryMatrix(3, {{4}}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(BinaryMatrix(0, {}), std::invalid_argument);
}

TEST_CASE("orderings") {
  const auto o = parse_ordering("3 1 2\n");
  CHECK(o.column_at(1) == 3);
  CHECK(o.position_of(3) == 1);
  CHECK(o.position_of(2) == 3);
  CHECK(serialize_ordering(o) == "3 1 2\n");
  CHECK(o.reversed() == ColumnOrdering::from_forward({2, 1, 3}));
  CHECK_THROWS_AS(parse_ordering("1 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_ordering("1 3\n"), ParseError);
  CHECK_THROWS_AS(parse_ordering("1 2\n3\n"), ParseError);
  CHECK_THROWS_AS(parse_ordering("\n"), ParseError);
}

TEST_CASE("bounds and specs") {
  CHECK(Bound::parse("inf").is_unbounded());
  CHECK(Bound::parse("3").value() == 3);
  CHECK(Bound::parse("0").value() == 0);
  CHECK_THROWS_AS(Bound::parse("-1"), std::invalid_argument);
  CHECK_THROWS_AS(Bound::parse("two"), std::invalid_argument);
  CHECK(Bound(5) < Bound::unbounded());
  CHECK(Bound(2) < Bound(3));
  CHECK_THROWS_AS(GapSpec::make(0, 1), std::invalid_argument);
  CHECK(GapSpec::make(Bound::unbounded(), 2).to_string() == "(inf,2)");
}

TEST_CASE("profile_row examples") {
  const RowSupport row{1, 5, 8};
  const auto forward = profile_row(row, identity(8));
  CHECK(forward.block_count == 3);
  CHECK(forward.gaps == std::vector<std::size_t>{3, 2});
  const auto backward = profile_row(row, identity(8).reversed());
  CHECK(backward.block_count == 3);
  CHECK(backward.gaps == std::vector<std::size_t>{2, 3});

  RowSupport all(8);
  std::iota(all.begin(), all.end(), 1U);
  const auto full = profile_row(all, ColumnOrdering::from_forward({4, 2, 8, 1, 3, 7, 6, 5}));
  CHECK(full.block_count == 1);
  CHECK(full.gaps.empty());

  const auto none = profile_row(RowSupport{}, identity(4));
  CHECK(none.block_count == 0);
  CHECK(none.max_gap() == 0);
  CHECK_THROWS_AS(profile_row(RowSupport{9}, identity(8)), std::invalid_argument);
}

TEST_CASE("check_ordering examples") {
  const BinaryMatrix m(8, {{1, 5, 8}});
  CHECK(check_ordering(m, identity(8), GapSpec::make(3, 3)).ok);
  const auto report = check_ordering(m, identity(8), GapSpec::make(2, 3));
  REQUIRE_FALSE(report.ok);
  CHECK(report.first_violation->row == 1);
  CHECK(report.first_violation->kind == Violation::kTooManyBlocks);
  const auto gap = check_ordering(m, identity(8), GapSpec::make(3, 2));
  REQUIRE_FALSE(gap.ok);
  CHECK(gap.first_violation->kind == Violation::kGapTooLarge);

  CHECK(check_ordering(BinaryMatrix(3, {{1, 2}, {2, 3}}), identity(3), GapSpec::make(1, 0)).ok);
  CHECK_THROWS_AS(check_ordering(m, identity(7), GapSpec::make(1, 0)), std::invalid_argument);
}

TEST_CASE("check_ordering names the lowest violating row") {
  const BinaryMatrix m(4, {{1, 2}, {1, 3}, {1, 4}});
  const auto report = check_ordering(m, identity(4), GapSpec::make(1, 0));
  REQUIRE_FALSE(report.ok);
  CHECK(report.first_violation->row == 2);
  CHECK(report.first_violation->profile.gaps == std::vector<std::size_t>{1});
}

TEST_CASE("apply_ordering") {
  const BinaryMatrix m(3, {{1, 2}, {2, 3}});
  CHECK(apply_ordering(m, identity(3)) == m);
  CHECK(apply_ordering(BinaryMatrix(3, {{1, 3}}), ColumnOrdering::from_forward({3, 2, 1})) ==
        BinaryMatrix(3, {{1, 3}}));
  // Columns 2, 3, 1 at positions 1, 2, 3: column 1 lands on 3, column 2 on 1.
  const auto o = ColumnOrdering::from_forward({2, 3, 1});
  CHECK(apply_ordering(BinaryMatrix(3, {{1, 2}}), o) == BinaryMatrix(3, {{1, 3}}));
  CHECK_THROWS_AS(apply_ordering(m, identity(4)), std::invalid_argument);
}

TEST_CASE("property: profiles agree with the independent scanner") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto m = test::random_matrix(rng, 10, 6, 0.4);
    const auto o = test::random_ordering(rng, m.num_columns());
    std::vector<std::size_t> pos(m.num_columns());
    for (Column c = 1; c <= m.num_columns(); ++c) pos[c - 1] = o.position_of(c);
    for (const auto& row : m.rows()) {
      const auto p = profile_row(row, o);
      const auto s = test::shape_of(row, pos);
      CHECK(p.block_count == s.blocks);
      CHECK(p.max_gap() == s.widest_gap);
      CHECK(p.gaps.size() == (p.block_count ? p.block_count - 1 : 0));
    }
  }
}

TEST_CASE("property: apply_ordering preserves profiles") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto m = test::random_matrix(rng, 8, 6, 0.4);
    const auto o = test::random_ordering(rng, m.num_columns());
    const auto permuted = apply_ordering(m, o);
    const auto id = identity(m.num_columns());
    for (std::size_t r = 0; r < m.num_rows(); ++r)
      CHECK(profile_row(permuted.row(r), id) == profile_row(m.row(r), o));
  }
}

TEST_CASE("property: gap accounting covers every position") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 300; ++i) {
    const auto m = test::random_matrix(rng, 12, 5, 0.4);
    const auto o = test::random_ordering(rng, m.num_columns());
    for (const auto& row : m.rows()) {
      if (row.empty()) continue;
      const auto p = profile_row(row, o);
      std::size_t first = m.num_columns(), last = 1;
      for (Column c : row) {
        first = std::min(first, o.position_of(c));
        last = std::max(last, o.position_of(c));
      }
      const std::size_t boundary = (first - 1) + (m.num_columns() - last);
      const std::size_t gap_sum = std::accumulate(p.gaps.begin(), p.gaps.end(), std::size_t{0});
      CHECK(row.size() + gap_sum + boundary == m.num_columns());
    }
  }
}

TEST_CASE("property: reversal invariance, monotonicity, delta=0 collapse, sparse rows") {
  std::mt19937_64 rng(14);
  const std::vector<Bound> ks{1, 2, 3, Bound::unbounded()};
  const std::vector<Bound> deltas{0, 1, 2, Bound::unbounded()};
  for (int i = 0; i < 250; ++i) {
    const auto m = test::random_matrix(rng, 8, 6, 0.4);
    const auto o = test::random_ordering(rng, m.num_columns());
    for (const auto& k : ks)
      for (const auto& d : deltas) {
        const auto spec = GapSpec::make(k, d);
        const bool ok = check_ordering(m, o, spec).ok;
        CHECK(ok == check_ordering(m, o.reversed(), spec).ok);
        if (ok)
          for (const auto& k2 : ks)
            for (const auto& d2 : deltas)
              if (k2 >= k && d2 >= d) CHECK(check_ordering(m, o, GapSpec::make(k2, d2)).ok);
      }
    const bool c1p = check_ordering(m, o, GapSpec::make(1, 0)).ok;
    for (const auto& k : ks) CHECK(check_ordering(m, o, GapSpec::make(k, 0)).ok == c1p);

    std::vector<RowSupport> sparse;
    for (const auto& row : m.rows())
      if (row.size() <= 1) sparse.push_back(row);
    CHECK(check_ordering(BinaryMatrix(m.num_columns(), sparse), o, GapSpec::make(1, 0)).ok);
  }
}
