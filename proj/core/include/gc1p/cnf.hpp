#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gc1p {

struct Literal {
  std::uint32_t variable = 1;  // 1-based
  bool positive = true;

  Literal negated() const { return Literal{variable, !positive}; }
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::vector<Literal>;

struct Cnf {
  std::uint32_t num_vars = 0;
  std::vector<Clause> clauses;

  friend bool operator==(const Cnf&, const Cnf&) = default;
};

/// Truth value per variable; index 0 is variable 1.
using Assignment = std::vector<bool>;

/// DIMACS CNF: "c" comment lines, one "p cnf <vars> <clauses>" header,
/// clauses as 0-terminated literal lists that may span lines. Throws
/// ParseError (from bitmatrix.hpp) on a malformed header, an empty clause, an
/// out-of-range variable, or a clause count that disagrees with the header.
Cnf parse_dimacs(std::string_view text);
std::string serialize_dimacs(const Cnf& cnf);

/// Exactly three literals per clause: short clauses repeat their first
/// literal, long ones are chained through fresh variables appended after
/// num_vars. The result is equisatisfiable with the input.
Cnf to_exact3(const Cnf& cnf);

bool is_exact3(const Cnf& cnf);

bool satisfies(const Cnf& cnf, const Assignment& assignment);

inline constexpr std::uint32_t kSatBruteForceMaxVars = 20;

/// Enumerates assignments in binary counting order (variable 1 is the low
/// bit, all-false first). Throws std::out_of_range above 20 variables.
std::optional<Assignment> sat_brute_force(const Cnf& cnf);

std::string to_string(const Literal& literal);
std::string to_string(const Cnf& cnf);

}  // namespace gc1p
