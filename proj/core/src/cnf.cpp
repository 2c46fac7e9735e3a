#include "gc1p/cnf.hpp"

#include <charconv>
#include <sstream>

#include "gc1p/bitmatrix.hpp"

namespace gc1p {
namespace {

std::int64_t parse_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  return value;
}

}  // namespace

Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  bool have_header = false;
  std::int64_t declared_clauses = 0;
  Clause current;
  std::size_t line_no = 0;
  std::size_t last_line = 1;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::istringstream tokens{std::string(line)};
    std::string token;
    if (!(tokens >> token)) continue;
    last_line = line_no;
    if (token == "c") continue;
    if (token == "%") break;
    if (token == "p") {
      std::string kind, vars, clauses, extra;
      if (have_header) throw ParseError(line_no, "duplicate 'p' header");
      if (!(tokens >> kind >> vars >> clauses) || kind != "cnf" || (tokens >> extra))
        throw ParseError(line_no, "header must be 'p cnf <vars> <clauses>'");
      const auto v = parse_int(vars, line_no);
      declared_clauses = parse_int(clauses, line_no);
      if (v < 0 || declared_clauses < 0)
        throw ParseError(line_no, "header counts must be nonnegative");
      cnf.num_vars = static_cast<std::uint32_t>(v);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError(line_no, "clause before 'p cnf' header");
    do {
      const auto lit = parse_int(token, line_no);
      if (lit == 0) {
        if (current.empty()) throw ParseError(line_no, "zero-length clause");
        cnf.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      const auto var = lit < 0 ? -lit : lit;
      if (var > cnf.num_vars)
        throw ParseError(line_no, "variable " + std::to_string(var) + " out of range (" +
                                      std::to_string(cnf.num_vars) + " declared)");
      current.push_back(Literal{static_cast<std::uint32_t>(var), lit > 0});
    } while (tokens >> token);
  }
  if (!have_header) throw ParseError(1, "missing 'p cnf' header");
  if (!current.empty()) throw ParseError(last_line, "last clause is not terminated by 0");
  if (static_cast<std::int64_t>(cnf.clauses.size()) != declared_clauses)
    throw ParseError(last_line, "header declares " + std::to_string(declared_clauses) +
                                    " clauses, found " + std::to_string(cnf.clauses.size()));
  return cnf;
}

std::string serialize_dimacs(const Cnf& cnf) {
  std::ostringstream out;
  out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (const auto& lit : clause) out << (lit.positive ? "" : "-") << lit.variable << ' ';
    out << "0\n";
  }
  return out.str();
}

Cnf to_exact3(const Cnf& cnf) {
  Cnf out;
  out.num_vars = cnf.num_vars;
  for (const auto& clause : cnf.clauses) {
    if (clause.empty()) throw std::invalid_argument("empty clause");
    if (clause.size() <= 3) {
      Clause padded = clause;
      while (padded.size() < 3) padded.insert(padded.begin(), clause.front());
      out.clauses.push_back(std::move(padded));
      continue;
    }
    // (l1 l2 y1) (-y1 l3 y2) ... (-y_t l_{s-1} l_s)
    Literal link{++out.num_vars, true};
    out.clauses.push_back({clause[0], clause[1], link});
    for (std::size_t i = 2; i + 2 < clause.size(); ++i) {
      Literal next{++out.num_vars, true};
      out.clauses.push_back({link.negated(), clause[i], next});
      link = next;
    }
    out.clauses.push_back({link.negated(), clause[clause.size() - 2], clause.back()});
  }
  return out;
}

bool is_exact3(const Cnf& cnf) {
  for (const auto& clause : cnf.clauses)
    if (clause.size() != 3) return false;
  return true;
}

bool satisfies(const Cnf& cnf, const Assignment& assignment) {
  if (assignment.size() < cnf.num_vars)
    throw std::invalid_argument("assignment covers " + std::to_string(assignment.size()) +
                                " of " + std::to_string(cnf.num_vars) + " variables");
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (const auto& lit : clause) sat = sat || assignment[lit.variable - 1] == lit.positive;
    if (!sat) return false;
  }
  return true;
}

std::optional<Assignment> sat_brute_force(const Cnf& cnf) {
  if (cnf.num_vars > kSatBruteForceMaxVars)
    throw std::out_of_range("sat_brute_force supports at most 20 variables, got " +
                            std::to_string(cnf.num_vars));
  Assignment assignment(cnf.num_vars);
  const std::uint64_t total = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (std::uint32_t v = 0; v < cnf.num_vars; ++v) assignment[v] = (bits >> v) & 1U;
    if (satisfies(cnf, assignment)) return assignment;
  }
  return std::nullopt;
}

std::string to_string(const Literal& literal) {
  return (literal.positive ? "x" : "~x") + std::to_string(literal.variable);
}

std::string to_string(const Cnf& cnf) {
  if (cnf.clauses.empty()) return "(true)";
  std::string out;
  for (std::size_t j = 0; j < cnf.clauses.size(); ++j) {
    if (j) out += " & ";
    out += '(';
    for (std::size_t i = 0; i < cnf.clauses[j].size(); ++i) {
      if (i) out += " | ";
      out += to_string(cnf.clauses[j][i]);
    }
    out += ')';
  }
  return out;
}

}  // namespace gc1p
