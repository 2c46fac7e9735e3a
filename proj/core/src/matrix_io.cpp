#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

#include "gc1p/bitmatrix.hpp"

namespace gc1p {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_unsigned(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError(line, "expected a nonnegative integer, got '" + std::string(token) + "'");
  return value;
}

bool is_blank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

}  // namespace

BinaryMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header '<num_rows> <num_cols>'");

  const auto header = split_tokens(lines[0]);
  if (header.size() != 2) throw ParseError(1, "header must be '<num_rows> <num_cols>'");
  const std::uint64_t num_rows = parse_unsigned(header[0], 1);
  const std::uint64_t num_cols = parse_unsigned(header[1], 1);
  if (num_cols == 0) throw ParseError(1, "matrix must have at least one column");

  if (lines.size() - 1 < num_rows)
    throw ParseError(lines.size() + 1, "expected " + std::to_string(num_rows) + " rows, found " +
                                           std::to_string(lines.size() - 1));
  for (std::size_t i = num_rows + 1; i < lines.size(); ++i)
    if (!is_blank(lines[i])) throw ParseError(i + 1, "unexpected content after last row");

  std::vector<RowSupport> rows;
  rows.reserve(num_rows);
  std::vector<bool> seen(num_cols + 1);
  for (std::size_t r = 0; r < num_rows; ++r) {
    const std::size_t line_no = r + 2;
    const std::string_view line = lines[r + 1];
    RowSupport row;
    if (format == MatrixFormat::kSparse) {
      for (auto token : split_tokens(line)) {
        const std::uint64_t c = parse_unsigned(token, line_no);
        if (c < 1 || c > num_cols)
          throw ParseError(line_no, "index " + std::to_string(c) + " exceeds " +
                                        std::to_string(num_cols) + " columns");
        if (seen[c]) throw ParseError(line_no, "duplicate index " + std::to_string(c));
        seen[c] = true;
        row.push_back(static_cast<Column>(c));
      }
      for (Column c : row) seen[c] = false;
    } else {
      if (line.size() != num_cols)
        throw ParseError(line_no, "expected " + std::to_string(num_cols) + " characters, found " +
                                      std::to_string(line.size()));
      for (std::size_t c = 0; c < line.size(); ++c) {
        if (line[c] == '1')
          row.push_back(static_cast<Column>(c + 1));
        else if (line[c] != '0')
          throw ParseError(line_no, std::string("invalid character '") + line[c] + "'");
      }
    }
    rows.push_back(std::move(row));
  }
  return BinaryMatrix(num_cols, std::move(rows));
}

BinaryMatrix parse_matrix(std::istream& in, MatrixFormat format) {
  std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_matrix(text, format);
}

std::string serialize_matrix(const BinaryMatrix& matrix, MatrixFormat format) {
  std::ostringstream out;
  out << matrix.num_rows() << ' ' << matrix.num_columns() << '\n';
  for (const auto& row : matrix.rows()) {
    if (format == MatrixFormat::kSparse) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    } else {
      std::string line(matrix.num_columns(), '0');
      for (Column c : row) line[c - 1] = '1';
      out << line;
    }
    out << '\n';
  }
  return out.str();
}

ColumnOrdering parse_ordering(std::string_view text) {
  const auto lines = split_lines(text);
  std::vector<Column> forward;
  std::size_t content_line = 0;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (is_blank(lines[i])) continue;
    if (content_line != 0) throw ParseError(i + 1, "ordering must be a single line");
    content_line = i + 1;
    for (auto token : split_tokens(lines[i])) {
      const std::uint64_t c = parse_unsigned(token, i + 1);
      forward.push_back(static_cast<Column>(c));
    }
  }
  if (forward.empty()) throw ParseError(1, "empty ordering");
  try {
    return ColumnOrdering::from_forward(std::move(forward));
  } catch (const std::invalid_argument& e) {
    throw ParseError(content_line, e.what());
  }
}

std::string serialize_ordering(const ColumnOrdering& ordering) {
  std::string out;
  for (std::size_t p = 1; p <= ordering.size(); ++p) {
    if (p > 1) out += ' ';
    out += std::to_string(ordering.column_at(p));
  }
  out += '\n';
  return out;
}

}  // namespace gc1p
