#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include "gc1p/bitmatrix.hpp"
#include "gc1p/cnf.hpp"
#include "gc1p/gadget.hpp"
#include "gc1p/reduction.hpp"
#include "gc1p/solver.hpp"
#include "gc1p/verify.hpp"

namespace gc1p::cli {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), {}};
  std::ifstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw InputError("cannot write '" + path + "'");
}

// Parse errors from a named file get the file name prefixed.
template <class F>
auto parse_file(const std::string& path, F&& parse) {
  try {
    return parse();
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

GapSpec spec_from(const std::string& k, const std::string& delta) {
  try {
    return GapSpec::make(Bound::parse(k), Bound::parse(delta));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--k/--delta: ") + e.what());
  }
}

MatrixFormat format_from(const std::string& name) {
  return name == "dense" ? MatrixFormat::kDense : MatrixFormat::kSparse;
}

std::string trimmed_ordering(const ColumnOrdering& ordering) {
  auto text = serialize_ordering(ordering);
  if (!text.empty() && text.back() == '\n') text.pop_back();
  return text;
}

std::string gaps_text(const std::vector<std::size_t>& gaps) {
  std::string text = "[";
  for (std::size_t i = 0; i < gaps.size(); ++i) text += (i ? " " : "") + std::to_string(gaps[i]);
  return text + "]";
}

json stats_json(const SearchStats& s) {
  return {{"nodes_expanded", s.nodes_expanded},
          {"elapsed_seconds", s.elapsed.count()},
          {"pruned",
           {{"gap", s.pruned_gap},
            {"blocks", s.pruned_blocks},
            {"forced", s.pruned_forced},
            {"symmetry", s.pruned_symmetry}}}};
}

int exit_code(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSatisfied: return kOk;
    case SolveStatus::kExhausted: return kFailed;
    case SolveStatus::kTimedOut: return kUndecided;
  }
  return kUndecided;
}

// ------------------------------------------------------------------ check

struct CheckArgs {
  std::string matrix, order, k, delta, format = "sparse";
  bool json = false;
};

int run_check(const CheckArgs& a, std::istream& in, std::ostream& out) {
  const auto spec = spec_from(a.k, a.delta);
  const auto matrix_text = read_input(a.matrix, in);
  const auto matrix =
      parse_file(a.matrix, [&] { return parse_matrix(matrix_text, format_from(a.format)); });
  const auto order_text = read_input(a.order, in);
  const auto ordering = parse_file(a.order, [&] { return parse_ordering(order_text); });
  if (ordering.size() != matrix.num_columns())
    throw InputError("ordering has " + std::to_string(ordering.size()) + " columns, matrix has " +
                     std::to_string(matrix.num_columns()));

  const auto report = check_ordering(matrix, ordering, spec);
  if (a.json) {
    json doc{{"status", report.ok ? "ok" : "violation"}, {"spec", spec.to_string()}};
    if (report.first_violation) {
      const auto& v = *report.first_violation;
      doc["violation"] = {{"row", v.row},
                          {"kind", to_string(v.kind)},
                          {"block_count", v.profile.block_count},
                          {"gaps", v.profile.gaps}};
    }
    out << doc.dump(2) << '\n';
  } else if (report.ok) {
    out << "ok: every row satisfies " << spec.to_string() << '\n';
  } else {
    const auto& v = *report.first_violation;
    out << "violation: row " << v.row << " has " << v.profile.block_count << " blocks, gaps "
        << gaps_text(v.profile.gaps) << " (" << to_string(v.kind) << ")\n";
  }
  return report.ok ? kOk : kFailed;
}

// ------------------------------------------------------------------ solve

struct SolveArgs {
  std::string matrix, k, delta, format = "sparse", heuristic = "constrained", witness_path;
  std::optional<double> timeout;
  std::optional<std::uint64_t> nodes;
  unsigned threads = 1;
  bool no_symmetry = false;
  bool brute = false;
  bool json = false;
};

int run_solve(const SolveArgs& a, std::istream& in, std::ostream& out) {
  const auto spec = spec_from(a.k, a.delta);
  const auto text = read_input(a.matrix, in);
  const auto matrix =
      parse_file(a.matrix, [&] { return parse_matrix(text, format_from(a.format)); });

  std::string method;
  SolveOutcome outcome;
  std::optional<std::uint64_t> valid_count;
  if (a.brute) {
    method = "brute-force";
    if (matrix.num_columns() > kBruteForceMaxColumns)
      throw UsageError("--brute-force handles at most " + std::to_string(kBruteForceMaxColumns) +
                       " columns");
    const auto start = std::chrono::steady_clock::now();
    const auto report = brute_force(matrix, spec, {kBruteForceMaxColumns, 1});
    outcome.stats.elapsed = std::chrono::steady_clock::now() - start;
    valid_count = report.valid_count;
    outcome.status = report.valid_count ? SolveStatus::kSatisfied : SolveStatus::kExhausted;
    if (!report.witnesses.empty()) outcome.witness = report.witnesses.front();
  } else if (spec == GapSpec::make(1, 0)) {
    method = "classic";
    const auto start = std::chrono::steady_clock::now();
    outcome.witness = classic_c1p(matrix);
    outcome.stats.elapsed = std::chrono::steady_clock::now() - start;
    outcome.status = outcome.witness ? SolveStatus::kSatisfied : SolveStatus::kExhausted;
  } else {
    method = "search";
    SearchConfig config;
    if (a.timeout) config.timeout = std::chrono::duration<double>(*a.timeout);
    config.node_limit = a.nodes;
    config.symmetry_breaking = !a.no_symmetry;
    config.column_heuristic = a.heuristic == "input" ? ColumnHeuristic::kInputOrder
                                                     : ColumnHeuristic::kMostConstrained;
    config.thread_count = a.threads;
    outcome = decide(matrix, spec, config);
  }

  if (outcome.witness && !a.witness_path.empty())
    write_output(a.witness_path, serialize_ordering(*outcome.witness), out);

  if (a.json) {
    json doc{{"status", to_string(outcome.status)},
             {"spec", spec.to_string()},
             {"method", method},
             {"stats", stats_json(outcome.stats)}};
    if (outcome.witness) doc["witness"] = trimmed_ordering(*outcome.witness);
    if (valid_count) doc["valid_count"] = *valid_count;
    out << doc.dump(2) << '\n';
  } else {
    const auto& s = outcome.stats;
    out << "status: " << to_string(outcome.status) << '\n';
    if (outcome.witness) out << "witness: " << trimmed_ordering(*outcome.witness) << '\n';
    if (valid_count) out << "valid orderings: " << *valid_count << '\n';
    out << "method: " << method << '\n'
        << "nodes: " << s.nodes_expanded << '\n'
        << "elapsed: " << std::fixed << std::setprecision(6) << s.elapsed.count() << " s\n"
        << "pruned: gap=" << s.pruned_gap << " blocks=" << s.pruned_blocks
        << " forced=" << s.pruned_forced << " symmetry=" << s.pruned_symmetry << '\n';
  }
  return exit_code(outcome.status);
}

// ----------------------------------------------------------------- gadget

struct GadgetArgs {
  std::uint32_t n = 0, delta = 0, k = 2;
  std::optional<std::uint32_t> universe;
  std::vector<Column> columns;
  bool verify = false, force = false;
  std::string output;
};

int run_gadget(const GadgetArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<Column> target = a.columns;
  if (target.empty())
    for (Column c = 1; c <= a.n; ++c) target.push_back(c);
  if (target.size() != a.n)
    throw UsageError("--columns lists " + std::to_string(target.size()) + " columns, --n is " +
                     std::to_string(a.n));
  if (std::find(target.begin(), target.end(), 0U) != target.end())
    throw UsageError("--columns: column ids are 1-based");

  Gadget gadget;
  try {
    gadget = build_gadget({target, a.delta, a.force});
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + (a.force ? "" : " (use --force to override)"));
  }
  const Column widest = *std::max_element(target.begin(), target.end());
  const std::uint32_t universe = a.universe.value_or(widest);
  if (universe < widest)
    throw UsageError("--universe " + std::to_string(universe) + " is smaller than column " +
                     std::to_string(widest));
  if (!gadget.rigidity_guaranteed)
    err << "warning: n < 2*delta+3, the gadget is not guaranteed to be rigid\n";

  // Without -o the matrix owns stdout and the verification report goes to
  // stderr.
  std::ostream& report = a.output.empty() ? err : out;
  write_output(a.output, serialize_matrix(BinaryMatrix(universe, gadget.rows), MatrixFormat::kSparse),
               out);
  if (!a.verify) return kOk;

  const auto extra = universe - a.n;
  if (a.n + extra > 10)
    throw UsageError("--verify enumerates every ordering and is limited to 10 columns");
  const auto rigidity = verify_rigidity(a.n, a.delta, a.k, extra);
  report << "rigidity (n=" << a.n << ", delta=" << a.delta << ", k=" << a.k
         << ", extra=" << extra << "): " << (rigidity.rigid ? "rigid" : "NOT rigid")
         << ", valid_count = " << rigidity.valid_count << '\n';
  if (rigidity.counterexample)
    report << "counterexample: " << trimmed_ordering(*rigidity.counterexample) << '\n';
  return rigidity.rigid ? kOk : kFailed;
}

// ----------------------------------------------------------------- reduce

struct ReduceArgs {
  std::string cnf, theorem, variant = "repaired", legend, output;
  std::uint32_t k = 0;
  std::optional<std::uint32_t> delta;
};

int run_reduce(const ReduceArgs& a, std::istream& in, std::ostream& out, std::ostream& err) {
  const auto construction = parse_construction(a.theorem);
  std::uint32_t delta = 1;
  if (construction == Construction::kWideGap) {
    if (!a.delta) throw UsageError("--theorem 2 needs --delta");
    delta = *a.delta;
  } else if (a.delta && *a.delta != 1) {
    throw UsageError("--theorem 3 is the delta = 1 construction");
  }

  const auto text = read_input(a.cnf, in);
  const auto cnf = parse_file(a.cnf, [&] { return parse_dimacs(text); });
  const auto cnf3 = to_exact3(cnf);
  ReductionOutput output = [&] {
    try {
      return reduce(cnf3, construction, a.k, delta, parse_variant(a.variant));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();

  write_output(a.output, serialize_matrix(output.matrix, MatrixFormat::kSparse), out);
  if (!a.legend.empty()) write_output(a.legend, legend_json(output), out);
  if (!a.output.empty())
    err << "wrote " << output.matrix.num_rows() << " rows over " << output.matrix.num_columns()
        << " columns to " << a.output << '\n';
  return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite;
  SuiteOptions options;
  std::optional<double> timeout;
  bool no_stretch = false;
  bool json = false;
};

int run_verify(VerifyArgs a, std::ostream& out) {
  if (a.timeout) a.options.timeout = std::chrono::duration<double>(*a.timeout);
  a.options.include_stretch = !a.no_stretch;
  const auto reports = run_suites(a.suite, a.options);
  const bool passed = std::all_of(reports.begin(), reports.end(),
                                  [](const SuiteReport& r) { return r.passed(); });
  if (a.json) {
    json suites = json::array();
    for (const auto& report : reports) {
      json cases = json::array();
      for (const auto& c : report.cases)
        cases.push_back({{"name", c.name},
                         {"criterion", c.criterion},
                         {"status", c.skipped ? "skipped" : (c.passed ? "pass" : "fail")},
                         {"seconds", c.seconds},
                         {"budget_seconds", c.budget_seconds},
                         {"detail", c.detail}});
      suites.push_back({{"suite", report.suite}, {"passed", report.passed()}, {"cases", cases}});
    }
    out << json{{"status", passed ? "pass" : "fail"}, {"seed", a.options.seed}, {"suites", suites}}
               .dump(2)
        << '\n';
    return passed ? kOk : kFailed;
  }
  for (const auto& report : reports) {
    std::size_t ok = 0;
    out << "suite " << report.suite << '\n';
    for (const auto& c : report.cases) {
      ok += c.passed;
      out << "  " << (c.skipped ? "SKIP" : (c.passed ? "PASS" : "FAIL")) << "  ";
      if (c.criterion) out << "[" << c.criterion << "] ";
      out << c.name << " (" << std::fixed << std::setprecision(3) << c.seconds << " s)";
      if (!c.detail.empty()) out << ": " << c.detail;
      out << '\n';
    }
    out << "  " << ok << "/" << report.cases.size() << " passed\n";
  }
  return passed ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Gapped consecutive-ones toolkit", "gc1p"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "gc1p 0.1.0");
  const auto format_check = CLI::IsMember({"sparse", "dense"});

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Check an ordering against a (k, delta) spec");
  check_cmd->add_option("--matrix", check.matrix, "Matrix file ('-' for stdin)")->required();
  check_cmd->add_option("--order", check.order, "Ordering file")->required();
  check_cmd->add_option("--k", check.k, "Maximum blocks per row, or 'inf'")->required();
  check_cmd->add_option("--delta", check.delta, "Maximum gap size, or 'inf'")->required();
  check_cmd->add_option("--format", check.format, "Matrix format")->check(format_check);
  check_cmd->add_flag("--json", check.json, "Print a JSON object");

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide whether a (k, delta) ordering exists");
  solve_cmd->add_option("--matrix", solve.matrix, "Matrix file ('-' for stdin)")->required();
  solve_cmd->add_option("--k", solve.k, "Maximum blocks per row, or 'inf'")->required();
  solve_cmd->add_option("--delta", solve.delta, "Maximum gap size, or 'inf'")->required();
  solve_cmd->add_option("--timeout", solve.timeout, "Wall-clock limit in seconds")
      ->check(CLI::PositiveNumber);
  solve_cmd->add_option("--nodes", solve.nodes, "Node limit");
  solve_cmd->add_option("--threads", solve.threads, "Search threads")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--no-symmetry", solve.no_symmetry, "Disable reversal symmetry breaking");
  solve_cmd->add_option("--heuristic", solve.heuristic, "Column order: input or constrained")
      ->check(CLI::IsMember({"input", "constrained"}));
  solve_cmd->add_flag("--brute-force", solve.brute, "Enumerate every permutation instead");
  solve_cmd->add_option("--witness", solve.witness_path, "Write the witness ordering here");
  solve_cmd->add_option("--format", solve.format, "Matrix format")->check(format_check);
  solve_cmd->add_flag("--json", solve.json, "Print a JSON object");

  GadgetArgs gadget;
  auto* gadget_cmd = app.add_subcommand("gadget", "Emit the fixed-order gadget rows");
  gadget_cmd->add_option("--n", gadget.n, "Number of target columns")->required();
  gadget_cmd->add_option("--delta", gadget.delta, "Gap bound")->required();
  gadget_cmd->add_option("--k", gadget.k, "Block bound used by --verify");
  gadget_cmd->add_option("--columns", gadget.columns, "Target columns in order (comma separated)")
      ->delimiter(',');
  gadget_cmd->add_option("--universe", gadget.universe, "Total columns of the emitted matrix");
  gadget_cmd->add_flag("--verify", gadget.verify, "Check rigidity by exhaustive enumeration");
  gadget_cmd->add_flag("--force", gadget.force, "Allow n < 2*delta+3");
  gadget_cmd->add_option("-o,--output", gadget.output, "Output matrix file");

  ReduceArgs reduce_args;
  auto* reduce_cmd = app.add_subcommand("reduce", "Build the matrix for a 3SAT formula");
  reduce_cmd->add_option("--cnf", reduce_args.cnf, "DIMACS file ('-' for stdin)")->required();
  reduce_cmd->add_option("--theorem", reduce_args.theorem, "2: (k,delta), k,delta>=2; 3: (k,1), k>=3")
      ->required()
      ->check(CLI::IsMember({"2", "3"}));
  reduce_cmd->add_option("--k", reduce_args.k, "Block bound")->required();
  reduce_cmd->add_option("--delta", reduce_args.delta, "Gap bound (construction 2)");
  reduce_cmd->add_option("--variant", reduce_args.variant, "literal or repaired")
      ->check(CLI::IsMember({"literal", "repaired"}));
  reduce_cmd->add_option("--legend", reduce_args.legend, "Write the column legend (JSON) here");
  reduce_cmd->add_option("-o,--output", reduce_args.output, "Output matrix file");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Run the verification suites");
  verify_cmd->add_option("--suite", verify.suite, "gadget, solver, reduction or all")
      ->required()
      ->check(CLI::IsMember({"gadget", "solver", "reduction", "all"}));
  verify_cmd->add_option("--seed", verify.options.seed, "Seed of the random matrix corpus");
  verify_cmd->add_option("--timeout", verify.timeout, "Per-search limit in seconds")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--corpus-size", verify.options.corpus_size, "Random matrices")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--threads", verify.options.threads, "Search threads")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n", verify.options.gadget_n, "Gadget suite: single n");
  verify_cmd->add_option("--delta", verify.options.gadget_delta, "Gadget suite: single delta");
  verify_cmd->add_option("--k", verify.options.gadget_k, "Gadget suite: single k");
  verify_cmd->add_flag("--no-stretch", verify.no_stretch, "Skip the 19-column stretch case");
  verify_cmd->add_flag("--json", verify.json, "Print a JSON object");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check_cmd->parsed()) return run_check(check, in, out);
    if (solve_cmd->parsed()) return run_solve(solve, in, out);
    if (gadget_cmd->parsed()) return run_gadget(gadget, out, err);
    if (reduce_cmd->parsed()) return run_reduce(reduce_args, in, out, err);
    if (verify_cmd->parsed()) return run_verify(verify, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace gc1p::cli
