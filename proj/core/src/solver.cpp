#include "gc1p/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

#include "bitset.hpp"

namespace gc1p {

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::kSatisfied: return "Satisfied";
    case SolveStatus::kExhausted: return "Exhausted";
    case SolveStatus::kTimedOut: return "TimedOut";
  }
  return "?";
}

namespace {

using detail::BitSet;
using Clock = std::chrono::steady_clock;

constexpr std::uint32_t kNoLimit = std::numeric_limits<std::uint32_t>::max();

// Rows with fewer than two ones can never violate a spec, and duplicate rows
// impose the same constraint twice; both are dropped before searching.
struct Model {
  std::size_t num_columns = 0;
  std::uint32_t max_blocks = kNoLimit;
  std::uint32_t max_gap = kNoLimit;
  std::vector<BitSet> row_bits;
  std::vector<std::uint32_t> row_size;
  std::vector<std::vector<std::uint32_t>> column_rows;  // 0-based column -> rows

  Model(const BinaryMatrix& matrix, const GapSpec& spec) : num_columns(matrix.num_columns()) {
    if (!spec.max_blocks.is_unbounded()) max_blocks = spec.max_blocks.value();
    if (!spec.max_gap.is_unbounded()) max_gap = spec.max_gap.value();
    std::set<RowSupport> distinct;
    for (const auto& row : matrix.rows())
      if (row.size() >= 2) distinct.insert(row);
    column_rows.resize(num_columns);
    for (const auto& row : distinct) {
      const auto r = static_cast<std::uint32_t>(row_bits.size());
      BitSet bits(num_columns);
      for (Column c : row) {
        bits.set(c - 1);
        column_rows[c - 1].push_back(r);
      }
      row_bits.push_back(std::move(bits));
      row_size.push_back(static_cast<std::uint32_t>(row.size()));
    }
  }

  std::size_t num_rows() const noexcept { return row_bits.size(); }
};

struct RowState {
  std::uint32_t placed = 0;
  std::uint32_t blocks = 0;
  std::uint32_t gap = 0;  // zeros since the last one while the row is open
};

enum class Result { kFound, kExhausted, kAborted };
enum class Prune { kNone, kGap, kBlocks };

struct SharedControl {
  const SearchConfig& config;
  Clock::time_point start;
  std::atomic<bool> stop{false};
  std::atomic<bool> aborted{false};
  std::atomic<std::uint64_t> nodes{0};
};

class Search {
 public:
  Search(const Model& model, const SearchConfig& config, SharedControl& shared)
      : model_(model),
        config_(config),
        shared_(shared),
        rows_(model.num_rows()),
        active_(model.num_rows()),
        unplaced_(model.num_columns),
        candidates_(model.num_columns + 1) {
    unplaced_.set_all();
    placement_.reserve(model.num_columns);
  }

  /// Columns allowed at the current depth, in the order they will be tried.
  /// Returns false when two open rows demand disjoint columns.
  bool candidates(std::vector<std::uint32_t>& out) {
    out.clear();
    BitSet allowed = unplaced_;
    bool feasible = true;
    active_.for_each([&](std::size_t r) {
      if (!feasible || !must_continue(rows_[r])) return;
      allowed &= model_.row_bits[r];
      if (!allowed.any()) feasible = false;
    });
    if (!feasible) {
      ++stats_.pruned_forced;
      return false;
    }
    const auto last = static_cast<std::uint32_t>(model_.num_columns - 1);
    allowed.for_each([&](std::size_t c) {
      if (config_.symmetry_breaking && last > 0 && c == last && unplaced_.test(0)) {
        ++stats_.pruned_symmetry;
        return;
      }
      out.push_back(static_cast<std::uint32_t>(c));
    });
    if (config_.column_heuristic == ColumnHeuristic::kMostConstrained && out.size() > 1) {
      scores_.assign(model_.num_columns, 0);
      for (auto c : out)
        for (auto r : model_.column_rows[c])
          if (active_.test(r)) scores_[c] += rows_[r].gap > 0 ? 2 : 1;
      std::stable_sort(out.begin(), out.end(),
                       [&](auto a, auto b) { return scores_[a] > scores_[b]; });
    }
    return true;
  }

  /// Places column c at the next position. On a prune the partial update is
  /// left on the trail for the caller to undo.
  Prune place(std::uint32_t c) {
    Prune verdict = Prune::kNone;
    active_.for_each([&](std::size_t r) {
      if (verdict != Prune::kNone || model_.row_bits[r].test(c)) return;
      RowState& s = rows_[r];
      trail_.emplace_back(static_cast<std::uint32_t>(r), s);
      ++s.gap;
      if (s.gap == 1 && s.blocks >= model_.max_blocks)
        verdict = Prune::kBlocks;
      else if (s.gap > model_.max_gap)
        verdict = Prune::kGap;
    });
    if (verdict == Prune::kGap) ++stats_.pruned_gap;
    if (verdict == Prune::kBlocks) ++stats_.pruned_blocks;
    if (verdict != Prune::kNone) return verdict;

    for (auto r : model_.column_rows[c]) {
      RowState& s = rows_[r];
      trail_.emplace_back(r, s);
      if (s.placed == 0)
        s.blocks = 1;
      else if (s.gap > 0)
        ++s.blocks;
      s.gap = 0;
      ++s.placed;
      if (s.placed == model_.row_size[r])
        active_.reset(r);
      else
        active_.set(r);
    }
    unplaced_.reset(c);
    placement_.push_back(c);
    return verdict;
  }

  void undo(std::size_t mark, bool placed, std::uint32_t c) {
    while (trail_.size() > mark) {
      auto [r, s] = trail_.back();
      trail_.pop_back();
      rows_[r] = s;
      if (s.placed > 0 && s.placed < model_.row_size[r])
        active_.set(r);
      else
        active_.reset(r);
    }
    if (placed) {
      unplaced_.set(c);
      placement_.pop_back();
    }
  }

  std::size_t trail_mark() const noexcept { return trail_.size(); }

  Result run(std::size_t depth) {
    if (depth == model_.num_columns) return Result::kFound;
    if (shared_.stop.load(std::memory_order_relaxed)) return Result::kAborted;
    auto& options = candidates_[depth];
    if (!candidates(options)) return Result::kExhausted;
    for (std::size_t i = 0; i < options.size(); ++i) {
      const auto c = options[i];
      if (!count_node()) return Result::kAborted;
      const auto mark = trail_mark();
      if (place(c) != Prune::kNone) {
        undo(mark, false, c);
        continue;
      }
      const Result r = run(depth + 1);
      if (r == Result::kFound) return r;
      undo(mark, true, c);
      if (r == Result::kAborted) return r;
    }
    return Result::kExhausted;
  }

  const std::vector<std::uint32_t>& placement() const noexcept { return placement_; }
  const SearchStats& stats() const noexcept { return stats_; }
  std::vector<std::uint32_t>& root_candidates() { return candidates_[0]; }

 private:
  bool must_continue(const RowState& s) const noexcept {
    if (s.gap == 0) return s.blocks >= model_.max_blocks || model_.max_gap == 0;
    return s.gap >= model_.max_gap;
  }

  bool count_node() {
    ++stats_.nodes_expanded;
    const auto total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (config_.node_limit && total > *config_.node_limit) return abort();
    if (config_.timeout && (stats_.nodes_expanded & 255U) == 0 &&
        Clock::now() - shared_.start > *config_.timeout)
      return abort();
    return true;
  }

  bool abort() {
    shared_.aborted = true;
    shared_.stop = true;
    return false;
  }

  const Model& model_;
  const SearchConfig& config_;
  SharedControl& shared_;
  std::vector<RowState> rows_;
  BitSet active_;
  BitSet unplaced_;
  std::vector<std::uint32_t> placement_;
  std::vector<std::pair<std::uint32_t, RowState>> trail_;
  std::vector<std::vector<std::uint32_t>> candidates_;
  std::vector<std::uint32_t> scores_;
  SearchStats stats_;
};

void accumulate(SearchStats& into, const SearchStats& from) {
  into.nodes_expanded += from.nodes_expanded;
  into.pruned_gap += from.pruned_gap;
  into.pruned_blocks += from.pruned_blocks;
  into.pruned_forced += from.pruned_forced;
  into.pruned_symmetry += from.pruned_symmetry;
}

ColumnOrdering to_ordering(const std::vector<std::uint32_t>& placement) {
  std::vector<Column> forward;
  forward.reserve(placement.size());
  for (auto c : placement) forward.push_back(c + 1);
  return ColumnOrdering::from_forward(std::move(forward));
}

}  // namespace

SolveOutcome decide(const BinaryMatrix& matrix, const GapSpec& spec, const SearchConfig& config) {
  const Model model(matrix, spec);
  SharedControl shared{config, Clock::now()};
  SolveOutcome outcome;

  if (model.num_rows() == 0) {
    outcome.status = SolveStatus::kSatisfied;
    outcome.witness = ColumnOrdering::identity(matrix.num_columns());
    return outcome;
  }

  const unsigned threads = std::max(1U, config.thread_count);
  if (threads == 1) {
    Search search(model, config, shared);
    const Result r = search.run(0);
    outcome.stats = search.stats();
    if (r == Result::kFound) {
      outcome.status = SolveStatus::kSatisfied;
      outcome.witness = to_ordering(search.placement());
    } else {
      outcome.status = r == Result::kAborted ? SolveStatus::kTimedOut : SolveStatus::kExhausted;
    }
  } else {
    // Workers pull first-level branches from a shared counter.
    std::vector<std::uint32_t> roots;
    {
      Search probe(model, config, shared);
      probe.candidates(roots);
    }
    std::atomic<std::size_t> next{0};
    std::mutex mutex;
    std::optional<std::pair<std::size_t, std::vector<std::uint32_t>>> found;
    auto worker = [&] {
      Search search(model, config, shared);
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= roots.size() || shared.stop.load()) break;
        const auto c = roots[i];
        const auto mark = search.trail_mark();
        if (search.place(c) != Prune::kNone) {
          search.undo(mark, false, c);
          continue;
        }
        const Result r = search.run(1);
        if (r == Result::kFound) {
          std::lock_guard lock(mutex);
          if (!found || i < found->first) found.emplace(i, search.placement());
          shared.stop = true;
          break;
        }
        search.undo(mark, true, c);
        if (r == Result::kAborted) break;
      }
      std::lock_guard lock(mutex);
      accumulate(outcome.stats, search.stats());
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    pool.clear();
    if (found) {
      outcome.status = SolveStatus::kSatisfied;
      outcome.witness = to_ordering(found->second);
    } else {
      outcome.status = shared.aborted ? SolveStatus::kTimedOut : SolveStatus::kExhausted;
    }
  }
  outcome.stats.elapsed = Clock::now() - shared.start;
  return outcome;
}

}  // namespace gc1p
