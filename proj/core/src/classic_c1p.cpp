// Consecutive-ones test by overlap components.
//
// Two rows overlap when they intersect and neither contains the other. Inside
// one connected overlap component the arrangement of the covered columns is
// forced up to reversal and up to permutations of columns that no row of the
// component tells apart, so the component can be built incrementally as an
// ordered partition: each newly added row overlaps an earlier one and must
// land on a contiguous run of classes, refining the two end classes.
//
// The column sets covered by different components form a laminar family, and
// a component nested inside another sits within a single class of it. The
// final ordering lays the components out along that containment forest.
// Every step is polynomial in rows x columns.

#include <algorithm>
#include <numeric>
#include <set>

#include "bitset.hpp"
#include "gc1p/solver.hpp"

namespace gc1p {
namespace {

using detail::BitSet;
using Class = std::vector<std::uint32_t>;

struct Component {
  std::vector<std::size_t> rows;  // BFS order through the overlap graph
  BitSet cover;
  std::size_t cover_size = 0;
  std::vector<Class> classes;
  std::vector<std::vector<std::size_t>> children;  // per class
};

// Adds `row` to the ordered partition. Returns false when it cannot be made
// contiguous.
bool refine(std::vector<Class>& classes, BitSet& cover, const BitSet& row,
            const std::vector<std::uint32_t>& members) {
  enum Status { kEmpty, kPartial, kFull };
  const std::size_t t = classes.size();
  std::vector<Status> status(t, kEmpty);
  std::size_t first = t;
  std::size_t last = 0;
  for (std::size_t i = 0; i < t; ++i) {
    std::size_t inside = 0;
    for (auto c : classes[i]) inside += row.test(c) ? 1 : 0;
    if (inside == 0) continue;
    status[i] = inside == classes[i].size() ? kFull : kPartial;
    first = std::min(first, i);
    last = i;
  }
  Class outside;
  for (auto c : members)
    if (!cover.test(c)) outside.push_back(c);

  auto split = [&](std::size_t i, bool row_part_first) {
    Class in, out;
    for (auto c : classes[i]) (row.test(c) ? in : out).push_back(c);
    classes[i] = row_part_first ? in : out;
    classes.insert(classes.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                   row_part_first ? out : in);
  };
  auto all_full = [&](std::size_t from, std::size_t to) {  // [from, to)
    for (std::size_t i = from; i < to; ++i)
      if (status[i] != kFull) return false;
    return true;
  };

  if (first == t) return false;  // unreachable for rows that overlap the cover

  if (outside.empty()) {
    if (first == last || !all_full(first + 1, last)) return false;
    if (status[last] == kPartial) split(last, true);
    if (status[first] == kPartial) split(first, false);
    return true;
  }

  const bool fits_right = last == t - 1 && all_full(first + 1, t);
  const bool fits_left = first == 0 && all_full(0, last);
  if (fits_right) {
    if (status[first] == kPartial) split(first, false);
    classes.push_back(outside);
  } else if (fits_left) {
    if (status[last] == kPartial) split(last, true);
    classes.insert(classes.begin(), outside);
  } else {
    return false;
  }
  for (auto c : outside) cover.set(c);
  return true;
}

bool subset_of(const BitSet& a, const BitSet& b) {
  BitSet x = a;
  x &= b;
  return x == a;
}

bool intersects(const BitSet& a, const BitSet& b) {
  BitSet x = a;
  x &= b;
  return x.any();
}

}  // namespace

std::optional<ColumnOrdering> classic_c1p(const BinaryMatrix& matrix) {
  const std::size_t n = matrix.num_columns();

  std::set<RowSupport> distinct;
  for (const auto& row : matrix.rows())
    if (row.size() >= 2) distinct.insert(row);
  std::vector<std::vector<std::uint32_t>> members;
  std::vector<BitSet> bits;
  for (const auto& row : distinct) {
    BitSet b(n);
    std::vector<std::uint32_t> m;
    for (Column c : row) {
      b.set(c - 1);
      m.push_back(c - 1);
    }
    bits.push_back(std::move(b));
    members.push_back(std::move(m));
  }
  const std::size_t rows = bits.size();

  auto overlaps = [&](std::size_t a, std::size_t b) {
    BitSet x = bits[a];
    x &= bits[b];
    const std::size_t common = x.count();
    return common > 0 && common < members[a].size() && common < members[b].size();
  };

  // Overlap components, each row list in BFS order.
  std::vector<Component> components;
  std::vector<bool> visited(rows, false);
  for (std::size_t seed = 0; seed < rows; ++seed) {
    if (visited[seed]) continue;
    Component comp;
    visited[seed] = true;
    comp.rows.push_back(seed);
    for (std::size_t head = 0; head < comp.rows.size(); ++head)
      for (std::size_t other = 0; other < rows; ++other)
        if (!visited[other] && overlaps(comp.rows[head], other)) {
          visited[other] = true;
          comp.rows.push_back(other);
        }

    comp.cover = BitSet(n);
    for (auto c : members[comp.rows.front()]) comp.cover.set(c);
    comp.classes.push_back(members[comp.rows.front()]);
    for (std::size_t i = 1; i < comp.rows.size(); ++i) {
      const auto r = comp.rows[i];
      if (!refine(comp.classes, comp.cover, bits[r], members[r])) return std::nullopt;
    }
    comp.cover_size = comp.cover.count();
    comp.children.resize(comp.classes.size());
    components.push_back(std::move(comp));
  }

  // Larger covers first; on equal covers the single-row component is the
  // container.
  std::vector<std::size_t> order(components.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) {
    const auto& ca = components[a];
    const auto& cb = components[b];
    if (ca.cover_size != cb.cover_size) return ca.cover_size > cb.cover_size;
    return ca.rows.size() == 1 && cb.rows.size() != 1;
  });

  std::vector<std::size_t> roots;
  for (std::size_t i = 0; i < order.size(); ++i) {
    const auto k = order[i];
    std::optional<std::size_t> parent;
    for (std::size_t j = 0; j < i; ++j) {
      const auto l = order[j];
      if (!intersects(components[k].cover, components[l].cover)) continue;
      if (!subset_of(components[k].cover, components[l].cover)) return std::nullopt;
      parent = l;  // later entries have smaller covers
    }
    if (!parent) {
      roots.push_back(k);
      continue;
    }
    auto& host = components[*parent];
    const auto probe = components[k].cover;
    bool placed = false;
    for (std::size_t cls = 0; cls < host.classes.size() && !placed; ++cls) {
      BitSet class_bits(n);
      for (auto c : host.classes[cls]) class_bits.set(c);
      if (subset_of(probe, class_bits)) {
        host.children[cls].push_back(k);
        placed = true;
      }
    }
    if (!placed) return std::nullopt;
  }

  std::vector<Column> forward;
  forward.reserve(n);
  std::vector<bool> emitted(n, false);
  auto emit_column = [&](std::uint32_t c) {
    if (!emitted[c]) {
      emitted[c] = true;
      forward.push_back(c + 1);
    }
  };
  auto emit = [&](auto&& self, std::size_t k) -> void {
    const auto& comp = components[k];
    for (std::size_t cls = 0; cls < comp.classes.size(); ++cls) {
      for (auto child : comp.children[cls]) self(self, child);
      for (auto c : comp.classes[cls]) emit_column(c);
    }
  };
  for (auto k : roots) emit(emit, k);
  for (std::uint32_t c = 0; c < n; ++c) emit_column(c);

  auto ordering = ColumnOrdering::from_forward(std::move(forward));
  if (!check_ordering(matrix, ordering, GapSpec{1, 0}).ok)
    throw std::logic_error("classic_c1p assembled an ordering that is not consecutive");
  return ordering;
}

}  // namespace gc1p
