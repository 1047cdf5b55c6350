#include "loops/enumerate.hpp"

#include <atomic>
#include <bit>
#include <thread>

namespace loops {

namespace {

// Cell-by-cell backtracker over the free region (rows >= 1, columns >= 1).
// Row 0 and column 0 are the identity by construction; per-row and
// per-column used-value bitmasks drive candidate selection in increasing
// value order, which makes the emission order lexicographic row-major.
struct SearchState {
  int n;
  std::uint32_t full_mask;
  std::vector<std::uint8_t> cells;
  std::vector<std::uint32_t> row_used;
  std::vector<std::uint32_t> col_used;

  explicit SearchState(int order)
      : n(order),
        full_mask((1u << order) - 1),
        cells(static_cast<std::size_t>(order) * order),
        row_used(static_cast<std::size_t>(order)),
        col_used(static_cast<std::size_t>(order)) {
    for (int j = 0; j < n; ++j) cells[static_cast<std::size_t>(j)] = static_cast<std::uint8_t>(j);
    for (int i = 0; i < n; ++i) cells[static_cast<std::size_t>(i) * n] = static_cast<std::uint8_t>(i);
    row_used[0] = full_mask;
    col_used[0] = full_mask;
    for (int i = 1; i < n; ++i) row_used[static_cast<std::size_t>(i)] = 1u << i;
    for (int j = 1; j < n; ++j) col_used[static_cast<std::size_t>(j)] = 1u << j;
  }

  void place_row(int i, const std::vector<std::uint8_t>& row) {
    for (int j = 1; j < n; ++j) {
      std::uint8_t v = row[static_cast<std::size_t>(j)];
      cells[static_cast<std::size_t>(i) * n + j] = v;
      row_used[static_cast<std::size_t>(i)] |= 1u << v;
      col_used[static_cast<std::size_t>(j)] |= 1u << v;
    }
  }

  // Completes cells from (i,j) on; on_complete returns false to abort the
  // whole search. Returns false iff aborted.
  bool extend(int i, int j,
              const std::function<bool(const std::vector<std::uint8_t>&)>& on_complete) {
    if (i == n) return on_complete(cells);
    if (j == n) return extend(i + 1, 1, on_complete);
    std::uint32_t avail = ~(row_used[static_cast<std::size_t>(i)] |
                            col_used[static_cast<std::size_t>(j)]) &
                          full_mask;
    while (avail != 0) {
      int v = std::countr_zero(avail);
      avail &= avail - 1;
      cells[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(v);
      row_used[static_cast<std::size_t>(i)] |= 1u << v;
      col_used[static_cast<std::size_t>(j)] |= 1u << v;
      bool keep_going = extend(i, j + 1, on_complete);
      row_used[static_cast<std::size_t>(i)] &= ~(1u << v);
      col_used[static_cast<std::size_t>(j)] &= ~(1u << v);
      if (!keep_going) return false;
    }
    return true;
  }

  // Enumerates valid assignments of row `i` only.
  void row_candidates(int i, int j, std::vector<std::vector<std::uint8_t>>& out) {
    if (j == n) {
      out.emplace_back(cells.begin() + static_cast<std::ptrdiff_t>(i) * n,
                       cells.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
      return;
    }
    std::uint32_t avail = ~(row_used[static_cast<std::size_t>(i)] |
                            col_used[static_cast<std::size_t>(j)]) &
                          full_mask;
    while (avail != 0) {
      int v = std::countr_zero(avail);
      avail &= avail - 1;
      cells[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(v);
      row_used[static_cast<std::size_t>(i)] |= 1u << v;
      col_used[static_cast<std::size_t>(j)] |= 1u << v;
      row_candidates(i, j + 1, out);
      row_used[static_cast<std::size_t>(i)] &= ~(1u << v);
      col_used[static_cast<std::size_t>(j)] &= ~(1u << v);
    }
  }
};

void check_order(int n, const EnumerationOptions& options) {
  if (n < 1) raise(Errc::bad_entry, "order must be positive");
  if (n > kMaxOrder) {
    raise(Errc::order_too_large, "order " + std::to_string(n) +
                                     " exceeds supported maximum " +
                                     std::to_string(kMaxOrder));
  }
  if (n > kEnumerationCap && !options.force_order) {
    raise(Errc::order_too_large,
          "exhaustive enumeration is capped at order " +
              std::to_string(kEnumerationCap) +
              " (pass the override to go further)");
  }
}

bool passes(const LoopTable& table, const std::vector<LoopPredicate>& filters) {
  for (const auto& filter : filters) {
    if (!filter(table)) return false;
  }
  return true;
}

std::string table_label(int n, std::uint64_t index) {
  return "n" + std::to_string(n) + "#" + std::to_string(index);
}

}  // namespace

EnumerationStats EnumerationJob::run() const {
  return enumerate_loops(order, filters, emit, options);
}

EnumerationStats enumerate_loops(int n, const std::vector<LoopPredicate>& filters,
                                 const LoopSink& sink,
                                 const EnumerationOptions& options) {
  check_order(n, options);
  EnumerationStats stats;

  auto deliver = [&](const std::vector<std::uint8_t>& cells) {
    LoopTable table =
        validate_table(cells, n, table_label(n, stats.generated));
    ++stats.generated;
    if (passes(table, filters)) {
      ++stats.emitted;
      if (sink) sink(table);
    }
  };

  if (options.workers <= 1 || n < 3) {
    SearchState state(n);
    state.extend(1, 1, [&](const std::vector<std::uint8_t>& cells) {
      deliver(cells);
      return true;
    });
    return stats;
  }

  // Parallel path: the row-1 assignment partitions the space into disjoint
  // subtrees; workers fill whole subtrees and results merge in subtree
  // order, so the stream is byte-identical to the serial one.
  std::vector<std::vector<std::uint8_t>> subtrees;
  {
    SearchState state(n);
    state.row_candidates(1, 1, subtrees);
  }
  std::vector<std::vector<std::vector<std::uint8_t>>> buckets(subtrees.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t k = cursor.fetch_add(1);
      if (k >= subtrees.size()) return;
      SearchState state(n);
      state.place_row(1, subtrees[k]);
      state.extend(2, 1, [&](const std::vector<std::uint8_t>& cells) {
        buckets[k].push_back(cells);
        return true;
      });
    }
  };
  std::vector<std::thread> pool;
  unsigned count = std::min<std::size_t>(options.workers, subtrees.size());
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (const auto& bucket : buckets) {
    for (const auto& cells : bucket) deliver(cells);
  }
  return stats;
}

std::uint64_t count_loops(int n, const std::vector<LoopPredicate>& filters,
                          const EnumerationOptions& options) {
  return enumerate_loops(n, filters, nullptr, options).emitted;
}

std::vector<LoopTable> collect_loops(int n, const std::vector<LoopPredicate>& filters,
                                     const EnumerationOptions& options) {
  std::vector<LoopTable> out;
  enumerate_loops(n, filters, [&](const LoopTable& t) { out.push_back(t); },
                  options);
  return out;
}

std::optional<LoopTable> search_witness(int n_max, const LoopPredicate& predicate,
                                        const EnumerationOptions& options) {
  if (n_max > kEnumerationCap && !options.force_order) {
    raise(Errc::order_too_large,
          "witness search is capped at order " + std::to_string(kEnumerationCap));
  }
  std::optional<LoopTable> found;
  for (int n = 1; n <= n_max && !found; ++n) {
    SearchState state(n);
    std::uint64_t index = 0;
    state.extend(1, 1, [&](const std::vector<std::uint8_t>& cells) {
      LoopTable table = validate_table(cells, n, table_label(n, index));
      ++index;
      if (predicate(table)) {
        found = table;
        return false;
      }
      return true;
    });
  }
  return found;
}

}  // namespace loops
