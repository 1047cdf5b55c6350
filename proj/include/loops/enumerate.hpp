#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "loops/core.hpp"

namespace loops {

// Exhaustive generation above this order is refused unless the caller sets
// EnumerationOptions::force_order. Order 7 already has ~1.7e7 normalized
// squares; whole-table property sweeps stop being desk scale there.
inline constexpr int kEnumerationCap = 6;

using LoopPredicate = std::function<bool(const LoopTable&)>;
using LoopSink = std::function<void(const LoopTable&)>;

struct EnumerationOptions {
  bool force_order = false;
  // Worker threads. The first non-forced row partitions the search space;
  // each worker owns disjoint subtrees and results merge in subtree order,
  // so the emitted stream is identical for any worker count.
  unsigned workers = 1;
};

struct EnumerationStats {
  std::uint64_t generated = 0;  // tables produced by the backtracker
  std::uint64_t emitted = 0;    // tables that passed every filter
};

/// One exhaustive generation pass over all order-n loops (n x n Latin
/// squares whose row 0 and column 0 are the identity), emitted exactly once
/// each in lexicographic row-major order. Filters apply conjunctively after
/// a table is complete.
struct EnumerationJob {
  int order = 1;
  std::vector<LoopPredicate> filters;
  LoopSink emit;
  EnumerationOptions options;

  EnumerationStats run() const;
};

EnumerationStats enumerate_loops(int n, const std::vector<LoopPredicate>& filters,
                                 const LoopSink& sink,
                                 const EnumerationOptions& options = {});

std::uint64_t count_loops(int n, const std::vector<LoopPredicate>& filters = {},
                          const EnumerationOptions& options = {});

std::vector<LoopTable> collect_loops(int n,
                                     const std::vector<LoopPredicate>& filters = {},
                                     const EnumerationOptions& options = {});

/// First table satisfying the predicate in (order, lexicographic) scan
/// order over orders 1..n_max; nullopt means exhaustively refuted.
std::optional<LoopTable> search_witness(int n_max, const LoopPredicate& predicate,
                                        const EnumerationOptions& options = {});

}  // namespace loops
