#pragma once

// Shared fixtures and independent oracles for the test suites. Everything
// here deliberately avoids the library's own search and enumeration paths
// where it is used to cross-check them.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "loops/autotopy.hpp"
#include "loops/core.hpp"

namespace loops::testsupport {

// Cyclic group of order n.
inline LoopTable zn(int n) {
  std::vector<std::vector<int>> raw(static_cast<std::size_t>(n),
                                    std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = (i + j) % n;
  }
  return validate_table(raw, "Z" + std::to_string(n));
}

// Klein four-group (exponent 2).
inline LoopTable klein() {
  std::vector<std::vector<int>> raw(4, std::vector<int>(4));
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = i ^ j;
  }
  return validate_table(raw, "Z2xZ2");
}

// Symmetric group on three letters, elements indexed by the lexicographic
// rank of their image arrays (identity first), product = apply left factor
// then right factor.
inline LoopTable s3() {
  std::vector<std::vector<std::uint8_t>> perms;
  std::vector<std::uint8_t> p = {0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto rank = [&](const std::vector<std::uint8_t>& q) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), q) -
                            perms.begin());
  };
  std::vector<std::vector<int>> raw(6, std::vector<int>(6));
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      std::vector<std::uint8_t> composed(3);
      for (int x = 0; x < 3; ++x) {
        composed[static_cast<std::size_t>(x)] =
            perms[static_cast<std::size_t>(j)]
                 [perms[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)]];
      }
      raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = rank(composed);
    }
  }
  return validate_table(raw, "S3");
}

// Independent count of n x n Latin squares with identity first row and
// column: rows are extended one at a time, each candidate row drawn from
// all n! permutations and tested against the columns filled so far. No
// bitmask pruning, no shared code with the production backtracker.
inline std::uint64_t count_reduced_latin_naive(int n) {
  std::vector<std::vector<int>> grid;
  grid.emplace_back(static_cast<std::size_t>(n));
  std::iota(grid[0].begin(), grid[0].end(), 0);

  std::uint64_t count = 0;
  std::vector<int> candidate(static_cast<std::size_t>(n));
  std::iota(candidate.begin(), candidate.end(), 0);

  auto extend = [&](auto&& self, int row) -> void {
    if (row == n) {
      ++count;
      return;
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      if (perm[0] != row) continue;
      bool ok = true;
      for (int j = 1; j < n && ok; ++j) {
        for (std::size_t r = 0; r < grid.size() && ok; ++r) {
          ok = grid[r][static_cast<std::size_t>(j)] != perm[static_cast<std::size_t>(j)];
        }
      }
      if (!ok) continue;
      grid.push_back(perm);
      self(self, row + 1);
      grid.pop_back();
    } while (std::next_permutation(perm.begin(), perm.end()));
  };
  if (n == 1) return 1;
  extend(extend, 1);
  return count;
}

// All permutations of {0..n-1} in lexicographic order.
inline std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), static_cast<std::uint8_t>(0));
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

// Oracle for the autotopism group: the full three-fold product over all
// permutation triples, feasible for order <= 4.
inline std::vector<Triple> brute_force_autotopisms(const LoopTable& L) {
  const int n = L.order();
  std::vector<Perm> perms = all_perms(n);
  std::vector<Triple> out;
  for (const Perm& u : perms) {
    for (const Perm& v : perms) {
      for (const Perm& w : perms) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
          for (int y = 0; y < n; ++y) {
            if (L.mul(u(x), v(y)) != w(L.mul(x, y))) {
              ok = false;
              break;
            }
          }
        }
        if (ok) out.emplace_back(u, v, w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace loops::testsupport
