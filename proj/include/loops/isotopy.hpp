#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loops/core.hpp"
#include "loops/autotopy.hpp"

namespace loops {

/// A Latin square without the identity normalization; the stage every
/// isotope passes through before (possibly) becoming a loop again.
class QuasigroupTable {
 public:
  static QuasigroupTable from_cells(std::vector<std::uint8_t> cells, int n,
                                    std::string origin);

  int order() const noexcept { return n_; }
  int mul(int x, int y) const {
    return cells_[static_cast<std::size_t>(x) * n_ + y];
  }
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }
  const std::string& origin() const noexcept { return origin_; }

 private:
  QuasigroupTable(int n, std::vector<std::uint8_t> cells, std::string origin);

  int n_;
  std::vector<std::uint8_t> cells_;
  std::string origin_;
};

/// The isotope with a o b = ((a U^{-1}) * (b V^{-1})) W. Always a Latin
/// square (bijections preserve the property); an identity triple returns
/// the original table.
QuasigroupTable isotope(const LoopTable& loop, const Triple& t);

/// x o y = (x R_a^{-1}) * (y L_b^{-1}); the isotope by (R_a, L_b, I). The
/// result always has the two-sided identity b*a.
QuasigroupTable principal_isotope(const LoopTable& loop, int a, int b);

/// The element u with row u and column u both the identity, if any.
std::optional<int> two_sided_identity(const QuasigroupTable& square);

/// Relabels so the two-sided identity becomes 0 (swapping the labels 0 and
/// u everywhere) and revalidates; nullopt when no identity exists.
std::optional<LoopTable> normalize_to_loop(const QuasigroupTable& square);

/// Exhaustive isomorphism test (identity-preserving bijections); capped at
/// order 6.
bool are_isomorphic(const LoopTable& a, const LoopTable& b);

/// Necessary conditions from autotopism-group invariance under isotopy:
/// the principal isotope at (a,b), renormalized, must have an autotopism
/// group of the same cardinality and the same multiset of element orders.
bool aut_invariance_check(const LoopTable& loop, int a, int b,
                          int cap = kDefaultAutotopyCap);

enum class HarnessVerdict { holds, violated, vacuous };

const char* harness_verdict_name(HarnessVerdict v);

struct HarnessReport {
  bool hypotheses_met = false;
  bool conclusion = false;
  HarnessVerdict verdict = HarnessVerdict::vacuous;
  std::string detail;
};

/// Hypotheses (left form): t has shape (A,B,B), t is an isotopism of g onto
/// h, g is an LC-loop and central square, h is alternative and central
/// square. Right form: shape (A,B,A) with g an RC-loop. Conclusion: h is a
/// C-loop.
HarnessReport thm_1_5_harness(const LoopTable& g, const LoopTable& h,
                              const Triple& t, Side side);

/// Variant hypotheses (left form): g is a central square left-alternative
/// RC-loop and t has shape (A,B,B); right form: g central square
/// right-alternative LC-loop, shape (A,B,A). Same conclusion.
HarnessReport cor_1_6_harness(const LoopTable& g, const LoopTable& h,
                              const Triple& t, Side side);

/// xU o yV = (x*y)W where o is h's operation.
bool is_isotopism(const LoopTable& g, const LoopTable& h, const Triple& t);

}  // namespace loops
