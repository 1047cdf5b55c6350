#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "loops/core.hpp"

namespace loops {

// Orders above this need more than n! * n reconstruction candidates per
// table; callers can raise it explicitly.
inline constexpr int kDefaultAutotopyCap = 8;

/// An ordered triple (U,V,W) of equal-degree permutations; candidate
/// autotopism or isotopism. Composition and inversion are componentwise,
/// postfix like Perm.
struct Triple {
  Perm u;
  Perm v;
  Perm w;

  Triple(Perm u_, Perm v_, Perm w_);

  static Triple identity(int degree);

  int degree() const noexcept { return u.degree(); }
  Triple then(const Triple& next) const;
  Triple inverse() const;
  bool is_identity() const;
  /// Least k >= 1 with the k-fold composite equal to the identity triple.
  int order() const;

  auto operator<=>(const Triple&) const = default;
};

std::string to_string(const Triple& t);

struct AutotopismCheck {
  bool holds = true;
  std::optional<std::pair<int, int>> witness;  // first failing (x,y)

  explicit operator bool() const { return holds; }
};

/// Does xU * yV = (x*y)W hold for all pairs?
AutotopismCheck is_autotopism(const LoopTable& loop, const Triple& t);

/// The full autotopism group, sorted lexicographically by (U,V) image
/// arrays. Search strategy: the defining equation at y=0 forces
/// W = U then R_{V(0)}, and at x=0 forces V = W then L_{U(0)}^{-1}, so it
/// suffices to enumerate U over all n! permutations and V(0) over n
/// elements, reconstruct, and verify. Self-checks the group axioms.
std::vector<Triple> autotopism_group(const LoopTable& loop,
                                     int cap = kDefaultAutotopyCap);

/// A bijection U with xU * y = x * yV for all x,y, together with that
/// (unique) adjoint V.
struct MuRegularEntry {
  Perm u;
  Perm adjoint;

  auto operator<=>(const MuRegularEntry&) const = default;
};

/// All mu-regular bijections with adjoints, sorted by U. The defining
/// relation at x=0 pins V = L_{U(0)}; candidates enumerate U over n!
/// permutations. The result is verified closed under composition and
/// inverse (with adjoints composing in reverse order).
std::vector<MuRegularEntry> mu_regular_set(const LoopTable& loop,
                                           int cap = kDefaultAutotopyCap);

bool mu_regular_contains(const std::vector<MuRegularEntry>& entries,
                         const Perm& u, const Perm& adjoint);

/// Left: (R_{y^2}, (L_y L_y)^{-1}, I). Right: (R_y R_y, L_{y^2}^{-1}, I).
/// Membership in the autotopism group is the statement under test, not a
/// postcondition.
Triple thm_1_1_triple(const LoopTable& loop, int y, Side side);

/// Left: (R_{y^2} L_x^2, L_y^{-2}, L_x^2). Right: (R_y^2, L_{y^2}^{-1} R_x^2,
/// R_x^2). Exponents follow the printed symbols: L_x^2 is L_x applied twice,
/// L_{y^2} is the translation at the element y*y.
Triple cor_1_2_triple(const LoopTable& loop, int x, int y, Side side);

/// The two exponent-4 condition triples (I, L_z^2, J L_z^2 J) and
/// (R_z^2, I, J R_z^2 J); requires two-sided inverses.
std::pair<Triple, Triple> exp4_condition_triples(const LoopTable& loop, int z);

// Triple transforms relative to the loop's inversion map J.
Triple transform_rho(const LoopTable& loop, const Triple& t);     // (V, U, JWJ)
Triple transform_mu(const LoopTable& loop, const Triple& t);      // (W, JVJ, U)
Triple transform_lambda(const LoopTable& loop, const Triple& t);  // (JUJ, W, V)

/// w -> ((w*x)*y) R_{xy}^{-1}; the identity for all x,y exactly when the
/// loop is a group.
Perm right_inner_map(const LoopTable& loop, int x, int y);

}  // namespace loops
