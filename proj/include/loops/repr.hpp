#pragma once

#include <vector>

#include "loops/core.hpp"

namespace loops {

/// An immutable set of same-degree permutations. Membership is exact
/// image-array equality, never object identity, so closure checks are
/// independent of how a permutation was produced.
class PermSet {
 public:
  static PermSet from(std::vector<Perm> members);

  int degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return members_.size(); }
  bool contains(const Perm& p) const;
  const std::vector<Perm>& members() const noexcept { return members_; }

 private:
  PermSet(int degree, std::vector<Perm> members);

  int degree_;
  std::vector<Perm> members_;  // sorted, deduplicated
};

/// All left translations {L_x | x in L}; exactly n members.
PermSet pi_lambda(const LoopTable& loop);
/// All right translations {R_x | x in L}.
PermSet pi_rho(const LoopTable& loop);

/// The three representation axioms: the identity belongs to the set, for
/// every ordered pair (x,y) exactly one member maps x to y, and two members
/// that agree anywhere are equal.
bool is_representation(const PermSet& set);

/// Left form: R_{y^2} then R_z equals R_{y(yz)} for all y,z.
/// Right form: L_{y^2} then L_z equals L_{(zy)y}.
bool lemma_0_1_closure(const LoopTable& loop, Side side);

/// Left form: the square of every left translation commutes with every
/// right translation. Right form: dual.
bool lemma_0_2_commutation(const LoopTable& loop, Side side);

/// Left form: L_y then L_y then L_x is a member of pi_lambda for all x,y.
/// Right form: dual with right translations.
bool theorem_0_3_closure(const LoopTable& loop, Side side);

struct GatedCheck {
  bool value = false;
  // False only when the standing hypothesis failed and evaluation was
  // forced; such a result carries no claim from the source statement.
  bool hypothesis_met = true;
};

/// Left form (requires an LC-loop): R_z then R_{y^2} is a member of pi_rho
/// for all y,z. Right form (requires RC): dual. Raises hypothesis_not_met
/// when the standing hypothesis fails, unless force is set.
GatedCheck theorem_0_4_closure(const LoopTable& loop, Side side,
                               bool force = false);

/// Conjunction of the two closure conditions characterizing centrum-square
/// LC(RC)-loops: the theorem_0_4 membership form and the lemma_0_1
/// equality form, both evaluated unconditionally.
bool corollary_0_5_check(const LoopTable& loop, Side side);

}  // namespace loops
