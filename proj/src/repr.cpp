#include "loops/repr.hpp"

#include <algorithm>

#include "loops/props.hpp"

namespace loops {

PermSet::PermSet(int degree, std::vector<Perm> members)
    : degree_(degree), members_(std::move(members)) {}

PermSet PermSet::from(std::vector<Perm> members) {
  if (members.empty()) raise(Errc::bad_entry, "empty permutation set");
  int degree = members.front().degree();
  for (const Perm& p : members) {
    if (p.degree() != degree) {
      raise(Errc::degree_mismatch, "mixed degrees in permutation set");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return PermSet(degree, std::move(members));
}

bool PermSet::contains(const Perm& p) const {
  return std::binary_search(members_.begin(), members_.end(), p);
}

PermSet pi_lambda(const LoopTable& L) {
  std::vector<Perm> members;
  members.reserve(static_cast<std::size_t>(L.order()));
  for (int x = 0; x < L.order(); ++x) members.push_back(left_translation(L, x));
  return PermSet::from(std::move(members));
}

PermSet pi_rho(const LoopTable& L) {
  std::vector<Perm> members;
  members.reserve(static_cast<std::size_t>(L.order()));
  for (int x = 0; x < L.order(); ++x) members.push_back(right_translation(L, x));
  return PermSet::from(std::move(members));
}

bool is_representation(const PermSet& set) {
  const int n = set.degree();
  // (i) identity mapping belongs to the set
  if (!set.contains(Perm::identity(n))) return false;
  // (ii) sharp transitivity: exactly one member sends x to y, per pair
  std::vector<int> hits(static_cast<std::size_t>(n) * n, 0);
  for (const Perm& p : set.members()) {
    for (int x = 0; x < n; ++x) ++hits[static_cast<std::size_t>(x) * n + p(x)];
  }
  for (int count : hits) {
    if (count != 1) return false;
  }
  // (iii) two members agreeing at one point are equal
  const auto& members = set.members();
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      for (int x = 0; x < n; ++x) {
        if (members[a](x) == members[b](x)) return false;
      }
    }
  }
  return true;
}

bool lemma_0_1_closure(const LoopTable& L, Side side) {
  const int n = L.order();
  for (int y = 0; y < n; ++y) {
    const int yy = L.mul(y, y);
    for (int z = 0; z < n; ++z) {
      if (side == Side::left) {
        Perm lhs = right_translation(L, yy).then(right_translation(L, z));
        Perm rhs = right_translation(L, L.mul(y, L.mul(y, z)));
        if (lhs != rhs) return false;
      } else {
        Perm lhs = left_translation(L, yy).then(left_translation(L, z));
        Perm rhs = left_translation(L, L.mul(L.mul(z, y), y));
        if (lhs != rhs) return false;
      }
    }
  }
  return true;
}

bool lemma_0_2_commutation(const LoopTable& L, Side side) {
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    Perm square = side == Side::left
                      ? left_translation(L, x).then(left_translation(L, x))
                      : right_translation(L, x).then(right_translation(L, x));
    for (int z = 0; z < n; ++z) {
      Perm other = side == Side::left ? right_translation(L, z)
                                      : left_translation(L, z);
      if (other.then(square) != square.then(other)) return false;
    }
  }
  return true;
}

bool theorem_0_3_closure(const LoopTable& L, Side side) {
  const PermSet& pool = side == Side::left ? pi_lambda(L) : pi_rho(L);
  const int n = L.order();
  for (int y = 0; y < n; ++y) {
    Perm square = side == Side::left
                      ? left_translation(L, y).then(left_translation(L, y))
                      : right_translation(L, y).then(right_translation(L, y));
    for (int x = 0; x < n; ++x) {
      Perm composite = side == Side::left
                           ? square.then(left_translation(L, x))
                           : square.then(right_translation(L, x));
      if (!pool.contains(composite)) return false;
    }
  }
  return true;
}

namespace {

// The membership scan of the 0:4 characterization, without the standing
// LC/RC hypothesis.
bool theorem_0_4_scan(const LoopTable& L, Side side) {
  const PermSet pool = side == Side::left ? pi_rho(L) : pi_lambda(L);
  const int n = L.order();
  for (int y = 0; y < n; ++y) {
    const int yy = L.mul(y, y);
    Perm square = side == Side::left ? right_translation(L, yy)
                                     : left_translation(L, yy);
    for (int z = 0; z < n; ++z) {
      Perm first = side == Side::left ? right_translation(L, z)
                                      : left_translation(L, z);
      if (!pool.contains(first.then(square))) return false;
    }
  }
  return true;
}

}  // namespace

GatedCheck theorem_0_4_closure(const LoopTable& L, Side side, bool force) {
  bool hypothesis =
      side == Side::left ? is_lc(L).holds : is_rc(L).holds;
  if (!hypothesis && !force) {
    raise(Errc::hypothesis_not_met,
          std::string("loop is not an ") +
              (side == Side::left ? "LC" : "RC") + "-loop");
  }
  return {theorem_0_4_scan(L, side), hypothesis};
}

bool corollary_0_5_check(const LoopTable& L, Side side) {
  return theorem_0_4_scan(L, side) && lemma_0_1_closure(L, side);
}

}  // namespace loops
