#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "loops/core.hpp"

namespace loops {

/// Verdict of one universally-quantified identity check. When the identity
/// fails, `witness` holds the lexicographically first falsifying tuple in
/// scan order; its meaning per predicate is documented at each checker (two
/// entries for two-variable identities, three for three-variable ones).
struct PropertyCheck {
  bool holds = true;
  std::optional<std::vector<int>> witness;

  explicit operator bool() const { return holds; }
};

// Bol-Moufang style identities. Witnesses are {x,y,z}.
PropertyCheck is_lc(const LoopTable& loop);   // (xx)(yz) = (x(xy))z
PropertyCheck is_rc(const LoopTable& loop);   // (zy)(xx) = z((yx)x)
PropertyCheck is_c(const LoopTable& loop);    // x(y(yz)) = ((xy)y)z

// Equivalent forms of the LC identity: form 1 is x(y.yz) = (x.yy)z,
// form 2 is x(x.yz) = (x.xy)z. The RC duals are (zy.y)x = z(yy.x) and
// (zy.x)x = z(yx.x).
PropertyCheck is_lc_variant(const LoopTable& loop, int form);
PropertyCheck is_rc_variant(const LoopTable& loop, int form);

// Witnesses are {x,y}.
PropertyCheck is_left_alternative(const LoopTable& loop);   // x(xy) = (xx)y
PropertyCheck is_right_alternative(const LoopTable& loop);  // (yx)x = y(xx)
PropertyCheck is_flexible(const LoopTable& loop);           // x(yx) = (xy)x

// Inverse properties; x^l is the left inverse, x^r the right one.
PropertyCheck is_lip(const LoopTable& loop);  // x^l(xy) = y
PropertyCheck is_rip(const LoopTable& loop);  // (yx)x^r = y
PropertyCheck is_ip(const LoopTable& loop);   // both

PropertyCheck is_associative(const LoopTable& loop);  // (xy)z = x(yz)

// Element sets, sorted ascending; every one of them contains 0.
std::vector<int> nucleus_left(const LoopTable& loop);
std::vector<int> nucleus_right(const LoopTable& loop);
std::vector<int> nucleus_middle(const LoopTable& loop);
std::vector<int> nucleus(const LoopTable& loop);
std::vector<int> centrum(const LoopTable& loop);
std::vector<int> center(const LoopTable& loop);

/// x^2 commutes with everything. Witness {x,y}: (xx)y != y(xx).
PropertyCheck is_centrum_square(const LoopTable& loop);
/// x^2 lies in the center. Witness {x,y} (commutation failure) or {x,y,z}
/// (a nucleus equation failure at those elements).
PropertyCheck is_central_square(const LoopTable& loop);
/// x^2 lies in the nucleus. Witness {x,y,z}.
PropertyCheck is_nuclear_square(const LoopTable& loop);

/// (xy)^2 = (yx)^2. Witness {x,y}.
PropertyCheck squares_commute_check(const LoopTable& loop);
/// (xy)^3 = y^3 x^3, cubes taken with the toolkit's power convention.
/// Witness {x,y}.
PropertyCheck cube_antiautomorphism_check(const LoopTable& loop);

/// Named-property evaluation for report surfaces. Names: lc, rc, c, lalt,
/// ralt, flex, lip, rip, ip, centrum-square, central-square,
/// nuclear-square, group.
struct PropertyReport {
  std::vector<std::pair<std::string, PropertyCheck>> entries;

  bool all_hold() const;
};

const std::vector<std::string>& known_property_names();
PropertyCheck check_property(const LoopTable& loop, const std::string& name);
PropertyReport check_properties(const LoopTable& loop,
                                const std::vector<std::string>& names);

}  // namespace loops
