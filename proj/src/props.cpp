#include "loops/props.hpp"

#include <algorithm>

namespace loops {

namespace {

// Scans a three-variable identity in lexicographic (x,y,z) order.
template <typename Eq>
PropertyCheck scan3(const LoopTable& L, Eq&& holds_at) {
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!holds_at(x, y, z)) return {false, std::vector<int>{x, y, z}};
      }
    }
  }
  return {};
}

template <typename Eq>
PropertyCheck scan2(const LoopTable& L, Eq&& holds_at) {
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (!holds_at(x, y)) return {false, std::vector<int>{x, y}};
    }
  }
  return {};
}

bool in_nucleus_at(const LoopTable& L, int a, int y, int z) {
  return L.mul(L.mul(a, y), z) == L.mul(a, L.mul(y, z)) &&
         L.mul(z, L.mul(y, a)) == L.mul(L.mul(z, y), a) &&
         L.mul(L.mul(y, a), z) == L.mul(y, L.mul(a, z));
}

bool commutes_with_all(const LoopTable& L, int a) {
  for (int x = 0; x < L.order(); ++x) {
    if (L.mul(a, x) != L.mul(x, a)) return false;
  }
  return true;
}

bool in_nucleus(const LoopTable& L, int a) {
  for (int y = 0; y < L.order(); ++y) {
    for (int z = 0; z < L.order(); ++z) {
      if (!in_nucleus_at(L, a, y, z)) return false;
    }
  }
  return true;
}

}  // namespace

PropertyCheck is_lc(const LoopTable& L) {
  return scan3(L, [&](int x, int y, int z) {
    return L.mul(L.mul(x, x), L.mul(y, z)) ==
           L.mul(L.mul(x, L.mul(x, y)), z);
  });
}

PropertyCheck is_rc(const LoopTable& L) {
  return scan3(L, [&](int x, int y, int z) {
    return L.mul(L.mul(z, y), L.mul(x, x)) ==
           L.mul(z, L.mul(L.mul(y, x), x));
  });
}

PropertyCheck is_c(const LoopTable& L) {
  return scan3(L, [&](int x, int y, int z) {
    return L.mul(x, L.mul(y, L.mul(y, z))) ==
           L.mul(L.mul(L.mul(x, y), y), z);
  });
}

PropertyCheck is_lc_variant(const LoopTable& L, int form) {
  if (form == 1) {
    return scan3(L, [&](int x, int y, int z) {
      return L.mul(x, L.mul(y, L.mul(y, z))) ==
             L.mul(L.mul(x, L.mul(y, y)), z);
    });
  }
  if (form == 2) {
    return scan3(L, [&](int x, int y, int z) {
      return L.mul(x, L.mul(x, L.mul(y, z))) ==
             L.mul(L.mul(x, L.mul(x, y)), z);
    });
  }
  raise(Errc::bad_entry, "identity form must be 1 or 2");
}

PropertyCheck is_rc_variant(const LoopTable& L, int form) {
  if (form == 1) {
    return scan3(L, [&](int x, int y, int z) {
      return L.mul(L.mul(L.mul(z, y), y), x) ==
             L.mul(z, L.mul(L.mul(y, y), x));
    });
  }
  if (form == 2) {
    return scan3(L, [&](int x, int y, int z) {
      return L.mul(L.mul(L.mul(z, y), x), x) ==
             L.mul(z, L.mul(L.mul(y, x), x));
    });
  }
  raise(Errc::bad_entry, "identity form must be 1 or 2");
}

PropertyCheck is_left_alternative(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    return L.mul(x, L.mul(x, y)) == L.mul(L.mul(x, x), y);
  });
}

PropertyCheck is_right_alternative(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    return L.mul(L.mul(y, x), x) == L.mul(y, L.mul(x, x));
  });
}

PropertyCheck is_flexible(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    return L.mul(x, L.mul(y, x)) == L.mul(L.mul(x, y), x);
  });
}

PropertyCheck is_lip(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    return L.mul(left_inverse(L, x), L.mul(x, y)) == y;
  });
}

PropertyCheck is_rip(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    return L.mul(L.mul(y, x), right_inverse(L, x)) == y;
  });
}

PropertyCheck is_ip(const LoopTable& L) {
  PropertyCheck lip = is_lip(L);
  if (!lip.holds) return lip;
  return is_rip(L);
}

PropertyCheck is_associative(const LoopTable& L) {
  return scan3(L, [&](int x, int y, int z) {
    return L.mul(L.mul(x, y), z) == L.mul(x, L.mul(y, z));
  });
}

std::vector<int> nucleus_left(const LoopTable& L) {
  std::vector<int> out;
  const int n = L.order();
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        ok = L.mul(L.mul(a, x), y) == L.mul(a, L.mul(x, y));
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<int> nucleus_right(const LoopTable& L) {
  std::vector<int> out;
  const int n = L.order();
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        ok = L.mul(y, L.mul(x, a)) == L.mul(L.mul(y, x), a);
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

std::vector<int> nucleus_middle(const LoopTable& L) {
  std::vector<int> out;
  const int n = L.order();
  for (int a = 0; a < n; ++a) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n && ok; ++y) {
        ok = L.mul(L.mul(y, a), x) == L.mul(y, L.mul(a, x));
      }
    }
    if (ok) out.push_back(a);
  }
  return out;
}

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<int> nucleus(const LoopTable& L) {
  return intersect_sorted(intersect_sorted(nucleus_left(L), nucleus_right(L)),
                          nucleus_middle(L));
}

std::vector<int> centrum(const LoopTable& L) {
  std::vector<int> out;
  for (int a = 0; a < L.order(); ++a) {
    if (commutes_with_all(L, a)) out.push_back(a);
  }
  return out;
}

std::vector<int> center(const LoopTable& L) {
  return intersect_sorted(nucleus(L), centrum(L));
}

PropertyCheck is_centrum_square(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    int sq = L.mul(x, x);
    return L.mul(sq, y) == L.mul(y, sq);
  });
}

PropertyCheck is_nuclear_square(const LoopTable& L) {
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    int sq = L.mul(x, x);
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!in_nucleus_at(L, sq, y, z)) {
          return {false, std::vector<int>{x, y, z}};
        }
      }
    }
  }
  return {};
}

PropertyCheck is_central_square(const LoopTable& L) {
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    int sq = L.mul(x, x);
    for (int y = 0; y < n; ++y) {
      if (L.mul(sq, y) != L.mul(y, sq)) return {false, std::vector<int>{x, y}};
    }
    if (in_nucleus(L, sq)) continue;
    for (int y = 0; y < n; ++y) {
      for (int z = 0; z < n; ++z) {
        if (!in_nucleus_at(L, sq, y, z)) {
          return {false, std::vector<int>{x, y, z}};
        }
      }
    }
  }
  return {};
}

PropertyCheck squares_commute_check(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    int xy = L.mul(x, y);
    int yx = L.mul(y, x);
    return L.mul(xy, xy) == L.mul(yx, yx);
  });
}

PropertyCheck cube_antiautomorphism_check(const LoopTable& L) {
  return scan2(L, [&](int x, int y) {
    return power(L, L.mul(x, y), 3) ==
           L.mul(power(L, y, 3), power(L, x, 3));
  });
}

bool PropertyReport::all_hold() const {
  for (const auto& [name, check] : entries) {
    if (!check.holds) return false;
  }
  return true;
}

const std::vector<std::string>& known_property_names() {
  static const std::vector<std::string> names = {
      "lc",  "rc",   "c",   "lalt",           "ralt",
      "flex", "lip",  "rip", "ip",             "centrum-square",
      "central-square", "nuclear-square", "group"};
  return names;
}

PropertyCheck check_property(const LoopTable& L, const std::string& name) {
  if (name == "lc") return is_lc(L);
  if (name == "rc") return is_rc(L);
  if (name == "c") return is_c(L);
  if (name == "lalt") return is_left_alternative(L);
  if (name == "ralt") return is_right_alternative(L);
  if (name == "flex") return is_flexible(L);
  if (name == "lip") return is_lip(L);
  if (name == "rip") return is_rip(L);
  if (name == "ip") return is_ip(L);
  if (name == "centrum-square") return is_centrum_square(L);
  if (name == "central-square") return is_central_square(L);
  if (name == "nuclear-square") return is_nuclear_square(L);
  if (name == "group") return is_associative(L);
  raise(Errc::unknown_property, "'" + name + "'");
}

PropertyReport check_properties(const LoopTable& L,
                                const std::vector<std::string>& names) {
  PropertyReport report;
  const std::vector<std::string>& which =
      names.empty() ? known_property_names() : names;
  report.entries.reserve(which.size());
  for (const std::string& name : which) {
    report.entries.emplace_back(name, check_property(L, name));
  }
  return report;
}

}  // namespace loops
