#include "loops/autotopy.hpp"

#include <algorithm>
#include <numeric>

namespace loops {

Triple::Triple(Perm u_, Perm v_, Perm w_)
    : u(std::move(u_)), v(std::move(v_)), w(std::move(w_)) {
  if (u.degree() != v.degree() || u.degree() != w.degree()) {
    raise(Errc::degree_mismatch, "triple components have mixed degrees");
  }
}

Triple Triple::identity(int degree) {
  return Triple(Perm::identity(degree), Perm::identity(degree),
                Perm::identity(degree));
}

Triple Triple::then(const Triple& next) const {
  return Triple(u.then(next.u), v.then(next.v), w.then(next.w));
}

Triple Triple::inverse() const {
  return Triple(u.inverse(), v.inverse(), w.inverse());
}

bool Triple::is_identity() const {
  return u.is_identity() && v.is_identity() && w.is_identity();
}

int Triple::order() const {
  return static_cast<int>(std::lcm<std::int64_t>(
      std::lcm<std::int64_t>(u.order(), v.order()), w.order()));
}

std::string to_string(const Triple& t) {
  return to_string(t.u) + " | " + to_string(t.v) + " | " + to_string(t.w);
}

AutotopismCheck is_autotopism(const LoopTable& L, const Triple& t) {
  if (t.degree() != L.order()) {
    raise(Errc::degree_mismatch, "triple degree " + std::to_string(t.degree()) +
                                     " does not match order " +
                                     std::to_string(L.order()));
  }
  const int n = L.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (L.mul(t.u(x), t.v(y)) != t.w(L.mul(x, y))) {
        return {false, std::make_pair(x, y)};
      }
    }
  }
  return {};
}

namespace {

void require_cap(const LoopTable& L, int cap) {
  if (L.order() > cap) {
    raise(Errc::order_too_large, "order " + std::to_string(L.order()) +
                                     " exceeds the search cap " +
                                     std::to_string(cap));
  }
}

std::vector<std::uint8_t> iota_images(int n) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), static_cast<std::uint8_t>(0));
  return img;
}

// Closure/identity/inverse self-check; the composition part is skipped for
// very large groups (it is quadratic and only reachable above order 6).
void check_group_axioms(const std::vector<Triple>& sorted) {
  if (sorted.empty()) {
    raise(Errc::bad_entry, "autotopism set lost the identity triple");
  }
  const int n = sorted.front().degree();
  if (!std::binary_search(sorted.begin(), sorted.end(), Triple::identity(n))) {
    raise(Errc::bad_entry, "autotopism set lost the identity triple");
  }
  for (const Triple& t : sorted) {
    if (!std::binary_search(sorted.begin(), sorted.end(), t.inverse())) {
      raise(Errc::bad_entry, "autotopism set not closed under inverse");
    }
  }
  if (sorted.size() > 5000) return;
  for (const Triple& a : sorted) {
    for (const Triple& b : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), a.then(b))) {
        raise(Errc::bad_entry, "autotopism set not closed under composition");
      }
    }
  }
}

}  // namespace

std::vector<Triple> autotopism_group(const LoopTable& L, int cap) {
  require_cap(L, cap);
  const int n = L.order();
  // Inverse rows: left_div[a][t] = the b with a*b = t.
  std::vector<std::uint8_t> left_div(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      left_div[static_cast<std::size_t>(a) * n + L.mul(a, b)] =
          static_cast<std::uint8_t>(b);
    }
  }

  std::vector<Triple> found;
  std::vector<std::uint8_t> u = iota_images(n);
  std::vector<std::uint8_t> w(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> v(static_cast<std::size_t>(n));
  do {
    for (int v0 = 0; v0 < n; ++v0) {
      // W = U then R_{v0}; V = W then L_{U(0)}^{-1}.
      for (int x = 0; x < n; ++x) {
        w[static_cast<std::size_t>(x)] =
            static_cast<std::uint8_t>(L.mul(u[static_cast<std::size_t>(x)], v0));
      }
      const std::size_t u0_row = static_cast<std::size_t>(u[0]) * n;
      for (int y = 0; y < n; ++y) {
        v[static_cast<std::size_t>(y)] = left_div[u0_row + w[static_cast<std::size_t>(y)]];
      }
      bool ok = true;
      for (int x = 0; x < n && ok; ++x) {
        const int ux = u[static_cast<std::size_t>(x)];
        for (int y = 0; y < n; ++y) {
          if (L.mul(ux, v[static_cast<std::size_t>(y)]) !=
              w[static_cast<std::size_t>(L.mul(x, y))]) {
            ok = false;
            break;
          }
        }
      }
      if (ok) found.emplace_back(Perm(u), Perm(v), Perm(w));
    }
  } while (std::next_permutation(u.begin(), u.end()));

  std::sort(found.begin(), found.end());
  check_group_axioms(found);
  return found;
}

std::vector<MuRegularEntry> mu_regular_set(const LoopTable& L, int cap) {
  require_cap(L, cap);
  const int n = L.order();
  std::vector<MuRegularEntry> found;
  std::vector<std::uint8_t> u = iota_images(n);
  do {
    // The defining relation at x=0 pins the adjoint: V = L_{U(0)}.
    const int u0 = u[0];
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      const int ux = u[static_cast<std::size_t>(x)];
      for (int y = 0; y < n; ++y) {
        if (L.mul(ux, y) != L.mul(x, L.mul(u0, y))) {
          ok = false;
          break;
        }
      }
    }
    if (ok) found.push_back({Perm(u), left_translation(L, u0)});
  } while (std::next_permutation(u.begin(), u.end()));

  std::sort(found.begin(), found.end());

  // Desk-scale subgroup check: identity, inverses, composition. A composite
  // U1 then U2 has adjoint V2 then V1.
  auto contains = [&](const Perm& cu, const Perm& ca) {
    return mu_regular_contains(found, cu, ca);
  };
  if (!contains(Perm::identity(n), Perm::identity(n))) {
    raise(Errc::bad_entry, "mu-regular set lost the identity");
  }
  for (const MuRegularEntry& e : found) {
    if (!contains(e.u.inverse(), e.adjoint.inverse())) {
      raise(Errc::bad_entry, "mu-regular set not closed under inverse");
    }
  }
  for (const MuRegularEntry& a : found) {
    for (const MuRegularEntry& b : found) {
      if (!contains(a.u.then(b.u), b.adjoint.then(a.adjoint))) {
        raise(Errc::bad_entry, "mu-regular set not closed under composition");
      }
    }
  }
  return found;
}

bool mu_regular_contains(const std::vector<MuRegularEntry>& entries,
                         const Perm& u, const Perm& adjoint) {
  MuRegularEntry probe{u, adjoint};
  return std::binary_search(entries.begin(), entries.end(), probe);
}

namespace {

void require_element(const LoopTable& L, int x, const char* what) {
  if (x < 0 || x >= L.order()) {
    raise(Errc::index_out_of_range,
          std::string(what) + " " + std::to_string(x) +
              " out of range for order " + std::to_string(L.order()));
  }
}

}  // namespace

Triple thm_1_1_triple(const LoopTable& L, int y, Side side) {
  require_element(L, y, "element");
  const int yy = L.mul(y, y);
  if (side == Side::left) {
    Perm ly = left_translation(L, y);
    return Triple(right_translation(L, yy), ly.then(ly).inverse(),
                  Perm::identity(L.order()));
  }
  Perm ry = right_translation(L, y);
  return Triple(ry.then(ry), left_translation(L, yy).inverse(),
                Perm::identity(L.order()));
}

Triple cor_1_2_triple(const LoopTable& L, int x, int y, Side side) {
  require_element(L, x, "element");
  require_element(L, y, "element");
  const int yy = L.mul(y, y);
  if (side == Side::left) {
    Perm lx = left_translation(L, x);
    Perm lx2 = lx.then(lx);
    Perm ly = left_translation(L, y);
    return Triple(right_translation(L, yy).then(lx2), ly.then(ly).inverse(),
                  lx2);
  }
  Perm rx = right_translation(L, x);
  Perm rx2 = rx.then(rx);
  Perm ry = right_translation(L, y);
  return Triple(ry.then(ry), left_translation(L, yy).inverse().then(rx2), rx2);
}

std::pair<Triple, Triple> exp4_condition_triples(const LoopTable& L, int z) {
  require_element(L, z, "element");
  Perm j = j_map(L);
  Perm lz = left_translation(L, z);
  Perm rz = right_translation(L, z);
  Perm lz2 = lz.then(lz);
  Perm rz2 = rz.then(rz);
  Perm id = Perm::identity(L.order());
  Triple first(id, lz2, j.then(lz2).then(j));
  Triple second(rz2, id, j.then(rz2).then(j));
  return {first, second};
}

Triple transform_rho(const LoopTable& L, const Triple& t) {
  Perm j = j_map(L);
  return Triple(t.v, t.u, j.then(t.w).then(j));
}

Triple transform_mu(const LoopTable& L, const Triple& t) {
  Perm j = j_map(L);
  return Triple(t.w, j.then(t.v).then(j), t.u);
}

Triple transform_lambda(const LoopTable& L, const Triple& t) {
  Perm j = j_map(L);
  return Triple(j.then(t.u).then(j), t.w, t.v);
}

Perm right_inner_map(const LoopTable& L, int x, int y) {
  require_element(L, x, "element");
  require_element(L, y, "element");
  return right_translation(L, x)
      .then(right_translation(L, y))
      .then(right_translation(L, L.mul(x, y)).inverse());
}

}  // namespace loops
