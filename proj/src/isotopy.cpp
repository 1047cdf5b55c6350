#include "loops/isotopy.hpp"

#include <algorithm>
#include <numeric>

#include "loops/props.hpp"

namespace loops {

namespace {

void check_latin(const std::vector<std::uint8_t>& cells, int n) {
  for (int i = 0; i < n; ++i) {
    std::uint32_t row_seen = 0;
    std::uint32_t col_seen = 0;
    for (int j = 0; j < n; ++j) {
      row_seen |= 1u << cells[static_cast<std::size_t>(i) * n + j];
      col_seen |= 1u << cells[static_cast<std::size_t>(j) * n + i];
    }
    const std::uint32_t full = (1u << n) - 1;
    if (row_seen != full || col_seen != full) {
      raise(Errc::not_latin, "row or column " + std::to_string(i) +
                                 " is not a permutation");
    }
  }
}

}  // namespace

QuasigroupTable::QuasigroupTable(int n, std::vector<std::uint8_t> cells,
                                 std::string origin)
    : n_(n), cells_(std::move(cells)), origin_(std::move(origin)) {}

QuasigroupTable QuasigroupTable::from_cells(std::vector<std::uint8_t> cells,
                                            int n, std::string origin) {
  if (n < 1 || n > kMaxOrder) {
    raise(Errc::order_too_large, "order " + std::to_string(n));
  }
  if (cells.size() != static_cast<std::size_t>(n) * n) {
    raise(Errc::bad_entry, "cell count does not match order");
  }
  for (std::uint8_t v : cells) {
    if (v >= n) raise(Errc::bad_entry, "entry out of range");
  }
  check_latin(cells, n);
  return QuasigroupTable(n, std::move(cells), std::move(origin));
}

QuasigroupTable isotope(const LoopTable& L, const Triple& t) {
  if (t.degree() != L.order()) {
    raise(Errc::degree_mismatch,
          "triple degree " + std::to_string(t.degree()) +
              " does not match order " + std::to_string(L.order()));
  }
  const int n = L.order();
  Perm u_inv = t.u.inverse();
  Perm v_inv = t.v.inverse();
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      cells[static_cast<std::size_t>(a) * n + b] =
          static_cast<std::uint8_t>(t.w(L.mul(u_inv(a), v_inv(b))));
    }
  }
  return QuasigroupTable::from_cells(
      std::move(cells), n, "isotope(" + L.label() + "; " + to_string(t) + ")");
}

QuasigroupTable principal_isotope(const LoopTable& L, int a, int b) {
  if (a < 0 || a >= L.order() || b < 0 || b >= L.order()) {
    raise(Errc::index_out_of_range, "principal isotope needs a,b < order");
  }
  Triple t(right_translation(L, a), left_translation(L, b),
           Perm::identity(L.order()));
  QuasigroupTable q = isotope(L, t);
  QuasigroupTable named = QuasigroupTable::from_cells(
      q.cells(), q.order(),
      "principal_isotope(" + L.label() + "; a=" + std::to_string(a) +
          ", b=" + std::to_string(b) + ")");
  // The construction forces b*a as a two-sided identity.
  std::optional<int> e = two_sided_identity(named);
  if (!e || *e != L.mul(b, a)) {
    raise(Errc::bad_entry, "principal isotope lost its identity element");
  }
  return named;
}

std::optional<int> two_sided_identity(const QuasigroupTable& q) {
  const int n = q.order();
  for (int u = 0; u < n; ++u) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j) {
      ok = q.mul(u, j) == j && q.mul(j, u) == j;
    }
    if (ok) return u;
  }
  return std::nullopt;
}

std::optional<LoopTable> normalize_to_loop(const QuasigroupTable& q) {
  std::optional<int> e = two_sided_identity(q);
  if (!e) return std::nullopt;
  const int n = q.order();
  const int u = *e;
  auto swap01 = [u](int x) { return x == 0 ? u : (x == u ? 0 : x); };
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      cells[static_cast<std::size_t>(i) * n + j] = static_cast<std::uint8_t>(
          swap01(q.mul(swap01(i), swap01(j))));
    }
  }
  return validate_table(std::move(cells), n, q.origin());
}

bool are_isomorphic(const LoopTable& a, const LoopTable& b) {
  if (a.order() != b.order()) return false;
  const int n = a.order();
  if (n > 6) {
    raise(Errc::order_too_large, "isomorphism search is capped at order 6");
  }
  if (n == 1) return true;
  // An isomorphism fixes the identity, so permute 1..n-1 only.
  std::vector<int> f(static_cast<std::size_t>(n));
  std::iota(f.begin(), f.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      for (int y = 0; y < n; ++y) {
        if (f[static_cast<std::size_t>(a.mul(x, y))] !=
            b.mul(f[static_cast<std::size_t>(x)], f[static_cast<std::size_t>(y)])) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return true;
  } while (std::next_permutation(f.begin() + 1, f.end()));
  return false;
}

namespace {

std::vector<int> triple_order_multiset(const std::vector<Triple>& group) {
  std::vector<int> orders;
  orders.reserve(group.size());
  for (const Triple& t : group) orders.push_back(t.order());
  std::sort(orders.begin(), orders.end());
  return orders;
}

}  // namespace

bool aut_invariance_check(const LoopTable& L, int a, int b, int cap) {
  std::optional<LoopTable> h = normalize_to_loop(principal_isotope(L, a, b));
  if (!h) raise(Errc::bad_entry, "principal isotope lost its identity element");
  std::vector<Triple> aut_l = autotopism_group(L, cap);
  std::vector<Triple> aut_h = autotopism_group(*h, cap);
  return aut_l.size() == aut_h.size() &&
         triple_order_multiset(aut_l) == triple_order_multiset(aut_h);
}

bool is_isotopism(const LoopTable& g, const LoopTable& h, const Triple& t) {
  if (t.degree() != g.order() || g.order() != h.order()) {
    raise(Errc::degree_mismatch, "isotopism degrees do not match");
  }
  const int n = g.order();
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (h.mul(t.u(x), t.v(y)) != t.w(g.mul(x, y))) return false;
    }
  }
  return true;
}

const char* harness_verdict_name(HarnessVerdict v) {
  switch (v) {
    case HarnessVerdict::holds: return "holds";
    case HarnessVerdict::violated: return "violated";
    case HarnessVerdict::vacuous: return "vacuous";
  }
  return "unknown";
}

namespace {

HarnessReport run_harness(const LoopTable& g, const LoopTable& h,
                          const Triple& t, Side side,
                          const PropertyCheck& g_condition,
                          const char* g_condition_name) {
  if (g.order() != h.order() || t.degree() != g.order()) {
    raise(Errc::degree_mismatch, "harness degrees do not match");
  }
  HarnessReport report;
  auto fail_hypothesis = [&](const std::string& why) {
    report.hypotheses_met = false;
    report.verdict = HarnessVerdict::vacuous;
    report.detail = "hypothesis not met: " + why;
    return report;
  };

  bool shape_ok = side == Side::left ? t.v == t.w : t.u == t.w;
  if (!shape_ok) {
    return fail_hypothesis(side == Side::left ? "triple is not (A,B,B)"
                                              : "triple is not (A,B,A)");
  }
  if (!is_isotopism(g, h, t)) {
    return fail_hypothesis("triple is not an isotopism of G onto H");
  }
  if (!g_condition.holds) {
    return fail_hypothesis(std::string("G is not ") + g_condition_name);
  }
  if (!is_central_square(g).holds) {
    return fail_hypothesis("G is not central square");
  }
  if (!is_left_alternative(h).holds || !is_right_alternative(h).holds) {
    return fail_hypothesis("H is not alternative");
  }
  if (!is_central_square(h).holds) {
    return fail_hypothesis("H is not central square");
  }

  report.hypotheses_met = true;
  PropertyCheck conclusion = is_c(h);
  report.conclusion = conclusion.holds;
  if (conclusion.holds) {
    report.verdict = HarnessVerdict::holds;
    report.detail = "H is a C-loop";
  } else {
    report.verdict = HarnessVerdict::violated;
    const auto& w = *conclusion.witness;
    report.detail = "H fails the C identity at (" + std::to_string(w[0]) +
                    "," + std::to_string(w[1]) + "," + std::to_string(w[2]) +
                    ")";
  }
  return report;
}

PropertyCheck conjunction(PropertyCheck a, const PropertyCheck& b) {
  if (!a.holds) return a;
  return b;
}

}  // namespace

HarnessReport thm_1_5_harness(const LoopTable& g, const LoopTable& h,
                              const Triple& t, Side side) {
  PropertyCheck g_condition = side == Side::left ? is_lc(g) : is_rc(g);
  const char* name = side == Side::left ? "an LC-loop" : "an RC-loop";
  return run_harness(g, h, t, side, g_condition, name);
}

HarnessReport cor_1_6_harness(const LoopTable& g, const LoopTable& h,
                              const Triple& t, Side side) {
  PropertyCheck g_condition =
      side == Side::left ? conjunction(is_rc(g), is_left_alternative(g))
                         : conjunction(is_lc(g), is_right_alternative(g));
  const char* name = side == Side::left ? "a left-alternative RC-loop"
                                        : "a right-alternative LC-loop";
  return run_harness(g, h, t, side, g_condition, name);
}

}  // namespace loops
