#include "loops/registry.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "loops/autotopy.hpp"
#include "loops/enumerate.hpp"
#include "loops/isotopy.hpp"
#include "loops/props.hpp"
#include "loops/repr.hpp"

namespace loops {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::vacuous: return "vacuous";
    case Verdict::refutation_not_found: return "refutation-not-found";
  }
  return "unknown";
}

const char* theorem_kind_name(TheoremKind k) {
  switch (k) {
    case TheoremKind::iff: return "iff";
    case TheoremKind::implication: return "implication";
    case TheoremKind::negative_existence: return "negative-existence";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Building blocks
// ---------------------------------------------------------------------------

ImplicationCheck::ImplicationCheck(TheoremReport seed, TablePredicate hypothesis,
                                   ConclusionProbe conclusion_failure)
    : report_(std::move(seed)),
      hypothesis_(std::move(hypothesis)),
      conclusion_failure_(std::move(conclusion_failure)) {}

void ImplicationCheck::visit(const LoopTable& table) {
  ++report_.tables_swept;
  if (hypothesis_ && !hypothesis_(table)) return;
  ++report_.hypothesis_satisfying;
  std::optional<std::string> failure = conclusion_failure_(table);
  if (!failure) {
    ++report_.conclusion_satisfying;
  } else if (!report_.witness) {
    report_.witness = TheoremWitness{table, table.label() + ": " + *failure};
  }
}

TheoremReport ImplicationCheck::finish() {
  if (report_.witness) {
    report_.verdict = Verdict::violated;
  } else if (report_.hypothesis_satisfying == 0) {
    report_.verdict = Verdict::vacuous;
  } else {
    report_.verdict = Verdict::holds;
  }
  return report_;
}

IffCheck::IffCheck(TheoremReport seed, TablePredicate gate, TablePredicate left,
                   TablePredicate right)
    : report_(std::move(seed)),
      gate_(std::move(gate)),
      left_(std::move(left)),
      right_(std::move(right)) {}

void IffCheck::visit(const LoopTable& table) {
  ++report_.tables_swept;
  if (gate_ && !gate_(table)) return;
  bool l = left_(table);
  bool r = right_(table);
  if (l) ++report_.hypothesis_satisfying;
  if (r) ++report_.conclusion_satisfying;
  if (l && !r) {
    ++forward_failures_;
    if (!report_.witness) {
      report_.witness = TheoremWitness{
          table, table.label() + ": forward direction fails (left side holds, "
                                 "right side does not)"};
    }
  } else if (r && !l) {
    ++backward_failures_;
    if (!report_.witness) {
      report_.witness = TheoremWitness{
          table, table.label() + ": backward direction fails (right side "
                                 "holds, left side does not)"};
    }
  }
}

TheoremReport IffCheck::finish() {
  if (forward_failures_ > 0 || backward_failures_ > 0) {
    report_.verdict = Verdict::violated;
    std::string detail = "forward failures=" + std::to_string(forward_failures_) +
                         " backward failures=" + std::to_string(backward_failures_);
    report_.note = report_.note.empty() ? detail : report_.note + "; " + detail;
  } else if (report_.tables_swept == 0) {
    report_.verdict = Verdict::vacuous;
  } else {
    report_.verdict = Verdict::holds;
  }
  return report_;
}

WitnessSearchCheck::WitnessSearchCheck(TheoremReport seed, TablePredicate in_scope,
                                       ConclusionProbe witness_probe)
    : report_(std::move(seed)),
      in_scope_(std::move(in_scope)),
      witness_probe_(std::move(witness_probe)) {}

void WitnessSearchCheck::visit(const LoopTable& table) {
  ++report_.tables_swept;
  if (report_.witness) return;
  if (in_scope_ && !in_scope_(table)) return;
  ++report_.hypothesis_satisfying;
  std::optional<std::string> found = witness_probe_(table);
  if (found) {
    report_.witness = TheoremWitness{table, table.label() + ": " + *found};
  }
}

TheoremReport WitnessSearchCheck::finish() {
  report_.verdict =
      report_.witness ? Verdict::holds : Verdict::refutation_not_found;
  if (!report_.witness) {
    std::string detail = "no witness among " +
                         std::to_string(report_.hypothesis_satisfying) +
                         " in-scope tables";
    report_.note = report_.note.empty() ? detail : report_.note + "; " + detail;
  }
  return report_;
}

TheoremReport run_check(TheoremCheck& check, int n_max) {
  for (int n = 1; n <= n_max; ++n) {
    enumerate_loops(n, {}, [&](const LoopTable& t) { check.visit(t); });
  }
  return check.finish();
}

namespace {

TheoremReport seed_report(const TheoremInfo& info, int max_order_swept) {
  TheoremReport report;
  report.id = info.id;
  report.kind = info.kind;
  report.max_order_swept = max_order_swept;
  return report;
}

// Runs dual (or more) sub-checks as one statement; the numeric counts come
// from the first part and the note carries the rest.
class CompositeCheck final : public TheoremCheck {
 public:
  struct Part {
    std::string name;
    std::unique_ptr<TheoremCheck> check;
  };

  CompositeCheck(TheoremReport seed, std::vector<Part> parts)
      : seed_(std::move(seed)), parts_(std::move(parts)) {}

  void visit(const LoopTable& table) override {
    for (auto& part : parts_) part.check->visit(table);
  }

  TheoremReport finish() override {
    TheoremReport out = seed_;
    bool any_holds = false;
    std::string note;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      TheoremReport sub = parts_[i].check->finish();
      if (i == 0) {
        out.tables_swept = sub.tables_swept;
        out.hypothesis_satisfying = sub.hypothesis_satisfying;
        out.conclusion_satisfying = sub.conclusion_satisfying;
      }
      if (sub.verdict == Verdict::violated && !out.witness) {
        out.witness = sub.witness;
      }
      if (sub.verdict == Verdict::violated) out.verdict = Verdict::violated;
      if (sub.verdict == Verdict::holds) any_holds = true;
      if (!note.empty()) note += "; ";
      note += parts_[i].name + ": " + verdict_name(sub.verdict) +
              " hyp=" + std::to_string(sub.hypothesis_satisfying) +
              " concl=" + std::to_string(sub.conclusion_satisfying);
      if (!sub.note.empty()) note += " (" + sub.note + ")";
    }
    if (out.verdict != Verdict::violated) {
      out.verdict = any_holds ? Verdict::holds : Verdict::vacuous;
    }
    out.note = out.note.empty() ? note : out.note + "; " + note;
    return out;
  }

 private:
  TheoremReport seed_;
  std::vector<Part> parts_;
};

// ---------------------------------------------------------------------------
// Shared predicates
// ---------------------------------------------------------------------------

bool pred_lc(const LoopTable& t) { return is_lc(t).holds; }
bool pred_rc(const LoopTable& t) { return is_rc(t).holds; }
bool pred_c(const LoopTable& t) { return is_c(t).holds; }

bool thm11_all(const LoopTable& t, Side side) {
  for (int y = 0; y < t.order(); ++y) {
    if (!is_autotopism(t, thm_1_1_triple(t, y, side)).holds) return false;
  }
  return true;
}

std::optional<std::string> cor12_failure(const LoopTable& t, Side side) {
  for (int x = 0; x < t.order(); ++x) {
    for (int y = 0; y < t.order(); ++y) {
      if (!is_autotopism(t, cor_1_2_triple(t, x, y, side)).holds) {
        return "composite triple at x=" + std::to_string(x) +
               " y=" + std::to_string(y) + " (" + side_name(side) +
               " form) is not an autotopism";
      }
    }
  }
  return std::nullopt;
}

// Both inversion-conjugate conditions. which: 0 = (I, L_z^2, J L_z^2 J),
// 1 = (R_z^2, I, J R_z^2 J), 2 = both.
bool exp4_conditions_hold(const LoopTable& t, int which) {
  if (!has_two_sided_inverses(t)) return false;
  for (int z = 0; z < t.order(); ++z) {
    auto [first, second] = exp4_condition_triples(t, z);
    if (which != 1 && !is_autotopism(t, first).holds) return false;
    if (which != 0 && !is_autotopism(t, second).holds) return false;
  }
  return true;
}

bool exponent_divides_4(const LoopTable& t) {
  ExponentResult e = exponent(t);
  return e.value && 4 % *e.value == 0;
}

std::vector<int> perm_order_multiset(const std::vector<MuRegularEntry>& entries,
                                     bool adjoints) {
  std::vector<int> out;
  out.reserve(entries.size());
  for (const auto& e : entries) {
    out.push_back(adjoints ? e.adjoint.order() : e.u.order());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> triple_order_multiset(const std::vector<Triple>& group) {
  std::vector<int> out;
  out.reserve(group.size());
  for (const Triple& t : group) out.push_back(t.order());
  std::sort(out.begin(), out.end());
  return out;
}

Perm swap_perm(int n, int a) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
  std::swap(img[0], img[static_cast<std::size_t>(a)]);
  return Perm(std::move(img));
}

// The principal isotope at (a,0) or (0,b), renormalized so 0 is the
// identity again, together with the induced isotopism triple. For b=0 the
// triple is (R_a s, s, s) with s the transposition (0 a); for a=0 it is
// (s, L_b s, s) with s = (0 b). These realize the (A,B,B) and (A,B,A)
// shapes the isotope harnesses quantify over.
struct InducedIsotope {
  LoopTable h;
  Triple t;
};

InducedIsotope induced_left(const LoopTable& g, int a) {
  std::optional<LoopTable> h = normalize_to_loop(principal_isotope(g, a, 0));
  Perm s = swap_perm(g.order(), a);
  return {std::move(*h), Triple(right_translation(g, a).then(s), s, s)};
}

InducedIsotope induced_right(const LoopTable& g, int b) {
  std::optional<LoopTable> h = normalize_to_loop(principal_isotope(g, 0, b));
  Perm s = swap_perm(g.order(), b);
  return {std::move(*h), Triple(s, left_translation(g, b).then(s), s)};
}

// ---------------------------------------------------------------------------
// Custom sweeps
// ---------------------------------------------------------------------------

// LC(RC,C) iff the squared translations are mu-regular with the printed
// adjoints; all three forms share one mu-regular set per table.
class MuRegularFormsCheck final : public TheoremCheck {
 public:
  explicit MuRegularFormsCheck(TheoremReport seed) : report_(std::move(seed)) {}

  void visit(const LoopTable& t) override {
    ++report_.tables_swept;
    std::vector<MuRegularEntry> phi = mu_regular_set(t);
    const int n = t.order();
    auto form_holds = [&](Side side, bool c_form) {
      for (int y = 0; y < n; ++y) {
        const int yy = t.mul(y, y);
        Perm ly = left_translation(t, y);
        Perm ry = right_translation(t, y);
        Perm u = (side == Side::left && !c_form) ? right_translation(t, yy)
                                                 : ry.then(ry);
        Perm adj = (side == Side::right && !c_form) ? left_translation(t, yy)
                                                    : ly.then(ly);
        if (!mu_regular_contains(phi, u, adj)) return false;
      }
      return true;
    };
    struct FormSpec {
      bool loop_property;
      bool membership;
      const char* name;
    };
    FormSpec forms[3] = {
        {pred_lc(t), form_holds(Side::left, false), "LC"},
        {pred_rc(t), form_holds(Side::right, false), "RC"},
        {pred_c(t), form_holds(Side::left, true), "C"},
    };
    if (forms[0].loop_property) ++report_.hypothesis_satisfying;
    if (forms[0].membership) ++report_.conclusion_satisfying;
    for (const FormSpec& f : forms) {
      if (f.loop_property != f.membership && !report_.witness) {
        report_.witness = TheoremWitness{
            t, t.label() + ": " + f.name + " form: loop property " +
                   (f.loop_property ? "holds" : "fails") +
                   " but mu-regular membership " +
                   (f.membership ? "holds" : "fails")};
      }
    }
  }

  TheoremReport finish() override {
    report_.verdict = report_.witness ? Verdict::violated
                      : report_.tables_swept ? Verdict::holds
                                             : Verdict::vacuous;
    return report_;
  }

 private:
  TheoremReport report_;
};

// Sweeps the isotope harness over all principal-isotope-induced triples of
// the required shape.
class IsotopeHarnessCheck final : public TheoremCheck {
 public:
  using Harness = HarnessReport (*)(const LoopTable&, const LoopTable&,
                                    const Triple&, Side);

  IsotopeHarnessCheck(TheoremReport seed, Harness harness)
      : report_(std::move(seed)), harness_(harness) {}

  void visit(const LoopTable& g) override {
    ++report_.tables_swept;
    for (int a = 0; a < g.order(); ++a) {
      InducedIsotope iso = induced_left(g, a);
      record(g, harness_(g, iso.h, iso.t, Side::left),
             "left form, a=" + std::to_string(a));
    }
    for (int b = 0; b < g.order(); ++b) {
      InducedIsotope iso = induced_right(g, b);
      record(g, harness_(g, iso.h, iso.t, Side::right),
             "right form, b=" + std::to_string(b));
    }
  }

  TheoremReport finish() override {
    report_.note = "counts are (G, principal isotope) pairs; " +
                   std::to_string(pairs_) + " pairs swept" +
                   (report_.note.empty() ? "" : "; " + report_.note);
    report_.verdict = report_.witness ? Verdict::violated
                      : report_.hypothesis_satisfying ? Verdict::holds
                                                      : Verdict::vacuous;
    return report_;
  }

 private:
  void record(const LoopTable& g, const HarnessReport& r,
              const std::string& where) {
    ++pairs_;
    if (r.hypotheses_met) ++report_.hypothesis_satisfying;
    if (r.verdict == HarnessVerdict::holds) ++report_.conclusion_satisfying;
    if (r.verdict == HarnessVerdict::violated && !report_.witness) {
      report_.witness =
          TheoremWitness{g, g.label() + ": " + where + ": " + r.detail};
    }
  }

  TheoremReport report_;
  Harness harness_;
  std::uint64_t pairs_ = 0;
};

// Autotopism-group invariance under principal isotopy (cardinality and
// element-order multiset agreement).
class AutInvarianceCheck final : public TheoremCheck {
 public:
  explicit AutInvarianceCheck(TheoremReport seed) : report_(std::move(seed)) {}

  void visit(const LoopTable& t) override {
    ++report_.tables_swept;
    ++report_.hypothesis_satisfying;
    std::vector<Triple> aut_l = autotopism_group(t);
    std::vector<int> orders_l = triple_order_multiset(aut_l);
    for (int a = 0; a < t.order(); ++a) {
      for (int b = 0; b < t.order(); ++b) {
        std::optional<LoopTable> h = normalize_to_loop(principal_isotope(t, a, b));
        std::vector<Triple> aut_h = autotopism_group(*h);
        if (aut_h.size() != aut_l.size() ||
            triple_order_multiset(aut_h) != orders_l) {
          if (!report_.witness) {
            report_.witness = TheoremWitness{
                t, t.label() + ": principal isotope at a=" + std::to_string(a) +
                       " b=" + std::to_string(b) + " has |AUT|=" +
                       std::to_string(aut_h.size()) + " vs " +
                       std::to_string(aut_l.size())};
          }
          return;
        }
      }
    }
    ++report_.conclusion_satisfying;
  }

  TheoremReport finish() override {
    report_.verdict = report_.witness ? Verdict::violated
                      : report_.tables_swept ? Verdict::holds
                                             : Verdict::vacuous;
    return report_;
  }

 private:
  TheoremReport report_;
};

// Mu-regular group invariance under principal isotopy (cardinality plus
// order multisets of the bijections and of their adjoints).
class PhiInvarianceCheck final : public TheoremCheck {
 public:
  explicit PhiInvarianceCheck(TheoremReport seed) : report_(std::move(seed)) {}

  void visit(const LoopTable& t) override {
    ++report_.tables_swept;
    ++report_.hypothesis_satisfying;
    std::vector<MuRegularEntry> phi_l = mu_regular_set(t);
    std::vector<int> u_orders = perm_order_multiset(phi_l, false);
    std::vector<int> adj_orders = perm_order_multiset(phi_l, true);
    for (int a = 0; a < t.order(); ++a) {
      for (int b = 0; b < t.order(); ++b) {
        std::optional<LoopTable> h = normalize_to_loop(principal_isotope(t, a, b));
        std::vector<MuRegularEntry> phi_h = mu_regular_set(*h);
        if (phi_h.size() != phi_l.size() ||
            perm_order_multiset(phi_h, false) != u_orders ||
            perm_order_multiset(phi_h, true) != adj_orders) {
          if (!report_.witness) {
            report_.witness = TheoremWitness{
                t, t.label() + ": principal isotope at a=" + std::to_string(a) +
                       " b=" + std::to_string(b) +
                       " has a different mu-regular group profile"};
          }
          return;
        }
      }
    }
    ++report_.conclusion_satisfying;
  }

  TheoremReport finish() override {
    report_.verdict = report_.witness ? Verdict::violated
                      : report_.tables_swept ? Verdict::holds
                                             : Verdict::vacuous;
    return report_;
  }

 private:
  TheoremReport report_;
};

// Central square C-loops of exponent dividing 4 have trivial right inner
// maps; tallies which exponents actually occur.
class RightInnerCheck final : public TheoremCheck {
 public:
  explicit RightInnerCheck(TheoremReport seed) : report_(std::move(seed)) {}

  void visit(const LoopTable& t) override {
    ++report_.tables_swept;
    if (!(pred_c(t) && is_central_square(t).holds && exponent_divides_4(t))) {
      return;
    }
    ++report_.hypothesis_satisfying;
    ++exponents_[*exponent(t).value];
    for (int x = 0; x < t.order(); ++x) {
      for (int y = 0; y < t.order(); ++y) {
        if (!right_inner_map(t, x, y).is_identity()) {
          if (!report_.witness) {
            report_.witness = TheoremWitness{
                t, t.label() + ": R(" + std::to_string(x) + "," +
                       std::to_string(y) + ") is not the identity"};
          }
          return;
        }
      }
    }
    ++report_.conclusion_satisfying;
  }

  TheoremReport finish() override {
    std::string tally = "exponents among hypothesis tables:";
    for (const auto& [k, count] : exponents_) {
      tally += " " + std::to_string(k) + "x" + std::to_string(count);
    }
    if (exponents_.empty()) tally += " none";
    report_.note = report_.note.empty() ? tally : report_.note + "; " + tally;
    report_.verdict = report_.witness ? Verdict::violated
                      : report_.hypothesis_satisfying ? Verdict::holds
                                                      : Verdict::vacuous;
    return report_;
  }

 private:
  TheoremReport report_;
  std::map<int, std::uint64_t> exponents_;
};

// ---------------------------------------------------------------------------
// Catalog
// ---------------------------------------------------------------------------

struct Entry {
  TheoremInfo info;
  std::function<std::unique_ptr<TheoremCheck>(TheoremReport seed)> make;
};

std::unique_ptr<TheoremCheck> make_dual_iff(TheoremReport seed,
                                            TablePredicate left_gate,
                                            TablePredicate left_l,
                                            TablePredicate left_r,
                                            TablePredicate right_gate,
                                            TablePredicate right_l,
                                            TablePredicate right_r) {
  std::vector<CompositeCheck::Part> parts;
  parts.push_back({"left form",
                   std::make_unique<IffCheck>(TheoremReport{}, std::move(left_gate),
                                              std::move(left_l), std::move(left_r))});
  parts.push_back({"right form",
                   std::make_unique<IffCheck>(TheoremReport{}, std::move(right_gate),
                                              std::move(right_l),
                                              std::move(right_r))});
  return std::make_unique<CompositeCheck>(std::move(seed), std::move(parts));
}

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = [] {
    std::vector<Entry> out;
    auto add = [&out](std::string id, TheoremKind kind, std::string title,
                      int max_order,
                      std::function<std::unique_ptr<TheoremCheck>(TheoremReport)>
                          make) {
      out.push_back(Entry{TheoremInfo{std::move(id), kind, std::move(title),
                                      max_order},
                          std::move(make)});
    };

    add("D1.1", TheoremKind::implication,
        "the left and right translation sets satisfy the representation "
        "axioms",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<ImplicationCheck>(
              std::move(seed), nullptr,
              [](const LoopTable& t) -> std::optional<std::string> {
                if (!is_representation(pi_lambda(t))) {
                  return "pi_lambda fails a representation axiom";
                }
                if (!is_representation(pi_rho(t))) {
                  return "pi_rho fails a representation axiom";
                }
                return std::nullopt;
              });
        });

    add("L0.1", TheoremKind::iff,
        "LC(RC) iff R_{y^2} R_z = R_{y(yz)} (L_{y^2} L_z = L_{(zy)y})", 6,
        [](TheoremReport seed) {
          return make_dual_iff(
              std::move(seed), nullptr, pred_lc,
              [](const LoopTable& t) { return lemma_0_1_closure(t, Side::left); },
              nullptr, pred_rc,
              [](const LoopTable& t) { return lemma_0_1_closure(t, Side::right); });
        });

    add("L0.2", TheoremKind::iff,
        "LC(RC) iff squared left(right) translations commute with every "
        "right(left) translation",
        6, [](TheoremReport seed) {
          return make_dual_iff(
              std::move(seed), nullptr, pred_lc,
              [](const LoopTable& t) { return lemma_0_2_commutation(t, Side::left); },
              nullptr, pred_rc,
              [](const LoopTable& t) { return lemma_0_2_commutation(t, Side::right); });
        });

    add("T0.3", TheoremKind::iff,
        "LC(RC) iff L_y^2 L_x (R_y^2 R_x) stays in the left(right) "
        "representation",
        6, [](TheoremReport seed) {
          return make_dual_iff(
              std::move(seed), nullptr, pred_lc,
              [](const LoopTable& t) { return theorem_0_3_closure(t, Side::left); },
              nullptr, pred_rc,
              [](const LoopTable& t) { return theorem_0_3_closure(t, Side::right); });
        });

    add("T0.4", TheoremKind::iff,
        "an LC(RC)-loop is centrum square iff R_z R_{y^2} (L_z L_{y^2}) "
        "stays in the right(left) representation",
        6, [](TheoremReport seed) {
          return make_dual_iff(
              std::move(seed), pred_lc,
              [](const LoopTable& t) { return is_centrum_square(t).holds; },
              [](const LoopTable& t) {
                return theorem_0_4_closure(t, Side::left).value;
              },
              pred_rc,
              [](const LoopTable& t) { return is_centrum_square(t).holds; },
              [](const LoopTable& t) {
                return theorem_0_4_closure(t, Side::right).value;
              });
        });

    add("C0.5", TheoremKind::iff,
        "centrum square LC(RC) iff both translation closure conditions hold",
        6, [](TheoremReport seed) {
          return make_dual_iff(
              std::move(seed), nullptr,
              [](const LoopTable& t) {
                return pred_lc(t) && is_centrum_square(t).holds;
              },
              [](const LoopTable& t) { return corollary_0_5_check(t, Side::left); },
              nullptr,
              [](const LoopTable& t) {
                return pred_rc(t) && is_centrum_square(t).holds;
              },
              [](const LoopTable& t) { return corollary_0_5_check(t, Side::right); });
        });

    add("T1.1", TheoremKind::iff,
        "LC(RC) iff (R_{y^2}, L_y^{-2}, I) ((R_y^2, L_{y^2}^{-1}, I)) is an "
        "autotopism for every y",
        6, [](TheoremReport seed) {
          return make_dual_iff(
              std::move(seed), nullptr, pred_lc,
              [](const LoopTable& t) { return thm11_all(t, Side::left); },
              nullptr, pred_rc,
              [](const LoopTable& t) { return thm11_all(t, Side::right); });
        });

    add("C1.2", TheoremKind::implication,
        "in an LC(RC)-loop every composite triple (R_{y^2}L_x^2, L_y^{-2}, "
        "L_x^2) ((R_y^2, L_{y^2}^{-1}R_x^2, R_x^2)) is an autotopism",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          std::vector<CompositeCheck::Part> parts;
          parts.push_back(
              {"left form", std::make_unique<ImplicationCheck>(
                                TheoremReport{}, pred_lc, [](const LoopTable& t) {
                                  return cor12_failure(t, Side::left);
                                })});
          parts.push_back(
              {"right form", std::make_unique<ImplicationCheck>(
                                 TheoremReport{}, pred_rc, [](const LoopTable& t) {
                                   return cor12_failure(t, Side::right);
                                 })});
          return std::make_unique<CompositeCheck>(std::move(seed),
                                                  std::move(parts));
        });

    add("T1.3", TheoremKind::iff,
        "C iff right-alternative LC iff left-alternative RC", 6,
        [](TheoremReport seed) {
          return make_dual_iff(
              std::move(seed), nullptr, pred_c,
              [](const LoopTable& t) {
                return pred_lc(t) && is_right_alternative(t).holds;
              },
              nullptr, pred_c,
              [](const LoopTable& t) {
                return pred_rc(t) && is_left_alternative(t).holds;
              });
        });

    add("L1.4", TheoremKind::iff,
        "LC(RC, C) iff R_{y^2}(R_y^2, R_y^2) is mu-regular with adjoint "
        "L_y^2(L_{y^2}, L_y^2) for every y",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<MuRegularFormsCheck>(std::move(seed));
        });

    add("T1.5", TheoremKind::implication,
        "alternative central square isotopes of central square LC(RC)-loops "
        "under (A,B,B) ((A,B,A)) triples are C-loops",
        5, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<IsotopeHarnessCheck>(std::move(seed),
                                                       &thm_1_5_harness);
        });

    add("C1.6", TheoremKind::implication,
        "alternative central square isotopes of central square "
        "left(right)-alternative RC(LC)-loops are C-loops",
        5, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<IsotopeHarnessCheck>(std::move(seed),
                                                       &cor_1_6_harness);
        });

    add("T2.1", TheoremKind::implication,
        "principal isotopes have autotopism groups of equal size and equal "
        "element-order multiset",
        5, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<AutInvarianceCheck>(std::move(seed));
        });

    add("T2.2", TheoremKind::implication,
        "the mu-regular bijections form a subgroup of the autotopic "
        "bijections",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<ImplicationCheck>(
              std::move(seed), nullptr,
              [](const LoopTable& t) -> std::optional<std::string> {
                std::vector<MuRegularEntry> phi = mu_regular_set(t);
                Perm id = Perm::identity(t.order());
                if (!mu_regular_contains(phi, id, id)) {
                  return "identity is not mu-regular";
                }
                for (const MuRegularEntry& e : phi) {
                  Triple autotopic(e.u, e.adjoint.inverse(), id);
                  if (!is_autotopism(t, autotopic).holds) {
                    return "mu-regular bijection " + to_string(e.u) +
                           " is not autotopic";
                  }
                  if (!mu_regular_contains(phi, e.u.inverse(),
                                           e.adjoint.inverse())) {
                    return "inverse of " + to_string(e.u) + " not mu-regular";
                  }
                }
                for (const MuRegularEntry& a : phi) {
                  for (const MuRegularEntry& b : phi) {
                    if (!mu_regular_contains(phi, a.u.then(b.u),
                                             b.adjoint.then(a.adjoint))) {
                      return "composite of " + to_string(a.u) + " and " +
                             to_string(b.u) + " not mu-regular";
                    }
                  }
                }
                return std::nullopt;
              });
        });

    add("C2.3", TheoremKind::implication,
        "principal isotopes have mu-regular groups with equal size and "
        "order multisets (bijections and adjoints)",
        5, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<PhiInvarianceCheck>(std::move(seed));
        });

    add("T5.exp4", TheoremKind::implication,
        "a C-loop satisfying either inversion-conjugate autotopism condition "
        "for all z has exponent dividing 4",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          auto probe = [](const LoopTable& t) -> std::optional<std::string> {
            if (exponent_divides_4(t)) return std::nullopt;
            return "exponent " + std::to_string(*exponent(t).value) +
                   " does not divide 4";
          };
          std::vector<CompositeCheck::Part> parts;
          parts.push_back({"condition (I, L_z^2, J L_z^2 J)",
                           std::make_unique<ImplicationCheck>(
                               TheoremReport{},
                               [](const LoopTable& t) {
                                 return pred_c(t) && exp4_conditions_hold(t, 0);
                               },
                               probe)});
          parts.push_back({"condition (R_z^2, I, J R_z^2 J)",
                           std::make_unique<ImplicationCheck>(
                               TheoremReport{},
                               [](const LoopTable& t) {
                                 return pred_c(t) && exp4_conditions_hold(t, 1);
                               },
                               probe)});
          return std::make_unique<CompositeCheck>(std::move(seed),
                                                  std::move(parts));
        });

    add("T5.csq", TheoremKind::implication,
        "a C-loop satisfying both conditions for all z is central square of "
        "exponent dividing 4",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<ImplicationCheck>(
              std::move(seed),
              [](const LoopTable& t) {
                return pred_c(t) && exp4_conditions_hold(t, 2);
              },
              [](const LoopTable& t) -> std::optional<std::string> {
                if (!is_central_square(t).holds) return "not central square";
                if (!exponent_divides_4(t)) return "exponent does not divide 4";
                return std::nullopt;
              });
        });

    add("T1.8", TheoremKind::implication,
        "mu- and lambda-transforms of autotopisms of C-loops are autotopisms",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<ImplicationCheck>(
              std::move(seed),
              [](const LoopTable& t) {
                return pred_c(t) && has_two_sided_inverses(t);
              },
              [](const LoopTable& t) -> std::optional<std::string> {
                for (const Triple& a : autotopism_group(t)) {
                  if (!is_autotopism(t, transform_mu(t, a)).holds) {
                    return "mu-transform of " + to_string(a) +
                           " is not an autotopism";
                  }
                  if (!is_autotopism(t, transform_lambda(t, a)).holds) {
                    return "lambda-transform of " + to_string(a) +
                           " is not an autotopism";
                  }
                }
                return std::nullopt;
              });
        });

    add("T1.8.rho", TheoremKind::negative_existence,
        "search for an autotopism of a C-loop whose rho-transform is not an "
        "autotopism",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<WitnessSearchCheck>(
              std::move(seed),
              [](const LoopTable& t) {
                return pred_c(t) && has_two_sided_inverses(t);
              },
              [](const LoopTable& t) -> std::optional<std::string> {
                for (const Triple& a : autotopism_group(t)) {
                  if (!is_autotopism(t, transform_rho(t, a)).holds) {
                    return "rho-transform of " + to_string(a) +
                           " leaves the autotopism group";
                  }
                }
                return std::nullopt;
              });
        });

    add("C1.9", TheoremKind::implication,
        "a C-loop satisfying both conditions is flexible, has (xy)^2 = "
        "(yx)^2, and cubing is an anti-automorphism",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<ImplicationCheck>(
              std::move(seed),
              [](const LoopTable& t) {
                return pred_c(t) && exp4_conditions_hold(t, 2);
              },
              [](const LoopTable& t) -> std::optional<std::string> {
                if (!is_flexible(t).holds) return "not flexible";
                if (!squares_commute_check(t).holds) {
                  return "(xy)^2 = (yx)^2 fails";
                }
                if (!cube_antiautomorphism_check(t).holds) {
                  return "(xy)^3 = y^3 x^3 fails";
                }
                return std::nullopt;
              });
        });

    add("T1.10", TheoremKind::implication,
        "a central square C-loop of exponent dividing 4 is a group (right "
        "inner maps are trivial)",
        6, [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<RightInnerCheck>(std::move(seed));
        });

    add("C1.11", TheoremKind::implication,
        "a C-loop satisfying both conditions is a group", 6,
        [](TheoremReport seed) -> std::unique_ptr<TheoremCheck> {
          return std::make_unique<ImplicationCheck>(
              std::move(seed),
              [](const LoopTable& t) {
                return pred_c(t) && exp4_conditions_hold(t, 2);
              },
              [](const LoopTable& t) -> std::optional<std::string> {
                PropertyCheck assoc = is_associative(t);
                if (assoc.holds) return std::nullopt;
                const auto& w = *assoc.witness;
                return "associativity fails at (" + std::to_string(w[0]) + "," +
                       std::to_string(w[1]) + "," + std::to_string(w[2]) + ")";
              });
        });

    return out;
  }();
  return entries;
}

const Entry& find_entry(const std::string& id) {
  for (const Entry& e : catalog()) {
    if (e.info.id == id) return e;
  }
  raise(Errc::unknown_theorem, "'" + id + "' is not a registered statement");
}

void check_n_max(int n_max) {
  if (n_max < 1) raise(Errc::bad_entry, "max order must be positive");
  if (n_max > kEnumerationCap) {
    raise(Errc::order_too_large,
          "corpus sweeps are capped at order " + std::to_string(kEnumerationCap));
  }
}

}  // namespace

const std::vector<TheoremInfo>& theorem_manifest() {
  static const std::vector<TheoremInfo> manifest = [] {
    std::vector<TheoremInfo> out;
    for (const Entry& e : catalog()) out.push_back(e.info);
    return out;
  }();
  return manifest;
}

bool is_registered(const std::string& id) {
  for (const Entry& e : catalog()) {
    if (e.info.id == id) return true;
  }
  return false;
}

TheoremReport verify(const std::string& id, int n_max) {
  check_n_max(n_max);
  const Entry& entry = find_entry(id);
  int clamp = std::min(n_max, entry.info.max_order);
  TheoremReport seed = seed_report(entry.info, clamp);
  if (clamp < n_max) {
    seed.note = "sweep clamped to order " + std::to_string(clamp);
  }
  std::unique_ptr<TheoremCheck> check = entry.make(std::move(seed));
  return run_check(*check, clamp);
}

std::vector<TheoremReport> verify_all(int n_max) {
  check_n_max(n_max);
  struct Active {
    const Entry* entry;
    int clamp;
    std::unique_ptr<TheoremCheck> check;
  };
  std::vector<Active> active;
  for (const Entry& e : catalog()) {
    int clamp = std::min(n_max, e.info.max_order);
    TheoremReport seed = seed_report(e.info, clamp);
    if (clamp < n_max) {
      seed.note = "sweep clamped to order " + std::to_string(clamp);
    }
    active.push_back({&e, clamp, e.make(std::move(seed))});
  }
  for (int n = 1; n <= n_max; ++n) {
    enumerate_loops(n, {}, [&](const LoopTable& t) {
      for (Active& a : active) {
        if (n <= a.clamp) a.check->visit(t);
      }
    });
  }
  std::vector<TheoremReport> reports;
  reports.reserve(active.size());
  for (Active& a : active) reports.push_back(a.check->finish());
  return reports;
}

namespace {

std::string single_line(std::string text) {
  for (char& c : text) {
    if (c == '\n') c = ' ';
  }
  return text;
}

}  // namespace

std::string report_to_text(const TheoremReport& report) {
  std::ostringstream out;
  out << "[" << verdict_name(report.verdict) << "] " << report.id << " ("
      << theorem_kind_name(report.kind) << ", orders 1.."
      << report.max_order_swept << "): swept=" << report.tables_swept
      << " hyp=" << report.hypothesis_satisfying
      << " concl=" << report.conclusion_satisfying << "\n";
  if (!report.note.empty()) out << "  note: " << report.note << "\n";
  if (report.witness) {
    out << "  witness: " << report.witness->detail << "\n";
    std::istringstream table(write_table(report.witness->table));
    std::string line;
    while (std::getline(table, line)) out << "    " << line << "\n";
  }
  return out.str();
}

std::string report_to_machine(const TheoremReport& report) {
  std::ostringstream out;
  out << "id=" << report.id << "\n";
  out << "kind=" << theorem_kind_name(report.kind) << "\n";
  out << "verdict=" << verdict_name(report.verdict) << "\n";
  out << "max_order_swept=" << report.max_order_swept << "\n";
  out << "tables_swept=" << report.tables_swept << "\n";
  out << "hypothesis_satisfying=" << report.hypothesis_satisfying << "\n";
  out << "conclusion_satisfying=" << report.conclusion_satisfying << "\n";
  if (!report.note.empty()) out << "note=" << single_line(report.note) << "\n";
  if (report.witness) {
    out << "witness_detail=" << single_line(report.witness->detail) << "\n";
    out << "witness_table_begin\n";
    out << write_table(report.witness->table);
    out << "witness_table_end\n";
  }
  return out.str();
}

}  // namespace loops
