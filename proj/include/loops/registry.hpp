#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "loops/core.hpp"

namespace loops {

enum class Verdict { holds, violated, vacuous, refutation_not_found };
enum class TheoremKind { iff, implication, negative_existence };

const char* verdict_name(Verdict v);
const char* theorem_kind_name(TheoremKind k);

struct TheoremWitness {
  LoopTable table;
  std::string detail;
};

/// Outcome of sweeping one registered statement over the enumerated corpus.
/// A violated verdict always carries a witness that re-checks; a vacuous
/// one means no table satisfied the hypothesis. For dual (LC/RC) statements
/// the numeric counts track the left form and `note` carries the right-form
/// counts.
struct TheoremReport {
  std::string id;
  TheoremKind kind = TheoremKind::implication;
  Verdict verdict = Verdict::vacuous;
  int max_order_swept = 0;
  std::uint64_t tables_swept = 0;
  std::uint64_t hypothesis_satisfying = 0;
  std::uint64_t conclusion_satisfying = 0;
  std::optional<TheoremWitness> witness;
  std::string note;
};

struct TheoremInfo {
  std::string id;
  TheoremKind kind;
  std::string title;
  // Claims are only desk-checkable up to this order; verify() clamps the
  // sweep to min(n_max, max_order).
  int max_order;
};

/// Every registered statement, in catalog order. A self-test pins this list.
const std::vector<TheoremInfo>& theorem_manifest();

bool is_registered(const std::string& id);

/// Sweeps one statement over all loops of order 1..min(n_max, cap).
TheoremReport verify(const std::string& id, int n_max);

/// Sweeps every registered statement, sharing one enumeration pass per
/// order across all of them.
std::vector<TheoremReport> verify_all(int n_max);

std::string report_to_text(const TheoremReport& report);
std::string report_to_machine(const TheoremReport& report);

// ---------------------------------------------------------------------------
// Sweep building blocks (exposed so their contracts are testable with
// synthetic predicates).
// ---------------------------------------------------------------------------

/// Per-table accumulator; visit() sees every corpus table of orders the
/// statement sweeps, finish() renders the report.
class TheoremCheck {
 public:
  virtual ~TheoremCheck() = default;
  virtual void visit(const LoopTable& table) = 0;
  virtual TheoremReport finish() = 0;
};

using TablePredicate = std::function<bool(const LoopTable&)>;
/// Returns nullopt when the conclusion holds, else a witness description.
using ConclusionProbe =
    std::function<std::optional<std::string>(const LoopTable&)>;

class ImplicationCheck final : public TheoremCheck {
 public:
  ImplicationCheck(TheoremReport seed, TablePredicate hypothesis,
                   ConclusionProbe conclusion_failure);
  void visit(const LoopTable& table) override;
  TheoremReport finish() override;

 private:
  TheoremReport report_;
  TablePredicate hypothesis_;
  ConclusionProbe conclusion_failure_;
};

/// Both directions of `left <=> right`, optionally gated by a standing
/// hypothesis; tables failing the gate are vacuous for the statement.
class IffCheck final : public TheoremCheck {
 public:
  IffCheck(TheoremReport seed, TablePredicate gate, TablePredicate left,
           TablePredicate right);
  void visit(const LoopTable& table) override;
  TheoremReport finish() override;

 private:
  TheoremReport report_;
  TablePredicate gate_;
  TablePredicate left_;
  TablePredicate right_;
  std::uint64_t forward_failures_ = 0;
  std::uint64_t backward_failures_ = 0;
};

/// Witness search for a negative claim: verdict is holds (witness found,
/// attached) or refutation_not_found.
class WitnessSearchCheck final : public TheoremCheck {
 public:
  WitnessSearchCheck(TheoremReport seed, TablePredicate in_scope,
                     ConclusionProbe witness_probe);
  void visit(const LoopTable& table) override;
  TheoremReport finish() override;

 private:
  TheoremReport report_;
  TablePredicate in_scope_;
  ConclusionProbe witness_probe_;
};

/// Runs one accumulator over all loops of order 1..n_max (n_max already
/// clamped by the caller).
TheoremReport run_check(TheoremCheck& check, int n_max);

}  // namespace loops
