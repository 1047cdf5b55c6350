#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace loops {

// Largest table order the toolkit accepts anywhere.
inline constexpr int kMaxOrder = 16;

// Error taxonomy shared by every module. Each failure carries a code so
// callers (and the CLI exit-code mapping) can branch without string matching.
enum class Errc {
  not_latin,
  no_identity,
  bad_entry,
  index_out_of_range,
  no_two_sided_inverse,
  degree_mismatch,
  not_a_bijection,
  order_too_large,
  hypothesis_not_met,
  parse_error,
  unknown_theorem,
  unknown_property,
  io_error,
};

const char* errc_name(Errc code);

class LoopError : public std::runtime_error {
 public:
  LoopError(Errc code, const std::string& what);
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void raise(Errc code, const std::string& what);

// Selects one statement of a dual pair: `left` is the LC-form of a result,
// `right` the RC-form.
enum class Side { left, right };

Side dual(Side s);
const char* side_name(Side s);

/// A bijection of {0..n-1}.
///
/// Composition is written postfix throughout the toolkit: maps act on the
/// right of their argument, so `a.then(b)` sends x to b(a(x)) ("apply a,
/// then b"). Every equality test in the higher modules relies on this one
/// convention; no second convention exists anywhere.
class Perm {
 public:
  explicit Perm(std::vector<std::uint8_t> images);

  static Perm identity(int degree);

  int degree() const noexcept { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  const std::vector<std::uint8_t>& images() const noexcept { return img_; }

  /// Postfix composition: (x)(this.then(next)) = next(this(x)).
  Perm then(const Perm& next) const;
  Perm inverse() const;

  bool is_identity() const;

  /// Least k >= 1 with p^k = identity (lcm of cycle lengths).
  int order() const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint8_t> img_;
};

/// Renders images as a comma list, e.g. "2,3,0,1".
std::string to_string(const Perm& p);

/// Parses a comma-separated image list. Degree must match when
/// expected_degree >= 0.
Perm parse_perm(const std::string& text, int expected_degree = -1);

/// An order-n Cayley table with element 0 as two-sided identity.
///
/// Entry (i,j) is the product i*j. Both invariants (Latin square, 0 is the
/// identity) are enforced at construction by validate_table; instances are
/// immutable afterwards and safe to share across threads.
class LoopTable {
 public:
  int order() const noexcept { return n_; }
  int mul(int x, int y) const {
    return cells_[static_cast<std::size_t>(x) * n_ + y];
  }
  const std::vector<std::uint8_t>& cells() const noexcept { return cells_; }
  const std::string& label() const noexcept { return label_; }

  LoopTable relabeled(std::string label) const;

  // Equality compares order and cells; the label is a report tag only.
  friend bool operator==(const LoopTable& a, const LoopTable& b) {
    return a.n_ == b.n_ && a.cells_ == b.cells_;
  }

 private:
  LoopTable(int n, std::vector<std::uint8_t> cells, std::string label);
  friend LoopTable validate_table(std::vector<std::uint8_t> flat, int n,
                                  std::string label);

  int n_;
  std::vector<std::uint8_t> cells_;
  std::string label_;
};

/// Checks both loop invariants and returns the immutable table.
/// Errors: bad_entry (shape or range), not_latin (duplicate in a row or
/// column), no_identity (row 0 or column 0 is not the identity map).
LoopTable validate_table(const std::vector<std::vector<int>>& raw,
                         std::string label = "");
LoopTable validate_table(std::vector<std::uint8_t> flat, int n,
                         std::string label = "");

/// y -> x*y (row x of the table).
Perm left_translation(const LoopTable& loop, int x);
/// y -> y*x (column x of the table).
Perm right_translation(const LoopTable& loop, int x);

/// The unique a with a*x = 0.
int left_inverse(const LoopTable& loop, int x);
/// The unique b with x*b = 0.
int right_inverse(const LoopTable& loop, int x);

bool has_two_sided_inverses(const LoopTable& loop);

/// x -> x^{-1}, defined only when every element's left and right inverses
/// agree. Involution by construction. Errors: no_two_sided_inverse, naming
/// the first offending element.
Perm j_map(const LoopTable& loop);

/// Left-recursive power: x^0 = 0 (the identity), x^k = x * x^(k-1).
/// k must be nonnegative; inverse powers are spelled via j_map at call
/// sites.
int power(const LoopTable& loop, int x, std::int64_t k);

/// Cross-check variant: x^k built as x^(k-1) * x. Agrees with power() on
/// groups; may differ on arbitrary loops.
int power_right_associated(const LoopTable& loop, int x, std::int64_t k);

/// Least k >= 1 with power(loop, x, k) = 0; always exists (it is the length
/// of the identity's cycle under left translation by x).
int element_order(const LoopTable& loop, int x);

struct ExponentResult {
  // Least k >= 1 with x^k = 0 for all x (lcm of element orders).
  std::optional<int> value;
  // False flags that the right-recursive k-th power of some element is not
  // the identity, i.e. the two power conventions disagree at k.
  bool right_associated_agrees = true;
};

ExponentResult exponent(const LoopTable& loop);

// ---------------------------------------------------------------------------
// Cayley-table text format.
//
//   # optional comment lines
//   n
//   n lines of n whitespace-separated integers in 0..n-1
//
// Row i, column j holds i*j. Blank lines and trailing whitespace are
// ignored on input; write_table emits the canonical byte-stable form (no
// comments, single spaces, trailing newline).
// ---------------------------------------------------------------------------

LoopTable read_table(std::istream& in, std::string label = "");
LoopTable read_table_file(const std::string& path);
std::string write_table(const LoopTable& loop);

}  // namespace loops
