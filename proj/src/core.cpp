#include "loops/core.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>

namespace loops {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::not_latin: return "not_latin";
    case Errc::no_identity: return "no_identity";
    case Errc::bad_entry: return "bad_entry";
    case Errc::index_out_of_range: return "index_out_of_range";
    case Errc::no_two_sided_inverse: return "no_two_sided_inverse";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::not_a_bijection: return "not_a_bijection";
    case Errc::order_too_large: return "order_too_large";
    case Errc::hypothesis_not_met: return "hypothesis_not_met";
    case Errc::parse_error: return "parse_error";
    case Errc::unknown_theorem: return "unknown_theorem";
    case Errc::unknown_property: return "unknown_property";
    case Errc::io_error: return "io_error";
  }
  return "unknown";
}

LoopError::LoopError(Errc code, const std::string& what)
    : std::runtime_error(std::string(errc_name(code)) + ": " + what),
      code_(code) {}

void raise(Errc code, const std::string& what) { throw LoopError(code, what); }

Side dual(Side s) { return s == Side::left ? Side::right : Side::left; }

const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

namespace {

void require_index(int x, int n, const char* what) {
  if (x < 0 || x >= n) {
    raise(Errc::index_out_of_range,
          std::string(what) + " " + std::to_string(x) +
              " out of range for order " + std::to_string(n));
  }
}

bool is_bijection(const std::vector<std::uint8_t>& img) {
  std::vector<bool> seen(img.size(), false);
  for (std::uint8_t v : img) {
    if (v >= img.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

}  // namespace

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  if (img_.empty() || img_.size() > static_cast<std::size_t>(kMaxOrder)) {
    raise(Errc::not_a_bijection,
          "degree must be in 1.." + std::to_string(kMaxOrder));
  }
  if (!is_bijection(img_)) {
    raise(Errc::not_a_bijection, "image list " + loops::to_string(*this));
  }
}

Perm Perm::identity(int degree) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(degree));
  std::iota(img.begin(), img.end(), static_cast<std::uint8_t>(0));
  return Perm(std::move(img));
}

Perm Perm::then(const Perm& next) const {
  if (degree() != next.degree()) {
    raise(Errc::degree_mismatch, "compose degree " + std::to_string(degree()) +
                                     " with " + std::to_string(next.degree()));
  }
  std::vector<std::uint8_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) img[i] = next.img_[img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    img[img_[i]] = static_cast<std::uint8_t>(i);
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

int Perm::order() const {
  std::vector<bool> seen(img_.size(), false);
  std::int64_t result = 1;
  for (std::size_t i = 0; i < img_.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (std::size_t j = i; !seen[j]; j = img_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm<std::int64_t>(result, len);
  }
  return static_cast<int>(result);
}

std::string to_string(const Perm& p) {
  std::string out;
  for (int i = 0; i < p.degree(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(p(i));
  }
  return out;
}

Perm parse_perm(const std::string& text, int expected_degree) {
  std::vector<std::uint8_t> img;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(token, &pos);
    } catch (const std::exception&) {
      raise(Errc::parse_error, "bad permutation entry '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size() || value < 0 || value >= kMaxOrder) {
      raise(Errc::parse_error, "bad permutation entry '" + token + "'");
    }
    img.push_back(static_cast<std::uint8_t>(value));
  }
  if (expected_degree >= 0 &&
      img.size() != static_cast<std::size_t>(expected_degree)) {
    raise(Errc::degree_mismatch,
          "permutation has " + std::to_string(img.size()) +
              " entries, expected " + std::to_string(expected_degree));
  }
  return Perm(std::move(img));
}

LoopTable::LoopTable(int n, std::vector<std::uint8_t> cells, std::string label)
    : n_(n), cells_(std::move(cells)), label_(std::move(label)) {}

LoopTable LoopTable::relabeled(std::string label) const {
  return LoopTable(n_, cells_, std::move(label));
}

LoopTable validate_table(std::vector<std::uint8_t> flat, int n,
                         std::string label) {
  if (n < 1) raise(Errc::bad_entry, "order must be positive");
  if (n > kMaxOrder) {
    raise(Errc::order_too_large,
          "order " + std::to_string(n) + " exceeds supported maximum " +
              std::to_string(kMaxOrder));
  }
  if (flat.size() != static_cast<std::size_t>(n) * n) {
    raise(Errc::bad_entry, "table is not " + std::to_string(n) + "x" +
                               std::to_string(n));
  }
  for (std::uint8_t v : flat) {
    if (v >= n) {
      raise(Errc::bad_entry,
            "entry " + std::to_string(v) + " out of range 0.." +
                std::to_string(n - 1));
    }
  }
  // Latin property first, identity second: a table that fails both is
  // reported as not_latin.
  for (int i = 0; i < n; ++i) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int j = 0; j < n; ++j) {
      std::uint8_t v = flat[static_cast<std::size_t>(i) * n + j];
      if (seen[v]) {
        raise(Errc::not_latin, "duplicate value " + std::to_string(v) +
                                   " in row " + std::to_string(i));
      }
      seen[v] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
      std::uint8_t v = flat[static_cast<std::size_t>(i) * n + j];
      if (seen[v]) {
        raise(Errc::not_latin, "duplicate value " + std::to_string(v) +
                                   " in column " + std::to_string(j));
      }
      seen[v] = true;
    }
  }
  for (int j = 0; j < n; ++j) {
    if (flat[static_cast<std::size_t>(j)] != j) {
      raise(Errc::no_identity, "row 0 is not the identity map");
    }
  }
  for (int i = 0; i < n; ++i) {
    if (flat[static_cast<std::size_t>(i) * n] != i) {
      raise(Errc::no_identity, "column 0 is not the identity map");
    }
  }
  return LoopTable(n, std::move(flat), std::move(label));
}

LoopTable validate_table(const std::vector<std::vector<int>>& raw,
                         std::string label) {
  const std::size_t n = raw.size();
  if (n == 0) raise(Errc::bad_entry, "empty table");
  std::vector<std::uint8_t> flat;
  flat.reserve(n * n);
  for (const auto& row : raw) {
    if (row.size() != n) {
      raise(Errc::bad_entry, "table is not square: row of length " +
                                 std::to_string(row.size()) + " in order-" +
                                 std::to_string(n) + " table");
    }
    for (int v : row) {
      if (v < 0 || v > kMaxOrder) {
        raise(Errc::bad_entry, "entry " + std::to_string(v) + " out of range");
      }
      flat.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return validate_table(std::move(flat), static_cast<int>(n),
                        std::move(label));
}

Perm left_translation(const LoopTable& loop, int x) {
  require_index(x, loop.order(), "element");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(loop.order()));
  for (int y = 0; y < loop.order(); ++y) {
    img[static_cast<std::size_t>(y)] =
        static_cast<std::uint8_t>(loop.mul(x, y));
  }
  return Perm(std::move(img));
}

Perm right_translation(const LoopTable& loop, int x) {
  require_index(x, loop.order(), "element");
  std::vector<std::uint8_t> img(static_cast<std::size_t>(loop.order()));
  for (int y = 0; y < loop.order(); ++y) {
    img[static_cast<std::size_t>(y)] =
        static_cast<std::uint8_t>(loop.mul(y, x));
  }
  return Perm(std::move(img));
}

int left_inverse(const LoopTable& loop, int x) {
  require_index(x, loop.order(), "element");
  for (int a = 0; a < loop.order(); ++a) {
    if (loop.mul(a, x) == 0) return a;
  }
  raise(Errc::not_latin, "no left inverse found");  // unreachable on valid tables
}

int right_inverse(const LoopTable& loop, int x) {
  require_index(x, loop.order(), "element");
  for (int b = 0; b < loop.order(); ++b) {
    if (loop.mul(x, b) == 0) return b;
  }
  raise(Errc::not_latin, "no right inverse found");
}

bool has_two_sided_inverses(const LoopTable& loop) {
  for (int x = 0; x < loop.order(); ++x) {
    if (left_inverse(loop, x) != right_inverse(loop, x)) return false;
  }
  return true;
}

Perm j_map(const LoopTable& loop) {
  std::vector<std::uint8_t> img(static_cast<std::size_t>(loop.order()));
  for (int x = 0; x < loop.order(); ++x) {
    int lambda = left_inverse(loop, x);
    int rho = right_inverse(loop, x);
    if (lambda != rho) {
      raise(Errc::no_two_sided_inverse,
            "element " + std::to_string(x) + " has left inverse " +
                std::to_string(lambda) + " but right inverse " +
                std::to_string(rho));
    }
    img[static_cast<std::size_t>(x)] = static_cast<std::uint8_t>(lambda);
  }
  return Perm(std::move(img));
}

int power(const LoopTable& loop, int x, std::int64_t k) {
  require_index(x, loop.order(), "element");
  if (k < 0) raise(Errc::index_out_of_range, "negative exponent");
  int acc = 0;
  for (std::int64_t i = 0; i < k; ++i) acc = loop.mul(x, acc);
  return acc;
}

int power_right_associated(const LoopTable& loop, int x, std::int64_t k) {
  require_index(x, loop.order(), "element");
  if (k < 0) raise(Errc::index_out_of_range, "negative exponent");
  int acc = 0;
  for (std::int64_t i = 0; i < k; ++i) acc = loop.mul(acc, x);
  return acc;
}

int element_order(const LoopTable& loop, int x) {
  require_index(x, loop.order(), "element");
  int acc = loop.mul(x, 0);
  int k = 1;
  while (acc != 0) {
    acc = loop.mul(x, acc);
    ++k;
  }
  return k;
}

ExponentResult exponent(const LoopTable& loop) {
  std::int64_t k = 1;
  for (int x = 0; x < loop.order(); ++x) {
    k = std::lcm<std::int64_t>(k, element_order(loop, x));
  }
  ExponentResult result;
  result.value = static_cast<int>(k);
  for (int x = 0; x < loop.order(); ++x) {
    if (power_right_associated(loop, x, k) != 0) {
      result.right_associated_agrees = false;
      break;
    }
  }
  return result;
}

namespace {

bool is_skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

std::vector<int> parse_int_line(const std::string& line, int lineno) {
  std::istringstream in(line);
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(token, &pos);
      if (pos != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      raise(Errc::parse_error, "line " + std::to_string(lineno) +
                                   ": bad token '" + token + "'");
    }
  }
  return values;
}

}  // namespace

LoopTable read_table(std::istream& in, std::string label) {
  std::string line;
  int lineno = 0;
  int n = -1;
  std::vector<std::vector<int>> rows;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_skippable(line)) continue;
    std::vector<int> values = parse_int_line(line, lineno);
    if (n < 0) {
      if (values.size() != 1 || values[0] < 1) {
        raise(Errc::parse_error,
              "line " + std::to_string(lineno) +
                  ": expected the order as a single positive integer");
      }
      n = values[0];
      if (n > kMaxOrder) {
        raise(Errc::order_too_large,
              "order " + std::to_string(n) + " exceeds supported maximum " +
                  std::to_string(kMaxOrder));
      }
      continue;
    }
    if (values.size() != static_cast<std::size_t>(n)) {
      raise(Errc::parse_error, "line " + std::to_string(lineno) + ": expected " +
                                   std::to_string(n) + " entries, got " +
                                   std::to_string(values.size()));
    }
    rows.push_back(std::move(values));
    if (rows.size() == static_cast<std::size_t>(n)) break;
  }
  if (n < 0) raise(Errc::parse_error, "no table found");
  if (rows.size() != static_cast<std::size_t>(n)) {
    raise(Errc::parse_error, "expected " + std::to_string(n) +
                                 " rows, got " + std::to_string(rows.size()));
  }
  for (const auto& row : rows) {
    for (int v : row) {
      if (v < 0 || v >= n) {
        raise(Errc::bad_entry, "entry " + std::to_string(v) +
                                   " out of range 0.." + std::to_string(n - 1));
      }
    }
  }
  return validate_table(rows, std::move(label));
}

LoopTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::io_error, "cannot open '" + path + "'");
  return read_table(in, path);
}

std::string write_table(const LoopTable& loop) {
  std::string out = std::to_string(loop.order());
  out += '\n';
  for (int i = 0; i < loop.order(); ++i) {
    for (int j = 0; j < loop.order(); ++j) {
      if (j > 0) out += ' ';
      out += std::to_string(loop.mul(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace loops
