#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qhopf/errors.hpp"

namespace qhopf {

/// Element handle. Finite loops use their basis index 0..n-1; oracle
/// quasigroups use an opaque integer label (totally ordered, so supports
/// iterate deterministically).
using Elem = std::int64_t;

/// Finite quasigroup with a two-sided identity, given by a Cayley table.
/// The table is validated to be a Latin square on construction.
class FiniteLoop {
 public:
  static FiniteLoop from_cayley_table(std::vector<std::string> labels,
                                      std::vector<std::vector<int>> table,
                                      const std::string& identity_label);

  int order() const { return static_cast<int>(labels_.size()); }
  int identity() const { return identity_; }
  int product(int u, int v) const { return table_[u][v]; }
  /// Right inverse: the unique v with u·v = e. Coincides with the left
  /// inverse exactly on IP loops (checked by check_ip, not assumed here).
  int inverse(int u) const { return right_inverse_[u]; }
  int left_divide(int u, int w) const { return left_div_[u][w]; }    // u·v = w
  int right_divide(int w, int u) const { return right_div_[w][u]; }  // v·u = w

  const std::string& label(int u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_associative() const;  // brute force over all triples

 private:
  FiniteLoop() = default;
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> right_inverse_;
  std::vector<std::vector<int>> left_div_;
  std::vector<std::vector<int>> right_div_;
};

/// Lazily evaluated quasigroup on opaque labels, for infinite carriers.
/// Divisions are computed through the IP inverse and re-verified with one
/// product call per use.
struct OracleQuasigroup {
  std::function<Elem(Elem, Elem)> product;
  Elem identity = 0;
  std::function<Elem(Elem)> inverse;
  std::string name = "oracle";
};

/// Uniform interface over FiniteLoop and OracleQuasigroup.
class QuasigroupHandle {
 public:
  explicit QuasigroupHandle(FiniteLoop loop);
  explicit QuasigroupHandle(OracleQuasigroup oracle);

  bool finite() const { return loop_.has_value(); }
  const FiniteLoop& loop() const { return *loop_; }
  int order() const { return loop_->order(); }

  Elem identity() const;
  Elem product(Elem u, Elem v) const;
  Elem inverse(Elem u) const;
  Elem left_divide(Elem u, Elem w) const;   // unique v with u·v = w
  Elem right_divide(Elem w, Elem u) const;  // unique v with v·u = w
  std::string label(Elem u) const;

 private:
  std::optional<FiniteLoop> loop_;
  std::optional<OracleQuasigroup> oracle_;
};

struct IpViolation {
  Elem u, v;
  bool left_law;  // true: u⁻¹(uv) ≠ v, false: (vu)u⁻¹ ≠ v
};

struct IpReport {
  std::vector<IpViolation> violations;
  long pairs_checked = 0;
  bool sampled = false;  // oracle carriers can only be spot-checked
  bool pass() const { return violations.empty(); }
};

/// Checks both inverse-property laws u⁻¹(uv) = v = (vu)u⁻¹, plus
/// (u⁻¹)⁻¹ = u. Exhaustive for finite loops; `sample` is required for
/// oracles and its absence raises SampleRequired.
IpReport check_ip(const QuasigroupHandle& q,
                  const std::vector<Elem>* sample = nullptr);

/// Chein double M(G,2) on G ∪ Gx: g·(hx) = (hg)x, (gx)·h = (gh⁻¹)x,
/// (gx)·(hx) = h⁻¹g. Requires an associative input (checked).
FiniteLoop chein_double(const FiniteLoop& g);

/// Text format: line 1 = n, line 2 = n labels, then n rows of n labels;
/// identity must be the first label. A leading '{' selects JSON with keys
/// "labels", "table" (index rows), "identity".
FiniteLoop parse_loop_text(const std::string& content);
FiniteLoop load_loop_file(const std::string& path);

/// ℤ under addition, identity 0 — the standing infinite-carrier example.
OracleQuasigroup integer_addition_oracle();

}  // namespace qhopf
