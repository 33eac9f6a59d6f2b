#pragma once

#include "ordtopia/preorder.hpp"
#include "ordtopia/rational.hpp"
#include "ordtopia/report.hpp"
#include "ordtopia/topology.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace ordtopia {

/// Square table of exact distances on {0, ..., n-1}. Every quasi-pseudo-metric
/// construction returns one; validate_qpm says which axioms it satisfies.
class DistanceTable {
 public:
  DistanceTable() = default;
  explicit DistanceTable(std::size_t n) : n_(n), d_(n * n) {}
  DistanceTable(std::size_t n, std::vector<Rational> row_major);

  std::size_t size() const noexcept { return n_; }
  const Rational& at(std::size_t x, std::size_t y) const { return d_[x * n_ + y]; }
  Rational& at(std::size_t x, std::size_t y) { return d_[x * n_ + y]; }
  const std::vector<Rational>& entries() const noexcept { return d_; }

  friend bool operator==(const DistanceTable&, const DistanceTable&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> d_;
};

/// Symmetric pseudo-metric used as the base of the d1/d2 constructions.
class BaseMetric {
 public:
  /// Throws InvalidArgument unless the table is a pseudo-metric.
  explicit BaseMetric(DistanceTable table);

  std::size_t size() const noexcept { return table_.size(); }
  const DistanceTable& table() const noexcept { return table_; }
  const Rational& at(std::size_t x, std::size_t y) const { return table_.at(x, y); }
  bool one_bounded() const;
  /// Positive off the diagonal.
  bool is_metric() const;

 private:
  DistanceTable table_;
};

/// d / (1 + max entry); always 1-bounded.
BaseMetric scale_to_unit(const BaseMetric& d);

enum class QpmClass {
  invalid,
  quasi_pseudo_metric,
  quasi_metric,     // d(x,y) = d(y,x) = 0 only for x = y
  t1_quasi_metric,  // d(x,y) = 0 only for x = y
};

const char* qpm_class_name(QpmClass c) noexcept;

struct QpmValidation {
  QpmClass klass = QpmClass::invalid;
  bool symmetric = false;
  /// Set when the table is invalid: "nonnegativity", "zero_diagonal" or
  /// "triangle".
  std::string violated_axiom;
  /// Offending indices (x, y, z); for the triangle axiom d(x,z) > d(x,y)+d(y,z).
  std::optional<std::array<std::size_t, 3>> witness;

  bool valid() const noexcept { return klass != QpmClass::invalid; }
  bool is_pseudo_metric() const noexcept { return valid() && symmetric; }
  bool is_metric() const noexcept { return klass == QpmClass::t1_quasi_metric && symmetric; }
  /// "quasi-pseudo-metric", "metric", ...
  std::string describe() const;
};

QpmValidation validate_qpm(const DistanceTable& d);
CheckReport check_qpm(const std::string& name, const DistanceTable& d);

/// 0 on related pairs, 1 elsewhere.
DistanceTable encode_preorder(const FinitePreorder& p);

/// max{d(x,y), d(y,x)}
DistanceTable symmetrize(const DistanceTable& d);

/// x <= y iff d(x,y) = 0. Throws InvalidArgument if d is not a
/// quasi-pseudo-metric (the zero set would not be a preorder).
FinitePreorder induced_preorder(const DistanceTable& d);

/// Topology generated by the open balls B(x, r) = {y : d(x,y) < r}.
FiniteTopology induced_topology(const DistanceTable& d);

/// d(x,y) on related pairs, 1 elsewhere. Requires a 1-bounded base.
DistanceTable construct_d1(const FinitePreorder& p, const BaseMetric& d);
/// d/2 on related pairs, 1/2 + d/2 elsewhere.
DistanceTable construct_d2(const FinitePreorder& p, const BaseMetric& d);
/// k*d/m on related pairs, k/m + (m-k)*d/m elsewhere; 0 <= k <= m, m > 0.
DistanceTable construct_d2_param(const FinitePreorder& p, const BaseMetric& d, const Rational& k,
                                 const Rational& m);
/// 0 on related pairs, 1 + |u(x)-u(y)| when y < x strictly, 1 otherwise.
DistanceTable construct_d3(const FinitePreorder& p, const Utility& u);
/// (u(y)-u(x))/2 on related pairs, 1/2 + (u(x)-u(y))/2 when y < x strictly,
/// 1/2 otherwise.
DistanceTable construct_d4(const FinitePreorder& p, const Utility& u);

/// u(x) = (1 + |L(x)|) / (n + 2): isotonic, valued in (0,1).
Utility default_weak_utility(const FinitePreorder& p);

}  // namespace ordtopia
