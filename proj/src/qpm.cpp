#include "ordtopia/qpm.hpp"

#include "ordtopia/error.hpp"

#include <algorithm>
#include <set>

namespace ordtopia {

namespace {

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(Errc::size_mismatch, std::string(what) + ": carrier sizes differ");
}

void require_weak_utility(const FinitePreorder& p, const Utility& u) {
  if (u.size() != p.size()) throw Error(Errc::size_mismatch, "utility length differs from carrier size");
  for (std::size_t x = 0; x < u.size(); ++x)
    if (u[x] <= 0 || u[x] >= 1)
      throw Error(Errc::utility_out_of_range, "u(" + std::to_string(x) + ") = " + to_string(u[x]));
  if (!is_isotonic(p, u)) throw Error(Errc::utility_not_isotonic, "utility is not isotonic for the preorder");
}

}  // namespace

DistanceTable::DistanceTable(std::size_t n, std::vector<Rational> row_major) : n_(n), d_(std::move(row_major)) {
  if (d_.size() != n * n) throw Error(Errc::size_mismatch, "distance table must have n*n entries");
}

BaseMetric::BaseMetric(DistanceTable table) : table_(std::move(table)) {
  const auto v = validate_qpm(table_);
  if (!v.is_pseudo_metric())
    throw Error(Errc::invalid_argument, "base table is not a pseudo-metric (" + v.describe() + ")");
}

bool BaseMetric::one_bounded() const {
  return std::all_of(table_.entries().begin(), table_.entries().end(), [](const Rational& r) { return r <= 1; });
}

bool BaseMetric::is_metric() const {
  for (std::size_t x = 0; x < size(); ++x)
    for (std::size_t y = 0; y < size(); ++y)
      if (x != y && at(x, y) == 0) return false;
  return true;
}

BaseMetric scale_to_unit(const BaseMetric& d) {
  Rational top = 0;
  for (const auto& r : d.table().entries()) top = std::max(top, r);
  const Rational scale = 1 + top;
  DistanceTable out(d.size());
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y) out.at(x, y) = d.at(x, y) / scale;
  return BaseMetric(std::move(out));
}

const char* qpm_class_name(QpmClass c) noexcept {
  switch (c) {
    case QpmClass::invalid: return "invalid";
    case QpmClass::quasi_pseudo_metric: return "quasi-pseudo-metric";
    case QpmClass::quasi_metric: return "quasi-metric";
    case QpmClass::t1_quasi_metric: return "T1-quasi-metric";
  }
  return "invalid";
}

std::string QpmValidation::describe() const {
  if (!valid()) return "invalid (" + violated_axiom + ")";
  if (symmetric) {
    if (klass == QpmClass::t1_quasi_metric) return "metric";
    return "pseudo-metric";
  }
  return qpm_class_name(klass);
}

QpmValidation validate_qpm(const DistanceTable& d) {
  QpmValidation v;
  const std::size_t n = d.size();
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (d.at(x, y) < 0) {
        v.violated_axiom = "nonnegativity";
        v.witness = std::array<std::size_t, 3>{x, y, y};
        return v;
      }
  for (std::size_t x = 0; x < n; ++x)
    if (d.at(x, x) != 0) {
      v.violated_axiom = "zero_diagonal";
      v.witness = std::array<std::size_t, 3>{x, x, x};
      return v;
    }
  Rational sum;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z) {
        sum = d.at(x, y) + d.at(y, z);
        if (d.at(x, z) > sum) {
          v.violated_axiom = "triangle";
          v.witness = std::array<std::size_t, 3>{x, y, z};
          return v;
        }
      }
  bool t0 = true, t1 = true, sym = true;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (d.at(x, y) != d.at(y, x)) sym = false;
      if (x == y) continue;
      if (d.at(x, y) == 0) {
        t1 = false;
        if (d.at(y, x) == 0) t0 = false;
      }
    }
  v.symmetric = sym;
  v.klass = t1 ? QpmClass::t1_quasi_metric : t0 ? QpmClass::quasi_metric : QpmClass::quasi_pseudo_metric;
  return v;
}

CheckReport check_qpm(const std::string& name, const DistanceTable& d) {
  const auto v = validate_qpm(d);
  CheckReport r;
  r.suite = "qpm";
  r.name = name;
  r.paper_anchor = "Quasi-pseudo-metric axioms";
  r.observe("class", v.describe());
  if (v.witness) {
    const auto& w = *v.witness;
    r.observe("witness", std::to_string(w[0]) + "," + std::to_string(w[1]) + "," + std::to_string(w[2]));
  }
  r.expect("class", "quasi-pseudo-metric or stronger");
  r.status = status_from(v.valid());
  return r;
}

DistanceTable encode_preorder(const FinitePreorder& p) {
  DistanceTable d(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) d.at(x, y) = p.leq(x, y) ? 0 : 1;
  return d;
}

DistanceTable symmetrize(const DistanceTable& d) {
  DistanceTable s(d.size());
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y) s.at(x, y) = std::max(d.at(x, y), d.at(y, x));
  return s;
}

FinitePreorder induced_preorder(const DistanceTable& d) {
  std::vector<Mask> rows(d.size(), 0);
  for (std::size_t x = 0; x < d.size(); ++x)
    for (std::size_t y = 0; y < d.size(); ++y)
      if (d.at(x, y) == 0) rows[x] |= bit(y);
  return FinitePreorder::from_rows(d.size(), std::move(rows));
}

FiniteTopology induced_topology(const DistanceTable& d) {
  const std::size_t n = d.size();
  // Radii strictly above each distinct distance value realise every ball;
  // a ball of radius r is fixed by which distances fall below r.
  std::set<Rational> values(d.entries().begin(), d.entries().end());
  std::vector<Mask> balls;
  for (std::size_t x = 0; x < n; ++x) {
    for (const auto& r : values) {
      if (r <= 0) continue;
      Mask ball = 0;
      for (std::size_t y = 0; y < n; ++y)
        if (d.at(x, y) < r) ball |= bit(y);
      balls.push_back(ball);
    }
    // Radius smaller than every positive distance.
    Mask core = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (d.at(x, y) <= 0) core |= bit(y);
    balls.push_back(core);
  }
  return topology_from_subbasis(n, balls);
}

DistanceTable construct_d1(const FinitePreorder& p, const BaseMetric& d) {
  require_same_size(p.size(), d.size(), "construct_d1");
  if (!d.one_bounded()) throw Error(Errc::not_one_bounded, "construct_d1 needs a 1-bounded base metric");
  DistanceTable out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) out.at(x, y) = p.leq(x, y) ? d.at(x, y) : Rational(1);
  return out;
}

DistanceTable construct_d2(const FinitePreorder& p, const BaseMetric& d) {
  return construct_d2_param(p, d, 1, 2);
}

DistanceTable construct_d2_param(const FinitePreorder& p, const BaseMetric& d, const Rational& k,
                                 const Rational& m) {
  require_same_size(p.size(), d.size(), "construct_d2_param");
  if (m <= 0 || k < 0 || k > m)
    throw Error(Errc::param_out_of_range, "need m > 0 and 0 <= k <= m, got k=" + to_string(k) + " m=" + to_string(m));
  const Rational related = k / m;
  const Rational offset = k / m;
  const Rational slope = (m - k) / m;
  DistanceTable out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      out.at(x, y) = p.leq(x, y) ? Rational(related * d.at(x, y)) : Rational(offset + slope * d.at(x, y));
  return out;
}

DistanceTable construct_d3(const FinitePreorder& p, const Utility& u) {
  require_weak_utility(p, u);
  DistanceTable out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y))
        out.at(x, y) = 0;
      else if (p.strictly_less(y, x))
        out.at(x, y) = 1 + abs(u[x] - u[y]);
      else
        out.at(x, y) = 1;
    }
  return out;
}

DistanceTable construct_d4(const FinitePreorder& p, const Utility& u) {
  require_weak_utility(p, u);
  const Rational half(1, 2);
  DistanceTable out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (p.leq(x, y))
        out.at(x, y) = (u[y] - u[x]) / 2;
      else if (p.strictly_less(y, x))
        out.at(x, y) = half + (u[x] - u[y]) / 2;
      else
        out.at(x, y) = half;
    }
  return out;
}

Utility default_weak_utility(const FinitePreorder& p) {
  Utility u(p.size());
  const Rational den(static_cast<long>(p.size()) + 2);
  for (std::size_t x = 0; x < p.size(); ++x)
    u[x] = Rational(static_cast<long>(1 + lower_contour(p, x).size())) / den;
  return u;
}

}  // namespace ordtopia
