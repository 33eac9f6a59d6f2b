#include "ordtopia/topology.hpp"

#include "ordtopia/error.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace ordtopia {

namespace {

void check_topology_carrier(std::size_t n) {
  if (n > kMaxTopologyCarrier)
    throw Error(Errc::carrier_too_large,
                "explicit open-set enumeration is capped at 16 elements, got " + std::to_string(n));
}

void require_same_size(std::size_t a, std::size_t b, const char* what) {
  if (a != b) throw Error(Errc::size_mismatch, std::string(what) + ": carrier sizes differ");
}

// All unions of the given per-point minimal neighbourhoods.
std::vector<Mask> unions_of_neighbourhoods(std::size_t n, const std::vector<Mask>& nbhd) {
  const std::size_t count = std::size_t{1} << n;
  std::vector<Mask> union_of(count, 0);
  std::vector<char> seen(count, 0);
  seen[0] = 1;
  for (std::size_t pts = 1; pts < count; ++pts) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(pts));
    union_of[pts] = union_of[pts & (pts - 1)] | nbhd[low];
    seen[union_of[pts]] = 1;
  }
  std::vector<Mask> opens;
  for (std::size_t s = 0; s < count; ++s)
    if (seen[s]) opens.push_back(s);
  return opens;
}

CheckReport biconditional(const char* suite, const char* name, const char* anchor, bool lhs, bool rhs,
                          const char* lhs_label, const char* rhs_label) {
  CheckReport r;
  r.suite = suite;
  r.name = name;
  r.paper_anchor = anchor;
  r.observe(lhs_label, lhs ? "true" : "false");
  r.observe(rhs_label, rhs ? "true" : "false");
  r.expect("agreement", "true");
  r.status = status_from(lhs == rhs);
  return r;
}

}  // namespace

FiniteTopology::FiniteTopology(std::size_t n, std::vector<Mask> opens) : n_(n), opens_(std::move(opens)) {}

FiniteTopology FiniteTopology::from_opens(std::size_t n, std::vector<Mask> opens) {
  check_topology_carrier(n);
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  const Mask full = full_mask(n);
  for (Mask s : opens)
    if (s & ~full) throw Error(Errc::index_out_of_range, "open set outside carrier");
  if (opens.empty() || opens.front() != 0 || !std::binary_search(opens.begin(), opens.end(), full))
    throw Error(Errc::invalid_argument, "family must contain the empty set and the carrier");
  for (Mask a : opens)
    for (Mask b : opens)
      if (!std::binary_search(opens.begin(), opens.end(), a | b) ||
          !std::binary_search(opens.begin(), opens.end(), a & b))
        throw Error(Errc::invalid_argument, "family not closed under union/intersection");
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology FiniteTopology::discrete(std::size_t n) {
  check_topology_carrier(n);
  std::vector<Mask> opens(std::size_t{1} << n);
  for (std::size_t s = 0; s < opens.size(); ++s) opens[s] = s;
  return FiniteTopology(n, std::move(opens));
}

FiniteTopology FiniteTopology::indiscrete(std::size_t n) {
  check_topology_carrier(n);
  if (n == 0) return FiniteTopology(0, {0});
  return FiniteTopology(n, {0, full_mask(n)});
}

bool FiniteTopology::is_open(Mask s) const { return std::binary_search(opens_.begin(), opens_.end(), s); }

Mask FiniteTopology::minimal_neighbourhood(std::size_t x) const {
  if (x >= n_) throw Error(Errc::index_out_of_range, "point outside carrier");
  Mask m = full_mask(n_);
  for (Mask s : opens_)
    if (s & bit(x)) m &= s;
  return m;
}

FiniteTopology topology_from_subbasis(std::size_t n, const std::vector<Mask>& sets) {
  check_topology_carrier(n);
  const Mask full = full_mask(n);
  // Minimal basic neighbourhood of x: the intersection of every subbasic set
  // containing x (finite intersections form the base).
  std::vector<Mask> nbhd(n, full);
  for (Mask s : sets) {
    if (s & ~full) throw Error(Errc::index_out_of_range, "subbasic set outside carrier");
    for (std::size_t x = 0; x < n; ++x)
      if (s & bit(x)) nbhd[x] &= s;
  }
  return FiniteTopology(n, unions_of_neighbourhoods(n, nbhd));
}

FiniteTopology upper_topology(const FinitePreorder& p) {
  std::vector<Mask> sub;
  for (std::size_t x = 0; x < p.size(); ++x) sub.push_back(lower_contour(p, x).complement().mask());
  return topology_from_subbasis(p.size(), sub);
}

FiniteTopology lower_topology(const FinitePreorder& p) { return upper_topology(dual(p)); }

bool is_up_set(const FinitePreorder& p, Mask s) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if ((s & bit(x)) && (p.rows()[x] & ~s)) return false;
  return true;
}

FiniteTopology alexandroff_topology(const FinitePreorder& p) {
  check_topology_carrier(p.size());
  std::vector<Mask> opens;
  const Mask count = bit(p.size());
  for (Mask s = 0; s < count; ++s)
    if (is_up_set(p, s)) opens.push_back(s);
  return FiniteTopology(p.size(), std::move(opens));
}

FinitePreorder specialization_preorder(const FiniteTopology& t) {
  std::vector<Mask> rows(t.size());
  for (std::size_t x = 0; x < t.size(); ++x) rows[x] = t.minimal_neighbourhood(x);
  return FinitePreorder::from_rows(t.size(), std::move(rows));
}

bool finer_than(const FiniteTopology& fine, const FiniteTopology& coarse) {
  require_same_size(fine.size(), coarse.size(), "finer_than");
  return std::includes(fine.opens().begin(), fine.opens().end(), coarse.opens().begin(), coarse.opens().end());
}

FiniteTopology join_topology(const FiniteTopology& a, const FiniteTopology& b) {
  require_same_size(a.size(), b.size(), "join_topology");
  std::vector<Mask> sub = a.opens();
  sub.insert(sub.end(), b.opens().begin(), b.opens().end());
  return topology_from_subbasis(a.size(), sub);
}

bool is_lower_continuous(const FinitePreorder& p, const FiniteTopology& t) {
  require_same_size(p.size(), t.size(), "is_lower_continuous");
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!t.is_open(lower_contour(p, x).complement().mask())) return false;
  return true;
}

bool is_continuous(const FinitePreorder& p, const FiniteTopology& t) {
  if (!is_lower_continuous(p, t)) return false;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!t.is_open(upper_contour(p, x).complement().mask())) return false;
  return true;
}

CheckReport check_cont1(const FinitePreorder& p, const FiniteTopology& t) {
  const bool cont = is_continuous(p, t);
  const bool finer = finer_than(t, join_topology(upper_topology(p), lower_topology(p)));
  return biconditional("topo", "cont1", "Theorem Cont1", cont, finer, "continuous", "finer_than_join");
}

CheckReport check_cont2(const FinitePreorder& p, const FiniteTopology& t) {
  const bool cont = is_lower_continuous(p, t);
  const bool finer = finer_than(t, upper_topology(p));
  return biconditional("topo", "cont2", "Theorem Cont2", cont, finer, "lower_continuous", "finer_than_upper");
}

CheckReport check_lgiltza(const FinitePreorder& p, const FinitePreorder& q) {
  const bool ref = refines(p, q);
  const bool incl = finer_than(alexandroff_topology(q), alexandroff_topology(p));
  return biconditional("topo", "lgiltza", "Lemma Lgiltza", ref, incl, "refines", "alexandroff_reverse_inclusion");
}

std::vector<FiniteTopology> all_topologies(std::size_t n) {
  if (n > 4) throw Error(Errc::carrier_too_large, "topology enumeration is capped at 4 elements");
  const Mask full = full_mask(n);
  std::vector<Mask> middle;
  for (Mask s = 1; s < full; ++s) middle.push_back(s);
  std::vector<FiniteTopology> out;
  const std::uint64_t families = std::uint64_t{1} << middle.size();
  std::vector<char> in(std::size_t{1} << n);
  for (std::uint64_t code = 0; code < families; ++code) {
    std::fill(in.begin(), in.end(), 0);
    in[0] = 1;
    in[full] = 1;
    std::vector<Mask> fam{0};
    for (std::size_t k = 0; k < middle.size(); ++k)
      if (code & (std::uint64_t{1} << k)) {
        in[middle[k]] = 1;
        fam.push_back(middle[k]);
      }
    if (full != 0) fam.push_back(full);
    bool closed = true;
    for (std::size_t i = 0; i < fam.size() && closed; ++i)
      for (std::size_t j = i + 1; j < fam.size() && closed; ++j)
        closed = in[fam[i] | fam[j]] && in[fam[i] & fam[j]];
    if (closed) {
      std::sort(fam.begin(), fam.end());
      out.push_back(FiniteTopology::from_opens(n, std::move(fam)));
    }
  }
  return out;
}

UtilityFamily multi_utility(const FinitePreorder& p) {
  UtilityFamily fam;
  fam.n = p.size();
  for (std::size_t z = 0; z < p.size(); ++z) {
    Utility u(p.size());
    for (std::size_t w = 0; w < p.size(); ++w) u[w] = p.leq(z, w) ? 1 : 0;
    fam.members.push_back(std::move(u));
  }
  return fam;
}

FinitePreorder represented_preorder(const UtilityFamily& family) {
  const std::size_t n = family.n;
  std::vector<FinitePreorder::Pair> pairs;
  for (const auto& u : family.members)
    if (u.size() != n) throw Error(Errc::size_mismatch, "utility length differs from carrier size");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      bool all = true;
      for (const auto& u : family.members) all = all && u[x] <= u[y];
      if (all && x != y) pairs.emplace_back(x, y);
    }
  // Pointwise dominance over a family is already transitive; from_rows
  // re-checks that.
  std::vector<Mask> rows(n);
  for (std::size_t x = 0; x < n; ++x) rows[x] = bit(x);
  for (auto [x, y] : pairs) rows[x] |= bit(y);
  return FinitePreorder::from_rows(n, std::move(rows));
}

bool is_isotonic(const FinitePreorder& p, const Utility& u) {
  if (u.size() != p.size()) throw Error(Errc::size_mismatch, "utility length differs from carrier size");
  for (std::size_t x = 0; x < p.size(); ++x)
    for (std::size_t y = 0; y < p.size(); ++y)
      if (p.leq(x, y) && u[x] > u[y]) return false;
  return true;
}

bool is_lower_semicontinuous(const Utility& u, const FiniteTopology& t) {
  require_same_size(u.size(), t.size(), "is_lower_semicontinuous");
  // Thresholds at the distinct values; anything strictly below the minimum
  // yields the whole carrier, which is always open.
  std::set<Rational> levels(u.begin(), u.end());
  for (const auto& a : levels) {
    Mask s = 0;
    for (std::size_t x = 0; x < u.size(); ++x)
      if (u[x] > a) s |= bit(x);
    if (!t.is_open(s)) return false;
  }
  return true;
}

}  // namespace ordtopia
