#pragma once

#include "ordtopia/preorder.hpp"
#include "ordtopia/rational.hpp"
#include "ordtopia/report.hpp"

#include <vector>

namespace ordtopia {

/// Open sets are enumerated explicitly, so the carrier is capped here.
inline constexpr std::size_t kMaxTopologyCarrier = 16;

/// A topology on {0, ..., n-1}, stored as its sorted family of open sets.
class FiniteTopology {
 public:
  /// Validates that `opens` contains the empty set and the carrier and is
  /// closed under pairwise union and intersection.
  static FiniteTopology from_opens(std::size_t n, std::vector<Mask> opens);

  static FiniteTopology discrete(std::size_t n);
  static FiniteTopology indiscrete(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Mask>& opens() const noexcept { return opens_; }
  bool is_open(Mask s) const;

  /// Smallest open set containing x.
  Mask minimal_neighbourhood(std::size_t x) const;

  friend bool operator==(const FiniteTopology&, const FiniteTopology&) = default;

 private:
  friend FiniteTopology topology_from_subbasis(std::size_t, const std::vector<Mask>&);
  friend FiniteTopology alexandroff_topology(const FinitePreorder&);

  FiniteTopology(std::size_t n, std::vector<Mask> opens);

  std::size_t n_ = 0;
  std::vector<Mask> opens_;
};

FiniteTopology topology_from_subbasis(std::size_t n, const std::vector<Mask>& sets);

/// Generated by the complements of the lower contours.
FiniteTopology upper_topology(const FinitePreorder& p);
/// Generated by the complements of the upper contours.
FiniteTopology lower_topology(const FinitePreorder& p);
/// All up-sets.
FiniteTopology alexandroff_topology(const FinitePreorder& p);

bool is_up_set(const FinitePreorder& p, Mask s);

FinitePreorder specialization_preorder(const FiniteTopology& t);

/// True iff every open set of `coarse` is open in `fine`.
bool finer_than(const FiniteTopology& fine, const FiniteTopology& coarse);

FiniteTopology join_topology(const FiniteTopology& a, const FiniteTopology& b);

/// Both contour families closed in t.
bool is_continuous(const FinitePreorder& p, const FiniteTopology& t);
/// Lower contours closed in t.
bool is_lower_continuous(const FinitePreorder& p, const FiniteTopology& t);

/// is_continuous(p,t) <=> t finer than join(upper(p), lower(p)).
CheckReport check_cont1(const FinitePreorder& p, const FiniteTopology& t);
/// is_lower_continuous(p,t) <=> t finer than upper(p).
CheckReport check_cont2(const FinitePreorder& p, const FiniteTopology& t);
/// refines(p,q) <=> alexandroff(p) is contained in alexandroff(q).
CheckReport check_lgiltza(const FinitePreorder& p, const FinitePreorder& q);

/// Every topology on n <= 4 points (1, 1, 4, 29, 355), found by filtering
/// set families directly, without going through preorders.
std::vector<FiniteTopology> all_topologies(std::size_t n);

using Utility = std::vector<Rational>;

struct UtilityFamily {
  std::size_t n = 0;
  std::vector<Utility> members;
};

/// Indicator family u_z(w) = [z <= w].
UtilityFamily multi_utility(const FinitePreorder& p);

/// x <= y iff u(x) <= u(y) for every member.
FinitePreorder represented_preorder(const UtilityFamily& family);

bool is_isotonic(const FinitePreorder& p, const Utility& u);

/// Every strict superlevel set {x : u(x) > a} is open.
bool is_lower_semicontinuous(const Utility& u, const FiniteTopology& t);

}  // namespace ordtopia
