#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

namespace ordtopia {

/// Largest carrier a bit-row relation can hold.
inline constexpr std::size_t kMaxCarrier = 64;

using Mask = std::uint64_t;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }
inline constexpr Mask full_mask(std::size_t n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

/// A subset of the carrier {0, ..., n-1}.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t n, Mask members);

  static ElementSet of(std::size_t n, std::initializer_list<std::size_t> elems);

  std::size_t carrier_size() const noexcept { return n_; }
  Mask mask() const noexcept { return members_; }
  bool contains(std::size_t i) const noexcept { return i < n_ && (members_ & bit(i)) != 0; }
  std::size_t size() const noexcept;
  std::vector<std::size_t> elements() const;

  ElementSet complement() const { return {n_, full_mask(n_) & ~members_}; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t n_ = 0;
  Mask members_ = 0;
};

/// Reflexive, transitive relation on a dense carrier. Row i holds the upper
/// contour {j : i <= j}.
class FinitePreorder {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  /// Smallest preorder containing `pairs` (reflexive-transitive closure).
  static FinitePreorder from_pairs(std::size_t n, const std::vector<Pair>& pairs);

  /// Adopts rows as-is; throws InvalidArgument unless they already form a
  /// preorder.
  static FinitePreorder from_rows(std::size_t n, std::vector<Mask> rows);

  static FinitePreorder identity(std::size_t n);
  static FinitePreorder total_indifference(std::size_t n);
  /// 0 < 1 < ... < n-1.
  static FinitePreorder chain(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  const std::vector<Mask>& rows() const noexcept { return rows_; }

  bool leq(std::size_t x, std::size_t y) const;
  bool strictly_less(std::size_t x, std::size_t y) const { return leq(x, y) && !leq(y, x); }
  bool equivalent(std::size_t x, std::size_t y) const { return leq(x, y) && leq(y, x); }

  /// Related pairs with i != j, row-major.
  std::vector<Pair> off_diagonal_pairs() const;

  friend bool operator==(const FinitePreorder&, const FinitePreorder&) = default;
  friend std::vector<FinitePreorder> all_preorders(std::size_t n);

 private:
  FinitePreorder(std::size_t n, std::vector<Mask> rows) : n_(n), rows_(std::move(rows)) {}

  std::size_t n_ = 0;
  std::vector<Mask> rows_;
};

/// {x : x <= y}
ElementSet lower_contour(const FinitePreorder& p, std::size_t y);
/// {x : y <= x}
ElementSet upper_contour(const FinitePreorder& p, std::size_t y);

/// True iff every pair related by `q` is related by `p` (p refines q).
bool refines(const FinitePreorder& p, const FinitePreorder& q);

FinitePreorder dual(const FinitePreorder& p);

bool incomparable(const FinitePreorder& p, std::size_t x, std::size_t y);

/// Every preorder on an n-element carrier, n <= 5 (1, 1, 4, 29, 355, 6942).
std::vector<FinitePreorder> all_preorders(std::size_t n);

}  // namespace ordtopia
