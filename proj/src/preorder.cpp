#include "ordtopia/preorder.hpp"

#include "ordtopia/error.hpp"

#include <bit>
#include <string>

namespace ordtopia {

namespace {

void check_carrier(std::size_t n) {
  if (n > kMaxCarrier)
    throw Error(Errc::carrier_too_large, "carrier of " + std::to_string(n) + " exceeds 64");
}

void check_index(std::size_t n, std::size_t i) {
  if (i >= n)
    throw Error(Errc::index_out_of_range,
                "index " + std::to_string(i) + " on carrier of " + std::to_string(n));
}

// Warshall on bit rows.
void close_transitively(std::vector<Mask>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (rows[i] & bit(k)) rows[i] |= rows[k];
}

}  // namespace

ElementSet::ElementSet(std::size_t n, Mask members) : n_(n), members_(members) {
  check_carrier(n);
  if ((members & ~full_mask(n)) != 0)
    throw Error(Errc::index_out_of_range, "set member outside carrier");
}

ElementSet ElementSet::of(std::size_t n, std::initializer_list<std::size_t> elems) {
  Mask m = 0;
  for (auto e : elems) {
    check_index(n, e);
    m |= bit(e);
  }
  return {n, m};
}

std::size_t ElementSet::size() const noexcept { return static_cast<std::size_t>(std::popcount(members_)); }

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (members_ & bit(i)) out.push_back(i);
  return out;
}

FinitePreorder FinitePreorder::from_pairs(std::size_t n, const std::vector<Pair>& pairs) {
  check_carrier(n);
  std::vector<Mask> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = bit(i);
  for (auto [i, j] : pairs) {
    check_index(n, i);
    check_index(n, j);
    rows[i] |= bit(j);
  }
  close_transitively(rows);
  return {n, std::move(rows)};
}

FinitePreorder FinitePreorder::from_rows(std::size_t n, std::vector<Mask> rows) {
  check_carrier(n);
  if (rows.size() != n) throw Error(Errc::size_mismatch, "row count differs from carrier size");
  for (std::size_t i = 0; i < n; ++i) {
    if ((rows[i] & ~full_mask(n)) != 0) throw Error(Errc::index_out_of_range, "row bit outside carrier");
    if (!(rows[i] & bit(i)))
      throw Error(Errc::invalid_argument, "relation not reflexive at " + std::to_string(i));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((rows[i] & bit(j)) && (rows[j] & ~rows[i]))
        throw Error(Errc::invalid_argument, "relation not transitive through " + std::to_string(j));
  return {n, std::move(rows)};
}

FinitePreorder FinitePreorder::identity(std::size_t n) { return from_pairs(n, {}); }

FinitePreorder FinitePreorder::total_indifference(std::size_t n) {
  check_carrier(n);
  return {n, std::vector<Mask>(n, full_mask(n))};
}

FinitePreorder FinitePreorder::chain(std::size_t n) {
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return from_pairs(n, pairs);
}

bool FinitePreorder::leq(std::size_t x, std::size_t y) const {
  check_index(n_, x);
  check_index(n_, y);
  return (rows_[x] & bit(y)) != 0;
}

std::vector<FinitePreorder::Pair> FinitePreorder::off_diagonal_pairs() const {
  std::vector<Pair> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (i != j && (rows_[i] & bit(j))) out.emplace_back(i, j);
  return out;
}

ElementSet lower_contour(const FinitePreorder& p, std::size_t y) {
  check_index(p.size(), y);
  Mask m = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.rows()[x] & bit(y)) m |= bit(x);
  return {p.size(), m};
}

ElementSet upper_contour(const FinitePreorder& p, std::size_t y) {
  check_index(p.size(), y);
  return {p.size(), p.rows()[y]};
}

bool refines(const FinitePreorder& p, const FinitePreorder& q) {
  if (p.size() != q.size()) throw Error(Errc::size_mismatch, "refines: carrier sizes differ");
  for (std::size_t i = 0; i < p.size(); ++i)
    if (q.rows()[i] & ~p.rows()[i]) return false;
  return true;
}

FinitePreorder dual(const FinitePreorder& p) {
  std::vector<Mask> rows(p.size());
  for (std::size_t y = 0; y < p.size(); ++y) rows[y] = lower_contour(p, y).mask();
  return FinitePreorder::from_rows(p.size(), std::move(rows));
}

bool incomparable(const FinitePreorder& p, std::size_t x, std::size_t y) {
  return !p.leq(x, y) && !p.leq(y, x);
}

std::vector<FinitePreorder> all_preorders(std::size_t n) {
  if (n > 5) throw Error(Errc::carrier_too_large, "preorder enumeration is capped at 5 elements");
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<FinitePreorder> out;
  const std::uint64_t combos = std::uint64_t{1} << slots.size();
  std::vector<Mask> rows(n);
  for (std::uint64_t code = 0; code < combos; ++code) {
    for (std::size_t i = 0; i < n; ++i) rows[i] = bit(i);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (code & (std::uint64_t{1} << s)) rows[slots[s].first] |= bit(slots[s].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if ((rows[i] & bit(j)) && (rows[j] & ~rows[i])) transitive = false;
    if (transitive) out.push_back(FinitePreorder(n, rows));
  }
  return out;
}

}  // namespace ordtopia
