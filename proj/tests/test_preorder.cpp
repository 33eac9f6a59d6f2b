#include "oracles.hpp"

#include "ordtopia/error.hpp"
#include "ordtopia/preorder.hpp"
#include "ordtopia/random.hpp"

#include <doctest.h>

#include <set>

using namespace ordtopia;

TEST_CASE("closure of the empty relation is the identity") {
  const auto p = FinitePreorder::from_pairs(3, {});
  CHECK(p == FinitePreorder::identity(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(p.leq(i, j) == (i == j));
}

TEST_CASE("closure adds transitive pairs") {
  const auto p = FinitePreorder::from_pairs(3, {{0, 1}, {1, 2}});
  CHECK(p.leq(0, 2));
  CHECK_FALSE(p.leq(2, 0));
  CHECK(p == FinitePreorder::chain(3));
}

TEST_CASE("closure matches graph reachability on random relations") {
  Rng rng(11);
  std::bernoulli_distribution coin(0.2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 9;
    std::vector<FinitePreorder::Pair> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (coin(rng)) pairs.emplace_back(i, j);
    CHECK(oracle::relation_of(FinitePreorder::from_pairs(n, pairs)) == oracle::closure(n, pairs));
  }
}

TEST_CASE("out-of-range pair is rejected") {
  CHECK_THROWS_AS(FinitePreorder::from_pairs(2, {{0, 2}}), Error);
  try {
    FinitePreorder::from_pairs(2, {{5, 0}});
  } catch (const Error& e) {
    CHECK(e.code() == Errc::index_out_of_range);
  }
}

TEST_CASE("carrier above 64 is rejected") {
  CHECK_THROWS_AS(FinitePreorder::identity(65), Error);
  CHECK_NOTHROW(FinitePreorder::identity(64));
}

TEST_CASE("from_rows validates reflexivity and transitivity") {
  CHECK_THROWS_AS(FinitePreorder::from_rows(2, {0b10, 0b10}), Error);
  CHECK_THROWS_AS(FinitePreorder::from_rows(3, {0b011, 0b110, 0b100}), Error);
  CHECK_NOTHROW(FinitePreorder::from_rows(3, {0b111, 0b110, 0b100}));
}

TEST_CASE("strict, equivalent, incomparable") {
  const auto p = FinitePreorder::from_pairs(4, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(p.equivalent(0, 1));
  CHECK(p.strictly_less(0, 2));
  CHECK_FALSE(p.strictly_less(0, 1));
  CHECK(incomparable(p, 3, 0));
  CHECK_FALSE(incomparable(p, 0, 2));
  const auto strict = p.off_diagonal_pairs();
  CHECK(std::set<FinitePreorder::Pair>(strict.begin(), strict.end()) ==
        std::set<FinitePreorder::Pair>{{0, 1}, {0, 2}, {1, 0}, {1, 2}});
}

TEST_CASE("contour sets") {
  const auto c = FinitePreorder::chain(3);
  CHECK(lower_contour(c, 2) == ElementSet::of(3, {0, 1, 2}));
  CHECK(lower_contour(c, 0) == ElementSet::of(3, {0}));
  CHECK(upper_contour(c, 1) == ElementSet::of(3, {1, 2}));
  CHECK(upper_contour(FinitePreorder::identity(3), 1) == ElementSet::of(3, {1}));
  CHECK(lower_contour(FinitePreorder::total_indifference(3), 0).size() == 3);
  CHECK_THROWS_AS(lower_contour(c, 3), Error);
}

TEST_CASE("contours agree with the oracle on every preorder of 4 points") {
  for (const auto& p : all_preorders(4))
    for (std::size_t x = 0; x < 4; ++x) {
      CHECK(lower_contour(p, x).mask() == oracle::lower_set(p, x));
      CHECK(upper_contour(p, x).mask() == oracle::upper_set(p, x));
    }
}

TEST_CASE("element set helpers") {
  const auto s = ElementSet::of(5, {0, 3});
  CHECK(s.contains(3));
  CHECK_FALSE(s.contains(1));
  CHECK(s.size() == 2);
  CHECK(s.elements() == std::vector<std::size_t>{0, 3});
  CHECK(s.complement() == ElementSet::of(5, {1, 2, 4}));
}

TEST_CASE("refinement and duality") {
  const auto id = FinitePreorder::identity(3);
  const auto ch = FinitePreorder::chain(3);
  const auto all = FinitePreorder::total_indifference(3);
  CHECK(refines(ch, id));
  CHECK_FALSE(refines(id, ch));
  CHECK(refines(all, ch));
  CHECK(refines(ch, ch));
  const auto d = dual(ch);
  CHECK(d.leq(2, 0));
  CHECK_FALSE(d.leq(0, 2));
  CHECK(dual(d) == ch);
  CHECK_THROWS_AS(refines(id, FinitePreorder::identity(2)), Error);
}

TEST_CASE("preorder enumeration matches brute-force relation filtering") {
  const std::size_t expected_counts[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) {
    const auto lib = all_preorders(n);
    const auto brute = oracle::all_preorder_relations(n);
    CHECK(lib.size() == expected_counts[n]);
    std::set<oracle::Relation> a, b(brute.begin(), brute.end());
    for (const auto& p : lib) a.insert(oracle::relation_of(p));
    CHECK(a == b);
    CHECK(a.size() == lib.size());
  }
  CHECK(all_preorders(5).size() == 6942);
  CHECK_THROWS_AS(all_preorders(6), Error);
}
