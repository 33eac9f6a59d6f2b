#include "oracles.hpp"

#include "ordtopia/error.hpp"
#include "ordtopia/random.hpp"
#include "ordtopia/topology.hpp"

#include <doctest.h>

using namespace ordtopia;

TEST_CASE("subbasis saturation matches the fixed-point oracle") {
  Rng rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = trial % 7;
    std::uniform_int_distribution<Mask> pick(0, full_mask(n));
    std::vector<Mask> sub(1 + trial % 5);
    for (auto& s : sub) s = pick(rng);
    CHECK(oracle::opens_of(topology_from_subbasis(n, sub)) == oracle::saturate(n, sub));
  }
}

TEST_CASE("from_opens rejects non-topologies") {
  CHECK_THROWS_AS(FiniteTopology::from_opens(2, {0b01, 0b11}), Error);   // no empty set
  CHECK_THROWS_AS(FiniteTopology::from_opens(2, {0, 0b01}), Error);      // no carrier
  CHECK_THROWS_AS(FiniteTopology::from_opens(3, {0, 0b001, 0b010, 0b111}), Error);
  CHECK_NOTHROW(FiniteTopology::from_opens(3, {0, 0b001, 0b010, 0b011, 0b111}));
  CHECK_THROWS_AS(FiniteTopology::discrete(17), Error);
}

TEST_CASE("upper topology of a chain") {
  // Complements of the lower contours of 0 < 1 < 2 are {1,2}, {2}, {}.
  const auto t = upper_topology(FinitePreorder::chain(3));
  CHECK(oracle::opens_of(t) == std::set<Mask>{0, 0b100, 0b110, 0b111});
}

TEST_CASE("upper topology of total indifference is indiscrete") {
  CHECK(upper_topology(FinitePreorder::total_indifference(4)).opens() == FiniteTopology::indiscrete(4).opens());
}

TEST_CASE("alexandroff topology of the identity is discrete") {
  CHECK(alexandroff_topology(FinitePreorder::identity(3)).opens() == FiniteTopology::discrete(3).opens());
}

TEST_CASE("constructions agree with oracles on every preorder of 4 points") {
  for (const auto& p : all_preorders(4)) {
    CHECK(oracle::opens_of(upper_topology(p)) == oracle::upper_topology(p));
    CHECK(oracle::opens_of(alexandroff_topology(p)) == oracle::alexandroff(p));
    CHECK(oracle::opens_of(lower_topology(p)) == oracle::upper_topology(dual(p)));
  }
}

TEST_CASE("upper and alexandroff topologies coincide on finite carriers") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& p : all_preorders(n)) CHECK(upper_topology(p).opens() == alexandroff_topology(p).opens());
}

TEST_CASE("specialization preorder round trip") {
  for (const auto& p : all_preorders(4)) CHECK(specialization_preorder(alexandroff_topology(p)) == p);
  CHECK(specialization_preorder(FiniteTopology::indiscrete(3)) == FinitePreorder::total_indifference(3));
  CHECK(specialization_preorder(FiniteTopology::discrete(3)) == FinitePreorder::identity(3));
}

TEST_CASE("finer_than and join") {
  const auto d = FiniteTopology::discrete(3);
  const auto i = FiniteTopology::indiscrete(3);
  CHECK(finer_than(d, i));
  CHECK_FALSE(finer_than(i, d));
  CHECK(finer_than(d, d));
  const auto a = FiniteTopology::from_opens(3, {0, 0b001, 0b111});
  const auto b = FiniteTopology::from_opens(3, {0, 0b010, 0b111});
  const auto j = join_topology(a, b);
  CHECK(oracle::opens_of(j) == std::set<Mask>{0, 0b001, 0b010, 0b011, 0b111});
  CHECK(finer_than(j, a));
  CHECK(finer_than(j, b));
  CHECK_THROWS_AS(finer_than(d, FiniteTopology::discrete(2)), Error);
}

TEST_CASE("topology enumeration") {
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) CHECK(all_topologies(n).size() == expected[n]);
  // Families of subsets of a 3-set that saturate to themselves.
  std::set<std::set<Mask>> brute;
  for (std::uint32_t code = 0; code < (1u << 8); ++code) {
    std::vector<Mask> fam;
    for (Mask s = 0; s < 8; ++s)
      if (code >> s & 1) fam.push_back(s);
    const std::set<Mask> given(fam.begin(), fam.end());
    if (given.count(0) && given.count(7) && oracle::saturate(3, fam) == given) brute.insert(given);
  }
  std::set<std::set<Mask>> lib;
  for (const auto& t : all_topologies(3)) lib.insert(oracle::opens_of(t));
  CHECK(lib == brute);
  CHECK_THROWS_AS(all_topologies(5), Error);
}

TEST_CASE("continuity predicates agree with contour-closure oracle") {
  for (const auto& t : all_topologies(3))
    for (const auto& p : all_preorders(3)) {
      const auto opens = oracle::opens_of(t);
      CHECK(is_lower_continuous(p, t) == oracle::lower_continuous(p, opens));
      CHECK(is_continuous(p, t) == oracle::continuous(p, opens));
    }
}

TEST_CASE("continuity examples") {
  CHECK(is_continuous(FinitePreorder::chain(3), FiniteTopology::discrete(3)));
  CHECK_FALSE(is_lower_continuous(FinitePreorder::chain(3), FiniteTopology::indiscrete(3)));
  CHECK(is_continuous(FinitePreorder::total_indifference(3), FiniteTopology::indiscrete(3)));
}

TEST_CASE("continuity biconditionals hold exhaustively on 3 points") {
  for (const auto& t : all_topologies(3))
    for (const auto& p : all_preorders(3)) {
      CHECK(check_cont1(p, t).passed());
      CHECK(check_cont2(p, t).passed());
    }
}

TEST_CASE("continuity biconditionals on random pairs") {
  Rng rng(5);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 4 + i % 2;
    const auto p = random_preorder(n, rng, 0.3);
    const auto t = random_topology(n, rng, 1 + i % 8);
    const auto opens = oracle::opens_of(t);
    const auto cont = check_cont2(p, t);
    CHECK(cont.passed());
    const auto upper = oracle::upper_topology(p);
    CHECK(oracle::lower_continuous(p, opens) == std::includes(opens.begin(), opens.end(), upper.begin(), upper.end()));
  }
}

TEST_CASE("cont reports carry anchors and observations") {
  const auto r = check_cont2(FinitePreorder::chain(2), FiniteTopology::discrete(2));
  CHECK(r.paper_anchor == "Theorem Cont2");
  CHECK(r.observed.size() == 2);
  CHECK(r.status == Status::pass);
}

TEST_CASE("refinement reverses alexandroff inclusion on 4 points") {
  const auto ps = all_preorders(4);
  for (std::size_t i = 0; i < ps.size(); i += 3)
    for (const auto& q : ps) {
      CHECK(check_lgiltza(ps[i], q).passed());
      const auto ap = oracle::alexandroff(ps[i]);
      const auto aq = oracle::alexandroff(q);
      CHECK(refines(ps[i], q) == std::includes(aq.begin(), aq.end(), ap.begin(), ap.end()));
    }
}

TEST_CASE("indicator family reconstructs every preorder on 5 points") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& p : all_preorders(n)) {
      const auto fam = multi_utility(p);
      CHECK(represented_preorder(fam) == p);
      const auto alex = alexandroff_topology(p);
      for (const auto& u : fam.members) {
        CHECK(is_isotonic(p, u));
        CHECK(is_lower_semicontinuous(u, alex));
      }
    }
}

TEST_CASE("indicator family on a chain") {
  const auto fam = multi_utility(FinitePreorder::chain(3));
  REQUIRE(fam.members.size() == 3);
  CHECK(fam.members[1] == Utility{0, 1, 1});
}

TEST_CASE("lower semicontinuity") {
  const auto t = FiniteTopology::from_opens(2, {0, 0b10, 0b11});
  CHECK(is_lower_semicontinuous(Utility{0, 1}, t));
  CHECK_FALSE(is_lower_semicontinuous(Utility{1, 0}, t));
  CHECK(is_lower_semicontinuous(Utility{3, 3}, FiniteTopology::indiscrete(2)));
  CHECK_FALSE(is_isotonic(FinitePreorder::chain(2), Utility{1, 0}));
}
