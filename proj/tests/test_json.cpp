#include "ordtopia/error.hpp"
#include "ordtopia/json_io.hpp"
#include "ordtopia/random.hpp"

#include <doctest.h>

using namespace ordtopia;

namespace {

CheckReport make(std::string suite, std::string name, Status s) {
  CheckReport r;
  r.suite = std::move(suite);
  r.name = std::move(name);
  r.paper_anchor = "Theorem Cont1";
  r.status = s;
  r.observe("value", "1/2");
  r.expect("value", "1/2");
  r.elapsed_ms = 5;
  return r;
}

}  // namespace

TEST_CASE("preorder json lists the closed relation without reflexive pairs") {
  const auto j = to_json(FinitePreorder::chain(3));
  CHECK(j.dump() == R"({"n":3,"pairs":[[0,1],[0,2],[1,2]]})");
  CHECK(preorder_from_json(j) == FinitePreorder::chain(3));
  CHECK_THROWS_AS(preorder_from_json(Json::parse(R"({"pairs":[]})")), Error);
  CHECK_THROWS_AS(preorder_from_json(Json::parse(R"({"n":2,"pairs":[[0,3]]})")), Error);
}

TEST_CASE("topology json sorts opens lexicographically") {
  const auto j = to_json(upper_topology(FinitePreorder::chain(3)));
  CHECK(j.dump() == R"({"n":3,"opens":[[],[0,1,2],[1,2],[2]]})");
  CHECK(topology_from_json(j).opens() == upper_topology(FinitePreorder::chain(3)).opens());
  CHECK_THROWS_AS(topology_from_json(Json::parse(R"({"n":2,"opens":[[0]]})")), Error);
}

TEST_CASE("distance table json uses p/q strings") {
  DistanceTable d(2, {0, Rational(1, 3), 1, 0});
  const auto j = to_json(d);
  CHECK(j.dump() == R"({"n":2,"dist":[["0/1","1/3"],["1/1","0/1"]]})");
  CHECK(distance_table_from_json(j) == d);
  CHECK_THROWS_AS(distance_table_from_json(Json::parse(R"({"n":2,"dist":[["0"]]})")), Error);
}

TEST_CASE("sequence json round trip") {
  Rng rng(67);
  for (int i = 0; i < 50; ++i) {
    const auto x = random_stream(i % 5, rng);
    CHECK(seq_from_json(to_json(x)) == x);
  }
  const SeqModel c = SeqModel::of({Rational(1, 2)}, Tail::constant(Rational(1, 4)));
  CHECK(to_json(c).dump() == R"({"prefix":["1/2"],"tail":{"kind":"const","value":"1/4","offset":0}})");
  CHECK(seq_from_json(to_json(c)) == c);
  const SeqModel n = SeqModel::of({}, Tail::named("svensson-blocks", 3));
  CHECK(seq_from_json(to_json(n)) == n);
  CHECK_THROWS_AS(seq_from_json(Json::parse(R"({"prefix":[],"tail":{"kind":"weird"}})")), Error);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("-2") == -2);
  CHECK(to_string(Rational(2)) == "2/1");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("check report round trip keeps timing outside the checks") {
  const auto doc = report_document({make("b", "y", Status::fail), make("a", "x", Status::pass)});
  CHECK(doc["schema"] == 1);
  CHECK(doc["summary"]["pass"] == 1);
  CHECK(doc["summary"]["fail"] == 1);
  CHECK(doc["checks"][0]["suite"] == "a");
  CHECK_FALSE(doc["checks"][0].contains("elapsed_ms"));
  CHECK(doc["timing"]["elapsed_ms"]["a/x"] == 5);
  const auto back = checks_from_document(doc);
  REQUIRE(back.size() == 2);
  CHECK(back[0].elapsed_ms == 5);
  CHECK(back[1].status == Status::fail);
  CHECK(back[0].observed == make("a", "x", Status::pass).observed);
}

TEST_CASE("merge adds summaries and rejects duplicates") {
  const auto a = report_document({make("s", "one", Status::pass), make("s", "two", Status::fail)});
  const auto b = report_document({make("t", "one", Status::pass), make("s", "three", Status::skip)});
  const auto m = merge_documents({a, b});
  CHECK(m["summary"]["pass"] == 2);
  CHECK(m["summary"]["fail"] == 1);
  CHECK(m["summary"]["skip"] == 1);
  CHECK(m["checks"].size() == 4);
  CHECK(m["checks"][0]["name"] == "one");
  CHECK(m["checks"][1]["name"] == "three");
  try {
    merge_documents({a, a});
    FAIL("expected duplicate error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::duplicate_check);
  }
  const auto empty = merge_documents({});
  CHECK(empty["summary"]["pass"] == 0);
  CHECK(empty["checks"].empty());
  CHECK_THROWS_AS(checks_from_document(Json::parse(R"({"schema":2,"checks":[]})")), Error);
}

TEST_CASE("text rendering") {
  const auto text = render_text({make("s", "one", Status::pass), make("s", "two", Status::fail)});
  CHECK(text.find("pass    s/one") != std::string::npos);
  CHECK(text.find("observed value = 1/2") != std::string::npos);
  CHECK(text.find("pass 1, fail 1, skip 0") != std::string::npos);
}
