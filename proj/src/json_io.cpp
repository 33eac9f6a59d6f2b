#include "ordtopia/json_io.hpp"

#include "ordtopia/error.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <tuple>

namespace ordtopia {

namespace {

std::size_t read_n(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned())
    throw Error(Errc::parse_error, "missing or invalid \"n\"");
  return j["n"].get<std::size_t>();
}

std::vector<std::size_t> mask_indices(Mask m, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (m & bit(i)) out.push_back(i);
  return out;
}

Json pairs_json(const std::vector<std::pair<std::string, std::string>>& v) {
  Json a = Json::array();
  for (const auto& [l, val] : v) a.push_back(Json::array({l, val}));
  return a;
}

std::vector<std::pair<std::string, std::string>> pairs_from(const Json& a) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : a) out.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  return out;
}

Status status_from_name(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skip") return Status::skip;
  throw Error(Errc::parse_error, "unknown status \"" + s + "\"");
}

std::string check_key(const CheckReport& r) { return r.suite + "/" + r.name; }

}  // namespace

Json to_json(const FinitePreorder& p) {
  Json pairs = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (i != j && p.leq(i, j)) pairs.push_back(Json::array({i, j}));
  return Json{{"n", p.size()}, {"pairs", pairs}};
}

FinitePreorder preorder_from_json(const Json& j) {
  const std::size_t n = read_n(j);
  std::vector<FinitePreorder::Pair> pairs;
  try {
    for (const auto& e : j.at("pairs")) pairs.emplace_back(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>());
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return FinitePreorder::from_pairs(n, pairs);
}

Json to_json(const FiniteTopology& t) {
  std::vector<std::vector<std::size_t>> opens;
  for (Mask m : t.opens()) opens.push_back(mask_indices(m, t.size()));
  std::sort(opens.begin(), opens.end());
  return Json{{"n", t.size()}, {"opens", opens}};
}

FiniteTopology topology_from_json(const Json& j) {
  const std::size_t n = read_n(j);
  std::vector<Mask> opens;
  try {
    for (const auto& set : j.at("opens")) {
      Mask m = 0;
      for (const auto& i : set) {
        const auto idx = i.get<std::size_t>();
        if (idx >= n) throw Error(Errc::index_out_of_range, "open set index out of range");
        m |= bit(idx);
      }
      opens.push_back(m);
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return FiniteTopology::from_opens(n, std::move(opens));
}

Json to_json(const DistanceTable& d) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.size(); ++j) row.push_back(to_string(d.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", d.size()}, {"dist", rows}};
}

DistanceTable distance_table_from_json(const Json& j) {
  const std::size_t n = read_n(j);
  DistanceTable d(n);
  try {
    const auto& rows = j.at("dist");
    if (rows.size() != n) throw Error(Errc::size_mismatch, "dist must have n rows");
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw Error(Errc::size_mismatch, "dist rows must have n entries");
      for (std::size_t k = 0; k < n; ++k) d.at(i, k) = parse_rational(rows[i][k].get<std::string>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
  return d;
}

Json to_json(const SeqModel& x) {
  Json prefix = Json::array();
  for (const auto& v : x.prefix()) prefix.push_back(to_string(v));
  Json tail;
  const Tail& t = x.tail();
  switch (t.kind) {
    case Tail::Kind::zero: tail = Json{{"kind", "zero"}, {"offset", 0}}; break;
    case Tail::Kind::constant: tail = Json{{"kind", "const"}, {"value", to_string(t.value)}, {"offset", 0}}; break;
    case Tail::Kind::named: tail = Json{{"kind", "named"}, {"id", t.id}, {"offset", t.offset}}; break;
  }
  return Json{{"prefix", prefix}, {"tail", tail}};
}

SeqModel seq_from_json(const Json& j) {
  try {
    std::vector<Rational> prefix;
    for (const auto& v : j.at("prefix")) prefix.push_back(parse_rational(v.get<std::string>()));
    const auto& tj = j.at("tail");
    const auto kind = tj.at("kind").get<std::string>();
    Tail tail;
    if (kind == "zero") tail = Tail::zero();
    else if (kind == "const") tail = Tail::constant(parse_rational(tj.at("value").get<std::string>()));
    else if (kind == "named") tail = Tail::named(tj.at("id").get<std::string>(), tj.value("offset", std::size_t{0}));
    else throw Error(Errc::parse_error, "unknown tail kind \"" + kind + "\"");
    return SeqModel(std::move(prefix), std::move(tail));
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

Json to_json(const CheckReport& r) {
  return Json{{"suite", r.suite},
              {"name", r.name},
              {"paper_anchor", r.paper_anchor},
              {"status", status_name(r.status)},
              {"observed", pairs_json(r.observed)},
              {"expected", pairs_json(r.expected)},
              {"tolerance", r.tolerance},
              {"seed", r.seed}};
}

CheckReport check_from_json(const Json& j) {
  try {
    CheckReport r;
    r.suite = j.at("suite").get<std::string>();
    r.name = j.at("name").get<std::string>();
    r.paper_anchor = j.at("paper_anchor").get<std::string>();
    r.status = status_from_name(j.at("status").get<std::string>());
    r.observed = pairs_from(j.at("observed"));
    r.expected = pairs_from(j.at("expected"));
    r.tolerance = j.value("tolerance", std::string("exact"));
    r.seed = j.value("seed", std::uint64_t{0});
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, e.what());
  }
}

std::vector<CheckReport> sorted_checks(std::vector<CheckReport> checks) {
  std::stable_sort(checks.begin(), checks.end(), [](const CheckReport& a, const CheckReport& b) {
    return std::tie(a.suite, a.name) < std::tie(b.suite, b.name);
  });
  for (std::size_t i = 1; i < checks.size(); ++i)
    if (checks[i].suite == checks[i - 1].suite && checks[i].name == checks[i - 1].name)
      throw Error(Errc::duplicate_check, "duplicate check \"" + check_key(checks[i]) + "\"");
  return checks;
}

Json report_document(const std::vector<CheckReport>& input) {
  const auto checks = sorted_checks(input);
  std::size_t pass = 0, fail = 0, skip = 0;
  Json arr = Json::array();
  Json timing = Json::object();
  std::int64_t total = 0;
  for (const auto& c : checks) {
    (c.status == Status::pass ? pass : c.status == Status::fail ? fail : skip)++;
    arr.push_back(to_json(c));
    timing[check_key(c)] = c.elapsed_ms;
    total += c.elapsed_ms;
  }
  return Json{{"schema", 1},
              {"summary", {{"pass", pass}, {"fail", fail}, {"skip", skip}}},
              {"checks", arr},
              {"timing", {{"total_ms", total}, {"elapsed_ms", timing}}}};
}

std::vector<CheckReport> checks_from_document(const Json& doc) {
  if (!doc.is_object() || doc.value("schema", 0) != 1 || !doc.contains("checks"))
    throw Error(Errc::parse_error, "not a schema-1 report document");
  std::vector<CheckReport> out;
  const Json* times = nullptr;
  if (doc.contains("timing") && doc["timing"].contains("elapsed_ms")) times = &doc["timing"]["elapsed_ms"];
  for (const auto& j : doc["checks"]) {
    auto r = check_from_json(j);
    if (times && times->contains(check_key(r))) r.elapsed_ms = (*times)[check_key(r)].get<std::int64_t>();
    out.push_back(std::move(r));
  }
  return out;
}

Json merge_documents(const std::vector<Json>& docs) {
  std::vector<CheckReport> all;
  for (const auto& d : docs) {
    auto part = checks_from_document(d);
    all.insert(all.end(), part.begin(), part.end());
  }
  return report_document(all);
}

std::string render_text(const std::vector<CheckReport>& input) {
  const auto checks = sorted_checks(input);
  std::size_t wide = 10;
  for (const auto& c : checks) wide = std::max(wide, check_key(c).size());
  std::ostringstream os;
  std::size_t pass = 0, fail = 0, skip = 0;
  os << std::left << std::setw(6) << "STATUS" << "  " << std::setw(static_cast<int>(wide)) << "CHECK"
     << "  ANCHOR\n";
  for (const auto& c : checks) {
    (c.status == Status::pass ? pass : c.status == Status::fail ? fail : skip)++;
    os << std::setw(6) << status_name(c.status) << "  " << std::setw(static_cast<int>(wide)) << check_key(c) << "  "
       << c.paper_anchor << '\n';
    if (c.status == Status::fail) {
      for (const auto& [l, v] : c.observed) os << "        observed " << l << " = " << v << '\n';
      for (const auto& [l, v] : c.expected) os << "        expected " << l << " = " << v << '\n';
    }
  }
  os << "pass " << pass << ", fail " << fail << ", skip " << skip << '\n';
  return os.str();
}

}  // namespace ordtopia
