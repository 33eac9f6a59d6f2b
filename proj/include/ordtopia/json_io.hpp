#pragma once

#include "ordtopia/qpm.hpp"
#include "ordtopia/report.hpp"
#include "ordtopia/sequence.hpp"
#include "ordtopia/topology.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ordtopia {

using Json = nlohmann::ordered_json;

Json to_json(const FinitePreorder& p);
FinitePreorder preorder_from_json(const Json& j);

Json to_json(const FiniteTopology& t);
FiniteTopology topology_from_json(const Json& j);

Json to_json(const DistanceTable& d);
DistanceTable distance_table_from_json(const Json& j);

Json to_json(const SeqModel& x);
SeqModel seq_from_json(const Json& j);

/// One check without its timing.
Json to_json(const CheckReport& r);
CheckReport check_from_json(const Json& j);

/// Sorts by (suite, name). Throws Errc::duplicate_check on a repeated key.
std::vector<CheckReport> sorted_checks(std::vector<CheckReport> checks);

/// {"schema":1, "summary":{...}, "checks":[...], "timing":{...}}.
/// Only "timing" depends on the clock.
Json report_document(const std::vector<CheckReport>& checks);
std::vector<CheckReport> checks_from_document(const Json& doc);

Json merge_documents(const std::vector<Json>& docs);

/// Fixed-width summary table, one row per check.
std::string render_text(const std::vector<CheckReport>& checks);

}  // namespace ordtopia
