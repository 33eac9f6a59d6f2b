#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ordtopia {

enum class Status { pass, fail, skip };

const char* status_name(Status s) noexcept;

/// Outcome of one verification. `observed` and `expected` are parallel
/// label/value lists; values are rendered as strings so exact rationals
/// survive serialization.
struct CheckReport {
  std::string suite;
  std::string name;
  std::string paper_anchor;
  Status status = Status::skip;
  std::vector<std::pair<std::string, std::string>> observed;
  std::vector<std::pair<std::string, std::string>> expected;
  std::string tolerance = "exact";
  std::uint64_t seed = 0;
  std::int64_t elapsed_ms = 0;

  void observe(std::string label, std::string value) {
    observed.emplace_back(std::move(label), std::move(value));
  }
  void expect(std::string label, std::string value) {
    expected.emplace_back(std::move(label), std::move(value));
  }
  bool passed() const noexcept { return status == Status::pass; }
};

inline Status status_from(bool ok) { return ok ? Status::pass : Status::fail; }

}  // namespace ordtopia
