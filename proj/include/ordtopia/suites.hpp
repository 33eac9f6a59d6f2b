#pragma once

#include "ordtopia/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ordtopia {

struct RunConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 10000;
  std::size_t max_carrier = 4;
  double p = 2.0;
  double q = 0.5;
};

const std::vector<std::string>& repro_examples();
const std::vector<std::string>& verify_suites();

/// Unknown names and out-of-range configuration throw ordtopia::Error.
std::vector<CheckReport> run_repro(const std::string& example, const RunConfig& cfg);
std::vector<CheckReport> run_verify(const std::string& suite, const RunConfig& cfg);

bool any_failed(const std::vector<CheckReport>& checks);

}  // namespace ordtopia
