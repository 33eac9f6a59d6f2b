#pragma once

#include <stdexcept>
#include <string>

namespace ordtopia {

enum class Errc {
  index_out_of_range,
  size_mismatch,
  carrier_too_large,
  invalid_argument,
  not_one_bounded,
  param_out_of_range,
  utility_not_isotonic,
  utility_out_of_range,
  incomparable_tails,
  support_exceeds_prefix,
  window_too_small,
  gauge_domain,
  duplicate_check,
  parse_error,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ordtopia
