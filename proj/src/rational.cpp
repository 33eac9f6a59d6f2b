#include "ordtopia/rational.hpp"

#include "ordtopia/error.hpp"

#include <cctype>

namespace ordtopia {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::index_out_of_range: return "IndexOutOfRange";
    case Errc::size_mismatch: return "SizeMismatch";
    case Errc::carrier_too_large: return "CarrierTooLarge";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::not_one_bounded: return "NotOneBounded";
    case Errc::param_out_of_range: return "ParamOutOfRange";
    case Errc::utility_not_isotonic: return "UtilityNotIsotonic";
    case Errc::utility_out_of_range: return "UtilityOutOfRange";
    case Errc::incomparable_tails: return "IncomparableTails";
    case Errc::support_exceeds_prefix: return "SupportExceedsPrefix";
    case Errc::window_too_small: return "WindowTooSmall";
    case Errc::gauge_domain: return "GaugeDomain";
    case Errc::duplicate_check: return "DuplicateCheck";
    case Errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(Errc::parse_error, "empty rational");
  const auto dot = s.find('.');
  try {
    if (dot == std::string::npos) {
      Rational r(s, 10);
      if (r.get_den() == 0) throw Error(Errc::parse_error, "zero denominator in '" + s + "'");
      r.canonicalize();
      return r;
    }
    // Finite decimal: shift the point out.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const auto frac_len = s.size() - dot - 1;
    for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i])))
        throw Error(Errc::parse_error, "bad decimal '" + s + "'");
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    Rational r(num, den);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse_error, "bad rational '" + s + "'");
  }
}

Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace ordtopia
