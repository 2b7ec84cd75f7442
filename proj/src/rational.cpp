#include "hkcount/rational.hpp"

#include <limits>

#include "hkcount/error.hpp"

namespace hk {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::OrderExceeded: return "OrderExceeded";
    case ErrorCode::NonUnitLeadingCoefficient: return "NonUnitLeadingCoefficient";
    case ErrorCode::UnsupportedWeight: return "UnsupportedWeight";
    case ErrorCode::BracketValuationMismatch: return "BracketValuationMismatch";
    case ErrorCode::RepresentativeOutOfRange: return "RepresentativeOutOfRange";
    case ErrorCode::JacobiIndexViolation: return "JacobiIndexViolation";
    case ErrorCode::NonIntegralCount: return "NonIntegralCount";
    case ErrorCode::RankMismatch: return "RankMismatch";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::OddAdjunctionIntegral: return "OddAdjunctionIntegral";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

std::string to_string(const Rational& r) { return r.get_str(10); }

Rational parse_rational(std::string_view text) {
  Rational r;
  const std::string s(text);
  if (s.empty() || r.set_str(s, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + s + "'");
  }
  r.canonicalize();
  return r;
}

std::int64_t to_int64(const Rational& r) {
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw Error(ErrorCode::NonIntegralCount, "not a machine integer: " + to_string(r));
  }
  static_assert(sizeof(long) == sizeof(std::int64_t));
  return r.get_num().get_si();
}

Rational factorial(unsigned n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(long n, long k) {
  if (k < 0) return 0;
  // Generalized binomial so that negative n also works.
  Rational r = 1;
  for (long i = 0; i < k; ++i) {
    r *= Rational(n - i);
    r /= Rational(i + 1);
  }
  return r;
}

}  // namespace hk
