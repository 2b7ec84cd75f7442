#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace hk {

// Exact rational scalar. GMP keeps values canonical (lowest terms, positive
// denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den in lowest terms; den must be nonzero.
inline Rational make_rational(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

// Parses "p" or "p/q"; throws hk::Error(InvalidArgument) on malformed input.
Rational parse_rational(std::string_view text);

// Converts to int64, throwing if the value is not an integer in range.
std::int64_t to_int64(const Rational& r);

Rational factorial(unsigned n);

Rational binomial(long n, long k);

}  // namespace hk
