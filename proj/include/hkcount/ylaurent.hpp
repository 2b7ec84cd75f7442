#pragma once

#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "hkcount/rational.hpp"

namespace hk {

// Finite-support Laurent polynomial in y with rational coefficients.
// Zero coefficients are never stored.
class YLaurent {
 public:
  using Terms = std::map<int, Rational>;

  YLaurent() = default;
  YLaurent(const Rational& c);  // NOLINT: constants embed implicitly
  YLaurent(long c) : YLaurent(Rational(c)) {}  // NOLINT
  YLaurent(std::initializer_list<std::pair<const int, Rational>> terms);

  static YLaurent monomial(int exponent, const Rational& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  Rational coefficient(int exponent) const;
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;

  // Sum of coefficients, i.e. the value at y = 1.
  Rational eval_at_one() const;
  // Value at y = -1.
  Rational eval_at_minus_one() const;

  // y -> 1/y.
  YLaurent invert_variable() const;
  // y -> -y.
  YLaurent negate_variable() const;

  // Multiplicative inverse of a nonzero monomial.
  YLaurent monomial_inverse() const;

  YLaurent& operator+=(const YLaurent& other);
  YLaurent& operator-=(const YLaurent& other);
  YLaurent& operator*=(const Rational& c);
  YLaurent operator-() const;

  // this += a * b, avoiding a temporary product.
  void add_product(const YLaurent& a, const YLaurent& b);

  friend YLaurent operator+(YLaurent a, const YLaurent& b) { return a += b; }
  friend YLaurent operator-(YLaurent a, const YLaurent& b) { return a -= b; }
  friend YLaurent operator*(const YLaurent& a, const YLaurent& b);
  friend YLaurent operator*(YLaurent a, const Rational& c) { return a *= c; }
  friend YLaurent operator*(const Rational& c, YLaurent a) { return a *= c; }
  friend bool operator==(const YLaurent& a, const YLaurent& b) {
    return a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(int exponent, const Rational& c);

  Terms terms_;
};

// Ring-traits used by the generic series code.
inline bool is_zero(const YLaurent& a) { return a.is_zero(); }

}  // namespace hk
