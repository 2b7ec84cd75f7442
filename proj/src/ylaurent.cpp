#include "hkcount/ylaurent.hpp"

#include <sstream>

#include "hkcount/error.hpp"

namespace hk {

YLaurent::YLaurent(const Rational& c) { add_term(0, c); }

YLaurent::YLaurent(std::initializer_list<std::pair<const int, Rational>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

YLaurent YLaurent::monomial(int exponent, const Rational& c) {
  YLaurent r;
  r.add_term(exponent, c);
  return r;
}

void YLaurent::add_term(int exponent, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Rational YLaurent::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

int YLaurent::min_exponent() const { return terms_.begin()->first; }
int YLaurent::max_exponent() const { return terms_.rbegin()->first; }

Rational YLaurent::eval_at_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

Rational YLaurent::eval_at_minus_one() const {
  Rational s = 0;
  for (const auto& [e, c] : terms_) {
    if (e % 2 == 0) {
      s += c;
    } else {
      s -= c;
    }
  }
  return s;
}

YLaurent YLaurent::invert_variable() const {
  YLaurent r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
  return r;
}

YLaurent YLaurent::negate_variable() const {
  YLaurent r = *this;
  for (auto& [e, c] : r.terms_) {
    if (e % 2 != 0) c = -c;
  }
  return r;
}

YLaurent YLaurent::monomial_inverse() const {
  if (!is_monomial()) {
    throw Error(ErrorCode::NonUnitLeadingCoefficient,
                "only nonzero monomials are invertible in Q[y, 1/y]");
  }
  const auto& [e, c] = *terms_.begin();
  return monomial(-e, 1 / c);
}

YLaurent& YLaurent::operator+=(const YLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

YLaurent& YLaurent::operator-=(const YLaurent& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

YLaurent& YLaurent::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

YLaurent YLaurent::operator-() const {
  YLaurent r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

void YLaurent::add_product(const YLaurent& a, const YLaurent& b) {
  Rational t;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      t = ca * cb;
      add_term(ea + eb, t);
    }
  }
}

YLaurent operator*(const YLaurent& a, const YLaurent& b) {
  YLaurent r;
  r.add_product(a, b);
  return r;
}

std::string YLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    const Rational a = abs(c);
    if (e == 0) {
      os << hk::to_string(a);
      continue;
    }
    if (a != 1) os << hk::to_string(a) << "*";
    os << "y";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

}  // namespace hk
