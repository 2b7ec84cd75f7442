#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "hkcount/error.hpp"
#include "hkcount/rational.hpp"
#include "hkcount/ylaurent.hpp"

namespace hk {

template <class C>
struct CoeffRing;

template <>
struct CoeffRing<Rational> {
  static bool is_zero(const Rational& c) { return sgn(c) == 0; }
  static bool is_unit(const Rational& c) { return sgn(c) != 0; }
  static Rational inverse(const Rational& c) { return 1 / c; }
  static std::string to_string(const Rational& c) { return hk::to_string(c); }
};

template <>
struct CoeffRing<YLaurent> {
  static bool is_zero(const YLaurent& c) { return c.is_zero(); }
  // Units of Q[y, 1/y] are the nonzero monomials.
  static bool is_unit(const YLaurent& c) { return c.is_monomial(); }
  static YLaurent inverse(const YLaurent& c) { return c.monomial_inverse(); }
  static std::string to_string(const YLaurent& c) { return c.to_string(); }
};

// Truncated Laurent series sum_{n >= valuation} a_n q^n + O(q^order).
//
// Coefficients are stored densely for exponents valuation .. order-1 and the
// valuation is kept normalized: the stored leading coefficient is nonzero, and
// a series that vanishes up to its order has valuation == order and no stored
// coefficients. Binary operations never extend precision: the result carries
// the largest order justified by both operands.
template <class C>
class QSeries {
  using Ring = CoeffRing<C>;

 public:
  using Coefficient = C;

  // Zero series known up to O(q^order).
  explicit QSeries(int order = 0) : valuation_(order), order_(order) {}

  // coeffs[i] is the coefficient of q^(start + i); exponents beyond the
  // supplied list and below `order` are zero.
  QSeries(int start, std::vector<C> coeffs, int order)
      : valuation_(start), order_(order), coeffs_(std::move(coeffs)) {
    if (order_ < valuation_) {
      valuation_ = order_;
      coeffs_.clear();
    }
    coeffs_.resize(static_cast<std::size_t>(order_ - valuation_));
    normalize();
  }

  static QSeries constant(const C& c, int order) {
    return monomial(c, 0, order);
  }

  static QSeries monomial(const C& c, int exponent, int order) {
    if (exponent >= order) return QSeries(order);
    return QSeries(exponent, std::vector<C>{c}, order);
  }

  int valuation() const { return valuation_; }
  int order() const { return order_; }
  bool is_zero() const { return coeffs_.empty(); }

  const C& coefficient(int n) const {
    if (n >= order_) {
      std::ostringstream os;
      os << "coefficient of q^" << n << " requested from a series known up to O(q^"
         << order_ << ")";
      throw Error(ErrorCode::OrderExceeded, os.str());
    }
    if (n < valuation_) return zero_;
    return coeffs_[static_cast<std::size_t>(n - valuation_)];
  }

  QSeries truncate(int order) const {
    if (order >= order_) return *this;
    return QSeries(valuation_, coeffs_, order);
  }

  // Multiplication by q^k.
  QSeries shift(int k) const {
    QSeries r = *this;
    r.valuation_ += k;
    r.order_ += k;
    return r;
  }

  QSeries operator-() const {
    QSeries r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  QSeries& operator+=(const QSeries& b) { return *this = combine(*this, b, 1); }
  QSeries& operator-=(const QSeries& b) { return *this = combine(*this, b, -1); }
  QSeries& operator*=(const QSeries& b) { return *this = multiply(*this, b); }

  QSeries& operator*=(const Rational& s) {
    if (sgn(s) == 0) return *this = QSeries(order_);
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend QSeries operator+(const QSeries& a, const QSeries& b) { return combine(a, b, 1); }
  friend QSeries operator-(const QSeries& a, const QSeries& b) { return combine(a, b, -1); }
  friend QSeries operator*(const QSeries& a, const QSeries& b) { return multiply(a, b); }
  friend QSeries operator*(QSeries a, const Rational& s) { return a *= s; }
  friend QSeries operator*(const Rational& s, QSeries a) { return a *= s; }

  // Exact structural equality, including the order.
  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order_ == b.order_ && a.valuation_ == b.valuation_ && a.coeffs_ == b.coeffs_;
  }

  // Equality of all coefficients below min(a.order, b.order).
  bool agrees_with(const QSeries& b) const {
    const int n = std::min(order_, b.order_);
    for (int e = std::min(valuation_, b.valuation_); e < n; ++e) {
      if (!(coefficient(e) == b.coefficient(e))) return false;
    }
    return true;
  }

  // Multiplicative inverse; the leading coefficient must be a unit of C.
  QSeries invert() const {
    if (is_zero() || !Ring::is_unit(coeffs_.front())) {
      throw Error(ErrorCode::NonUnitLeadingCoefficient,
                  "series inverse needs a unit leading coefficient");
    }
    const std::size_t len = coeffs_.size();
    const C lead_inv = Ring::inverse(coeffs_.front());
    std::vector<C> out(len);
    out[0] = lead_inv;
    for (std::size_t n = 1; n < len; ++n) {
      C acc;
      for (std::size_t i = 1; i <= n; ++i) {
        if (Ring::is_zero(coeffs_[i]) || Ring::is_zero(out[n - i])) continue;
        add_product(acc, coeffs_[i], out[n - i]);
      }
      out[n] = -(acc * lead_inv);
    }
    const int v = -valuation_;
    return QSeries(v, std::move(out), v + static_cast<int>(len));
  }

  // q d/dq.
  QSeries q_derivative() const {
    QSeries r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
      r.coeffs_[i] *= Rational(valuation_ + static_cast<int>(i));
    }
    r.normalize();
    return r;
  }

  // q -> q^m.
  QSeries substitute_power(int m) const {
    if (m <= 0) throw Error(ErrorCode::InvalidArgument, "substitute_power needs m > 0");
    if (is_zero()) return QSeries(order_ * m);
    std::vector<C> out((coeffs_.size() - 1) * static_cast<std::size_t>(m) + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      out[i * static_cast<std::size_t>(m)] = coeffs_[i];
    }
    return QSeries(valuation_ * m, std::move(out), order_ * m);
  }

  // q -> -q.
  QSeries substitute_negate() const {
    QSeries r = *this;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) {
      if ((valuation_ + static_cast<int>(i)) % 2 != 0) r.coeffs_[i] = -r.coeffs_[i];
    }
    return r;
  }

  // Applies f to every coefficient (f must map zero to zero).
  template <class F>
  auto map_coefficients(F&& f) const -> QSeries<decltype(f(std::declval<const C&>()))> {
    using D = decltype(f(std::declval<const C&>()));
    std::vector<D> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(f(c));
    return QSeries<D>(valuation_, std::move(out), order_);
  }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (Ring::is_zero(coeffs_[i])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << Ring::to_string(coeffs_[i]) << ")*q^" << valuation_ + static_cast<int>(i);
    }
    if (!first) os << " + ";
    os << "O(q^" << order_ << ")";
    return os.str();
  }

 private:
  static void add_product(C& acc, const C& a, const C& b) {
    if constexpr (std::is_same_v<C, YLaurent>) {
      acc.add_product(a, b);
    } else {
      acc += a * b;
    }
  }

  static QSeries combine(const QSeries& a, const QSeries& b, int sign) {
    const int order = std::min(a.order_, b.order_);
    const int start = std::min(a.valuation_, b.valuation_);
    if (start >= order) return QSeries(order);
    std::vector<C> out(static_cast<std::size_t>(order - start));
    for (int e = a.valuation_; e < std::min(order, a.valuation_ + static_cast<int>(a.coeffs_.size())); ++e) {
      out[static_cast<std::size_t>(e - start)] = a.coeffs_[static_cast<std::size_t>(e - a.valuation_)];
    }
    for (int e = b.valuation_; e < std::min(order, b.valuation_ + static_cast<int>(b.coeffs_.size())); ++e) {
      auto& slot = out[static_cast<std::size_t>(e - start)];
      const auto& c = b.coeffs_[static_cast<std::size_t>(e - b.valuation_)];
      if (sign > 0) {
        slot += c;
      } else {
        slot -= c;
      }
    }
    return QSeries(start, std::move(out), order);
  }

  static QSeries multiply(const QSeries& a, const QSeries& b) {
    const int order = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
    const int start = a.valuation_ + b.valuation_;
    if (a.is_zero() || b.is_zero() || start >= order) return QSeries(order);
    const int len = order - start;
    std::vector<C> out(static_cast<std::size_t>(len));
    const int na = std::min<int>(len, static_cast<int>(a.coeffs_.size()));
    const int nb = std::min<int>(len, static_cast<int>(b.coeffs_.size()));
    for (int i = 0; i < na; ++i) {
      const auto& ai = a.coeffs_[static_cast<std::size_t>(i)];
      if (Ring::is_zero(ai)) continue;
      for (int j = 0; j < nb && i + j < len; ++j) {
        const auto& bj = b.coeffs_[static_cast<std::size_t>(j)];
        if (Ring::is_zero(bj)) continue;
        add_product(out[static_cast<std::size_t>(i + j)], ai, bj);
      }
    }
    return QSeries(start, std::move(out), order);
  }

  void normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && Ring::is_zero(coeffs_[lead])) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      valuation_ = order_;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      valuation_ += static_cast<int>(lead);
    }
  }

  inline static const C zero_{};

  int valuation_;
  int order_;
  std::vector<C> coeffs_;
};

using RationalSeries = QSeries<Rational>;
using JacobiSeries = QSeries<YLaurent>;

// prod_{m >= 1} (1 - q^m)^{e_m} + O(q^order); m absent from the map has
// exponent zero.
RationalSeries product_expansion(const std::map<int, long>& exponents, int order);

// prod_{m >= 1} (1 - q^m)^e + O(q^order).
RationalSeries eta_product(long exponent, int order);

// Embeds a one-variable series as a y-independent two-variable series.
JacobiSeries to_jacobi(const RationalSeries& a);

// Coefficient of q^n y^k; throws OrderExceeded if n >= a.order().
Rational y_coefficient(const JacobiSeries& a, int n, int k);

// y -> -y and y -> 1/y applied coefficientwise.
JacobiSeries negate_y(const JacobiSeries& a);
JacobiSeries invert_y(const JacobiSeries& a);

}  // namespace hk
