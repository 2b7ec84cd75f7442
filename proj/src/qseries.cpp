#include "hkcount/qseries.hpp"

namespace hk {

RationalSeries product_expansion(const std::map<int, long>& exponents, int order) {
  if (order <= 0) return RationalSeries(order);
  std::vector<Rational> c(static_cast<std::size_t>(order));
  c[0] = 1;
  for (const auto& [m, e] : exponents) {
    if (m <= 0) throw Error(ErrorCode::InvalidArgument, "product_expansion needs m >= 1");
    if (m >= order || e == 0) continue;
    const auto step = static_cast<std::size_t>(m);
    // Multiply by (1 - q^m) or divide by it, |e| times, in place.
    for (long rep = 0; rep < (e > 0 ? e : -e); ++rep) {
      if (e > 0) {
        for (std::size_t n = c.size() - 1; n >= step; --n) c[n] -= c[n - step];
      } else {
        for (std::size_t n = step; n < c.size(); ++n) c[n] += c[n - step];
      }
    }
  }
  return RationalSeries(0, std::move(c), order);
}

RationalSeries eta_product(long exponent, int order) {
  std::map<int, long> e;
  for (int m = 1; m < order; ++m) e[m] = exponent;
  return product_expansion(e, order);
}

JacobiSeries to_jacobi(const RationalSeries& a) {
  return a.map_coefficients([](const Rational& c) { return YLaurent(c); });
}

Rational y_coefficient(const JacobiSeries& a, int n, int k) {
  return a.coefficient(n).coefficient(k);
}

JacobiSeries negate_y(const JacobiSeries& a) {
  return a.map_coefficients([](const YLaurent& c) { return c.negate_variable(); });
}

JacobiSeries invert_y(const JacobiSeries& a) {
  return a.map_coefficients([](const YLaurent& c) { return c.invert_variable(); });
}

}  // namespace hk
