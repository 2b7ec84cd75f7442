#include "hkcount/modforms.hpp"

#include <map>
#include <vector>

#include "hkcount/error.hpp"

namespace hk::modforms {

namespace {

void require_even_weight(int k) {
  if (k <= 0 || k % 2 != 0) {
    throw Error(ErrorCode::UnsupportedWeight,
                "Eisenstein series need an even positive weight, got " + std::to_string(k));
  }
}

}  // namespace

std::optional<SeriesName> parse_series_name(std::string_view name) {
  static const std::map<std::string_view, SeriesName> names = {
      {"delta", SeriesName::Delta}, {"invdelta", SeriesName::InvDelta},
      {"e2", SeriesName::E2},       {"e4", SeriesName::E4},
      {"theta4", SeriesName::Theta4}, {"f", SeriesName::F},
      {"g2", SeriesName::G2},       {"g4", SeriesName::G4},
  };
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

const char* series_name(SeriesName name) {
  switch (name) {
    case SeriesName::Delta: return "delta";
    case SeriesName::InvDelta: return "invdelta";
    case SeriesName::E2: return "e2";
    case SeriesName::E4: return "e4";
    case SeriesName::Theta4: return "theta4";
    case SeriesName::F: return "f";
    case SeriesName::G2: return "g2";
    case SeriesName::G4: return "g4";
  }
  return "?";
}

RationalSeries named_series(SeriesName name, int order) {
  switch (name) {
    case SeriesName::Delta: return delta(order);
    case SeriesName::InvDelta: return inv_delta(order);
    case SeriesName::E2: return eisenstein(2, order);
    case SeriesName::E4: return eisenstein(4, order);
    case SeriesName::Theta4: return theta4(order);
    case SeriesName::F: return f_series(order);
    case SeriesName::G2: return g_series(2, order);
    case SeriesName::G4: return g_series(4, order);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown series");
}

Integer divisor_sigma(int k, long n) {
  Integer s = 0;
  for (long d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    Integer t;
    mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
    s += t;
    const long e = n / d;
    if (e != d) {
      mpz_ui_pow_ui(t.get_mpz_t(), static_cast<unsigned long>(e), static_cast<unsigned long>(k));
      s += t;
    }
  }
  return s;
}

Rational bernoulli(int k) {
  if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative Bernoulli index");
  if (k == 2) return Rational(1, 6);
  if (k == 4) return Rational(-1, 30);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0.
  std::vector<Rational> b(static_cast<std::size_t>(k) + 1);
  b[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    for (int j = 0; j < m; ++j) acc += binomial(m + 1, j) * b[static_cast<std::size_t>(j)];
    b[static_cast<std::size_t>(m)] = -acc / Rational(m + 1);
  }
  return b[static_cast<std::size_t>(k)];
}

RationalSeries delta(int order) {
  if (order < 2) throw Error(ErrorCode::InvalidArgument, "delta needs order >= 2");
  return eta_product(24, order - 1).shift(1);
}

RationalSeries inv_delta(int order) {
  return eta_product(-24, order + 1).shift(-1);
}

RationalSeries eisenstein(int k, int order) {
  require_even_weight(k);
  const Rational scale = Rational(-2 * k) / bernoulli(k);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)));
  if (!c.empty()) c[0] = 1;
  for (int n = 1; n < order; ++n) {
    c[static_cast<std::size_t>(n)] = scale * Rational(divisor_sigma(k - 1, n));
  }
  return RationalSeries(0, std::move(c), order);
}

RationalSeries theta4(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)));
  for (long n = 0; n * n < order; ++n) c[static_cast<std::size_t>(n * n)] += n == 0 ? 1 : 2;
  return RationalSeries(0, std::move(c), order);
}

RationalSeries f_series(int order) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)));
  for (int n = 1; n < order; n += 2) c[static_cast<std::size_t>(n)] = Rational(divisor_sigma(1, n));
  return RationalSeries(0, std::move(c), order);
}

RationalSeries g_series(int k, int order) {
  require_even_weight(k);
  const Rational scale = Rational(-2 * k) / bernoulli(k);
  std::vector<Rational> c(static_cast<std::size_t>(std::max(order, 0)));
  if (!c.empty()) c[0] = 1;
  for (int n = 1; 4 * n < order; ++n) {
    c[static_cast<std::size_t>(4 * n)] = scale * Rational(divisor_sigma(k - 1, n));
  }
  return RationalSeries(0, std::move(c), order);
}

YLaurent theta_prefactor() { return YLaurent{{1, 1}, {0, -2}, {-1, 1}}; }

JacobiSeries prodpart_sq(int order) {
  if (order <= 0) return JacobiSeries(order);
  std::vector<YLaurent> p(static_cast<std::size_t>(order));
  p[0] = 1;
  const YLaurent y = YLaurent::monomial(1);
  const YLaurent y_inv = YLaurent::monomial(-1);
  for (int m = 1; m < order; ++m) {
    const auto step = static_cast<std::size_t>(m);
    for (const YLaurent* u : {&y, &y_inv}) {
      // times (1 - u q^m)
      for (std::size_t n = p.size() - 1; n >= step; --n) p[n] -= *u * p[n - step];
    }
    for (int rep = 0; rep < 2; ++rep) {
      // divided by (1 - q^m)
      for (std::size_t n = step; n < p.size(); ++n) p[n] += p[n - step];
    }
  }
  JacobiSeries ps(0, std::move(p), order);
  return ps * ps;
}

JacobiSeries theta_sq(int order) {
  return JacobiSeries::constant(theta_prefactor(), order) * prodpart_sq(order);
}

JacobiSeries wp_tilde(int order) {
  if (order <= 0) return JacobiSeries(order);
  const YLaurent s = theta_prefactor();
  std::vector<YLaurent> c(static_cast<std::size_t>(order));
  c[0] = YLaurent(1) + s * Rational(1, 12);
  for (int d = 1; d < order; ++d) {
    YLaurent inner;
    for (int k = 1; k <= d; ++k) {
      if (d % k != 0) continue;
      inner += YLaurent{{k, k}, {0, -2 * k}, {-k, k}};
    }
    c[static_cast<std::size_t>(d)] = s * inner;
  }
  return JacobiSeries(0, std::move(c), order);
}

}  // namespace hk::modforms
