#include <random>

#include "doctest.h"
#include "hkcount/modforms.hpp"
#include "hkcount/qseries.hpp"
#include "random_series.hpp"

using namespace hk;
using hk::testing::random_jacobi;
using hk::testing::random_series;

namespace {

RationalSeries series(int start, std::vector<long> c, int order) {
  std::vector<Rational> r(c.begin(), c.end());
  return RationalSeries(start, std::move(r), order);
}

// prod (1 - q^m)^e by repeated plain integer convolution with the
// binomial expansion of each factor, independent of product_expansion.
std::vector<long long> brute_eta(long e, int order) {
  std::vector<long long> acc(static_cast<std::size_t>(order), 0);
  acc[0] = 1;
  for (int m = 1; m < order; ++m) {
    // (1 - q^m)^e as a power series in q^m.
    std::vector<long long> f(static_cast<std::size_t>(order), 0);
    long long coeff = 1;
    for (int j = 0; j * m < order; ++j) {
      f[static_cast<std::size_t>(j * m)] = (j % 2 == 0 ? coeff : -coeff);
      coeff = coeff * (e - j) / (j + 1);
    }
    std::vector<long long> next(static_cast<std::size_t>(order), 0);
    for (int i = 0; i < order; ++i) {
      for (int j = 0; i + j < order; ++j) {
        next[static_cast<std::size_t>(i + j)] +=
            acc[static_cast<std::size_t>(i)] * f[static_cast<std::size_t>(j)];
      }
    }
    acc = next;
  }
  return acc;
}

}  // namespace

TEST_CASE("addition") {
  const auto a = series(0, {1, 1}, 3);
  CHECK(a + RationalSeries(3) == a);
  const auto inv = RationalSeries::monomial(1, -1, 5);
  CHECK((inv + -inv).is_zero());
  const auto sum = series(0, {1, 24}, 2) + series(0, {1, -24}, 2);
  CHECK(sum == series(0, {2}, 2));
  CHECK(sum.order() == 2);
  CHECK((series(0, {1}, 5) + series(0, {1}, 3)).order() == 3);
}

TEST_CASE("multiplication follows the order rule") {
  const auto geom = series(0, {1, 1, 1, 1}, 4);
  CHECK(series(0, {1, -1}, 10) * geom == series(0, {1}, 4));
  const auto p = RationalSeries::monomial(1, -1, 5) * RationalSeries::monomial(1, 1, 5);
  CHECK(p.coefficient(0) == 1);
  CHECK(p.order() == 4);

  const int n = 12;
  const auto d = modforms::delta(n);
  const auto id = modforms::inv_delta(n);
  const auto prod = d * id;
  CHECK(prod.order() == std::min(d.order() + id.valuation(), id.order() + d.valuation()));
  CHECK(prod == RationalSeries::constant(1, prod.order()));
}

TEST_CASE("inversion") {
  const auto a = series(1, {1, -24}, 3);
  const auto b = a.invert();
  CHECK(b == series(-1, {1, 24}, 1));
  CHECK(RationalSeries::constant(1, 6).invert() == RationalSeries::constant(1, 6));
  CHECK_THROWS_AS(RationalSeries(5).invert(), Error);
  try {
    RationalSeries(5).invert();
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonUnitLeadingCoefficient);
  }
  const JacobiSeries j(0, {YLaurent{{0, 1}, {1, 1}}}, 3);
  CHECK_THROWS_AS(j.invert(), Error);
  const JacobiSeries m(0, {YLaurent::monomial(2, 3), YLaurent{{0, 1}, {1, 1}}}, 4);
  CHECK(m * m.invert() == JacobiSeries::constant(YLaurent(1), 4));
  // invert(1/Delta) against the product formula for Delta.
  CHECK(modforms::inv_delta(15).invert().agrees_with(modforms::delta(15)));
}

TEST_CASE("coefficient access") {
  const auto a = series(-1, {1, 0, 5}, 2);
  CHECK(a.coefficient(-3) == 0);
  CHECK(a.coefficient(1) == 5);
  CHECK_THROWS_AS(a.coefficient(2), Error);
  try {
    a.coefficient(7);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrderExceeded);
  }
  CHECK(series(0, {0, 0, 3}, 4).valuation() == 2);
  CHECK(series(0, {0, 0}, 2).valuation() == 2);
}

TEST_CASE("q derivative") {
  CHECK(RationalSeries::monomial(1, -1, 3).q_derivative() == RationalSeries::monomial(-1, -1, 3));
  CHECK(RationalSeries::constant(7, 3).q_derivative().is_zero());
  const auto d = modforms::inv_delta(4).q_derivative();
  CHECK(d.coefficient(0) == 0);
  CHECK(d.coefficient(1) == 324);
}

TEST_CASE("substitutions") {
  CHECK(series(0, {1, 1}, 2).substitute_power(4) == series(0, {1, 0, 0, 0, 1}, 8));
  CHECK(modforms::delta(5).substitute_power(4).valuation() == 4);
  CHECK(series(0, {1, 1, 1}, 3).substitute_negate() == series(0, {1, -1, 1}, 3));
  CHECK(modforms::eisenstein(2, 4).substitute_negate().coefficient(1) == 24);
  CHECK_THROWS_AS(series(0, {1}, 2).substitute_power(0), Error);
}

TEST_CASE("product expansion against a brute-force oracle") {
  CHECK(product_expansion({}, 6) == RationalSeries::constant(1, 6));
  CHECK(product_expansion({{1, 0}, {2, 0}}, 6) == RationalSeries::constant(1, 6));
  CHECK(eta_product(24, 4).shift(1) == series(1, {1, -24, 252, -1472}, 5));
  CHECK(eta_product(-24, 4) == series(0, {1, 24, 324, 3200}, 4));
  for (long e : {-24L, -3L, -1L, 1L, 2L, 24L}) {
    const int n = 18;
    const auto oracle = brute_eta(e, n);
    const auto s = eta_product(e, n);
    for (int i = 0; i < n; ++i) {
      CHECK(s.coefficient(i) == Rational(static_cast<long>(oracle[static_cast<std::size_t>(i)])));
    }
  }
  // Mixed exponents: (1-q)^2 (1-q^3)^-1 = (1 - 2q + q^2)(1 + q^3 + q^6 + ...).
  CHECK(product_expansion({{1, 2}, {3, -1}}, 7) == series(0, {1, -2, 1, 1, -2, 1, 1}, 7));
}

TEST_CASE("y coefficients") {
  const JacobiSeries s(0, {YLaurent(648), YLaurent{{-1, 3780}, {0, 23760}, {1, 3780}}}, 2);
  CHECK(y_coefficient(s, 0, 0) == 648);
  CHECK(y_coefficient(s, 1, 1) == 3780);
  CHECK(y_coefficient(s, 0, 1) == 0);
  CHECK_THROWS_AS(y_coefficient(s, 2, 0), Error);
  CHECK(invert_y(s) == s);
  CHECK(negate_y(negate_y(s)) == s);
  CHECK(y_coefficient(negate_y(s), 1, 1) == -3780);
}

TEST_CASE("ring laws on random series") {
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<int> len(1, 9);
    auto make = [&] {
      const int v = val(rng);
      return random_series(rng, v, v + len(rng));
    };
    const auto a = make();
    const auto b = make();
    const auto c = make();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK(((a + b) + c).agrees_with(a + (b + c)));
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    CHECK((a - a).is_zero());
  }
}

TEST_CASE("ring laws with Laurent polynomial coefficients") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_jacobi(rng, -1, 4);
    const auto b = random_jacobi(rng, 0, 5);
    const auto c = random_jacobi(rng, 1, 5);
    CHECK(a * b == b * a);
    CHECK(((a * b) * c).agrees_with(a * (b * c)));
    CHECK((a * (b + c)).agrees_with(a * b + a * c));
    CHECK(invert_y(a * b) == invert_y(a) * invert_y(b));
  }
}

TEST_CASE("inverse times series is one") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> val(-4, 4);
    std::uniform_int_distribution<int> len(1, 10);
    const int v = val(rng);
    const auto a = random_series(rng, v, v + len(rng), true);
    const auto prod = a * a.invert();
    CHECK(a.invert().valuation() == -a.valuation());
    CHECK(prod == RationalSeries::constant(1, prod.order()));
  }
}

TEST_CASE("leibniz rule") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = random_series(rng, -2, 6);
    const auto b = random_series(rng, 1, 8);
    CHECK((a * b).q_derivative().agrees_with(a.q_derivative() * b + a * b.q_derivative()));
  }
}

TEST_CASE("truncation coherence") {
  std::mt19937_64 rng(5150);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 0, 14, true);
    const auto b = random_series(rng, -1, 13);
    auto expr = [](const RationalSeries& x, const RationalSeries& y) {
      return (x * y + x.invert() * y.q_derivative()).substitute_negate() * x;
    };
    const auto full = expr(a, b);
    for (int m : {3, 6, 9}) {
      const auto direct = expr(a.truncate(m), b.truncate(m));
      CHECK(full.truncate(direct.order()) == direct);
    }
  }
  // Named series built at a high order truncate to the low-order build.
  CHECK(modforms::inv_delta(30).truncate(10) == modforms::inv_delta(10));
  CHECK(modforms::eisenstein(4, 30).truncate(10) == modforms::eisenstein(4, 10));
}

TEST_CASE("substitution composition") {
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, -1, 6);
    CHECK(a.substitute_negate().substitute_negate() == a);
    for (int m : {1, 2, 3}) {
      for (int k : {2, 4}) {
        CHECK(a.substitute_power(m).substitute_power(k) == a.substitute_power(m * k));
      }
    }
  }
}
