#include "doctest.h"
#include "hkcount/error.hpp"
#include "hkcount/rational.hpp"
#include "hkcount/ylaurent.hpp"

using namespace hk;

TEST_CASE("rationals stay canonical") {
  const Rational r = make_rational(6, -4);
  CHECK(r.get_num() == -3);
  CHECK(r.get_den() == 2);
  CHECK(to_string(r) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(to_string(make_rational(3, 9) * 3) == "1");
}

TEST_CASE("parse round-trips") {
  for (const char* s : {"0", "-5", "12/7", "-1/3", "41513472"}) {
    CHECK(to_string(parse_rational(s)) == s);
  }
  CHECK(parse_rational("4/6") == make_rational(2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("integer helpers") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(4, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(to_int64(Rational(-9600)) == -9600);
  CHECK_THROWS_AS(to_int64(make_rational(1, 2)), Error);
}

TEST_CASE("laurent polynomials in y") {
  const YLaurent t{{-1, 1}, {0, -2}, {1, 1}};
  CHECK(t.to_string() == "y - 2 + y^-1");
  CHECK(t.eval_at_one() == 0);
  CHECK(t.eval_at_minus_one() == -4);
  CHECK(t.invert_variable() == t);
  CHECK((t * t).coefficient(0) == 6);
  CHECK((t * t).coefficient(2) == 1);
  CHECK((t - t).is_zero());
  CHECK(YLaurent::monomial(3, 2).monomial_inverse() == YLaurent::monomial(-3, make_rational(1, 2)));
  CHECK(t.negate_variable() == YLaurent{{-1, -1}, {0, -2}, {1, -1}});
  YLaurent acc;
  acc.add_product(t, t);
  CHECK(acc == t * t);
}
