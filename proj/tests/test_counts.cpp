#include <map>

#include "doctest.h"
#include "hkcount/counts.hpp"
#include "hkcount/modforms.hpp"

using namespace hk;
using namespace hk::counts;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvariantViolation;
}

}  // namespace

TEST_CASE("K3 counts") {
  const auto n = n_k3_series(9);
  CHECK(n.coefficient(-1) == 0);
  const long expected[] = {0, 24, 648, 9600, 102600, 881280, 6442320, 41513472};
  for (int h = 0; h <= 7; ++h) CHECK(n.coefficient(h - 1) == expected[h]);
  const auto rows = table1(7);
  REQUIRE(rows.size() == 8);
  CHECK(rows.back().h == 7);
  CHECK(rows.back().bb_square == 12);
  CHECK(rows.back().count == 41513472);
  CHECK(table1(0).size() == 1);
  CHECK(table1(0).front().count == 0);
  // n_{K3,h} = h * [q^{h-1}] 1/Delta.
  const auto inv = modforms::inv_delta(20);
  for (const auto& row : table1(18)) CHECK(row.count == row.h * inv.coefficient(row.h - 1));
}

TEST_CASE("bridge identity") {
  const auto s = k3_series(10);
  CHECK(s.n == (s.big_n - s.c) * Rational(1, 2));
  CHECK(s.c == Rational(-2) * modforms::inv_delta(10));
  CHECK(s.big_n.coefficient(0) == 0);
  CHECK(s.big_n.coefficient(1) == 648);
}

TEST_CASE("two-variable expansion") {
  const auto s = n_k3two_jacobi(3);
  CHECK(s.valuation() == 0);
  CHECK(s.coefficient(0) == YLaurent(648));
  CHECK(s.coefficient(1) == YLaurent{{-2, 648}, {-1, 3780}, {0, 23760}, {1, 3780}, {2, 648}});
  CHECK(y_coefficient(s, 0, 1) == 0);
  CHECK(y_coefficient(s, 2, 0) == 470880);
  CHECK(y_coefficient(s, 2, 1) == 129600);
  CHECK(jacobi_bracket(4).coefficient(0).is_zero());
}

TEST_CASE("two-variable coefficients depend only on 4n - k^2") {
  const int order = 8;
  const auto s = n_k3two_jacobi(order);
  std::map<int, Rational> by_discriminant;
  for (int n = 0; n < order; ++n) {
    for (const auto& [k, c] : s.coefficient(n).terms()) {
      const int d = 4 * n - k * k;
      CHECK(d >= 0);
      CHECK(d % 4 != 1);
      CHECK(d % 4 != 2);
      CHECK(c == y_coefficient(s, n, -k));
      auto [it, inserted] = by_discriminant.emplace(d, c);
      if (!inserted) CHECK(it->second == c);
    }
    // Every k with 4n - k^2 < 0 vanishes.
    for (int k = -3 * order; k <= 3 * order; ++k) {
      if (4 * n - k * k < 0) CHECK(y_coefficient(s, n, k) == 0);
    }
  }
  CHECK(invert_y(s) == s);
}

TEST_CASE("representatives") {
  CHECK_FALSE(minimal_representative(1));
  CHECK_FALSE(minimal_representative(6));
  const auto r0 = minimal_representative(0);
  REQUIRE(r0);
  CHECK((r0->n == 0 && r0->k == 0));
  const auto r3 = minimal_representative(3);
  REQUIRE(r3);
  CHECK((r3->n == 1 && r3->k == 1));
  const auto rm = minimal_representative(-1);
  REQUIRE(rm);
  CHECK((rm->n == 0 && rm->k == 1));
  const auto all = representatives(0, 5);
  REQUIRE(all.size() == 3);
  CHECK((all[1].n == 1 && all[1].k == 2));
  CHECK((all[2].n == 4 && all[2].k == 4));
}

TEST_CASE("single counts") {
  const auto s = n_k3two_jacobi(6);
  CHECK(n_k3two(s, 0) == 648);
  CHECK(n_k3two(s, 3) == 3780);
  CHECK(n_k3two(s, -1) == 0);
  CHECK(y_coefficient(s, 2, 3) == 0);
  CHECK(y_coefficient(s, 0, 1) == 0);
  CHECK(n_k3two(s, 5) == 0);
  CHECK(n_k3two(-4, 4) == 0);
  CHECK(n_k3two(12, 6) == 6629040);
  // degree-zero match with the K3 table
  CHECK(n_k3two(s, 0) == n_k3_series(4).coefficient(1));
}

TEST_CASE("error paths") {
  CHECK(code_of([] { n_k3two(n_k3two_jacobi(2), 11); }) == ErrorCode::RepresentativeOutOfRange);
  CHECK(code_of([] { y_coefficient(n_k3two_jacobi(2), 2, 0); }) == ErrorCode::OrderExceeded);
  CHECK(code_of([] { n_k3_series(0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { table1(-1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { table2(-3, Method::Jacobi); }) == ErrorCode::InvalidArgument);
  // A tampered series whose representatives disagree.
  auto s = n_k3two_jacobi(3);
  std::vector<YLaurent> c{s.coefficient(0), s.coefficient(1) + YLaurent::monomial(2, 1),
                          s.coefficient(2)};
  const JacobiSeries bad(0, std::move(c), 3);
  CHECK(code_of([&] { n_k3two(bad, 0); }) == ErrorCode::JacobiIndexViolation);
}

TEST_CASE("gamma0 series") {
  const auto g = n_k3two_gamma0(13);
  CHECK(g.valuation() == 0);
  CHECK(g.coefficient(0) == 648);
  CHECK(g.coefficient(1) == 0);
  CHECK(g.coefficient(2) == 0);
  CHECK(g.coefficient(3) == 3780);
  CHECK(g.coefficient(4) == 23760);
  CHECK(g.coefficient(12) == 6629040);
}

TEST_CASE("K3[2] table") {
  const std::map<int, long> expected{{0, 648},     {3, 3780},     {4, 23760},  {7, 129600},
                                  {8, 470880},  {11, 2396520}, {12, 6629040}};
  for (Method m : {Method::Jacobi, Method::Gamma0, Method::Both}) {
    const auto rows = table2(12, m);
    REQUIRE(rows.size() == expected.size());
    for (const auto& row : rows) {
      CHECK(row.count == expected.at(row.s));
      CHECK(row.bb_square == make_rational(row.s, 2));
      CHECK(4 * row.representative.n - row.representative.k * row.representative.k == row.s);
    }
  }
  CHECK(to_string(table2(3, Method::Jacobi).back().bb_square) == "3/2");
  CHECK(k3_default_order(7) == 9);
  CHECK(k3two_default_qorder(12) == 6);
  CHECK(k3two_default_qorder(13) == 7);
}

TEST_CASE("jacobi and gamma0 paths agree coefficientwise") {
  const int smax = 24;
  const auto g = n_k3two_gamma0(smax + 1);
  const auto j = n_k3two_jacobi(k3two_default_qorder(smax));
  for (int s = -4; s <= smax; ++s) {
    const Rational js = n_k3two(j, s);
    if (s >= 0) CHECK(js == g.coefficient(s));
    if (s < 0 || s % 4 == 1 || s % 4 == 2) CHECK(js == 0);
  }
}
