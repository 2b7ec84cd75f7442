#include "hkcount/report.hpp"

#include "hkcount/counts.hpp"
#include "hkcount/error.hpp"
#include "hkcount/fano.hpp"
#include "hkcount/modforms.hpp"
#include "selftest.hpp"

namespace hk::report {

Table k3_table(int hmax) {
  Table t{{"h", "bb_square", "value"}, {}};
  for (const auto& row : counts::table1(hmax)) {
    t.rows.push_back({std::to_string(row.h), std::to_string(row.bb_square), to_string(row.count)});
  }
  return t;
}

Table k3two_table(int smax, Method method) {
  const auto m = method == Method::Jacobi   ? counts::Method::Jacobi
                 : method == Method::Gamma0 ? counts::Method::Gamma0
                                            : counts::Method::Both;
  Table t{{"s", "bb_square", "value"}, {}};
  for (const auto& row : counts::table2(smax, m)) {
    t.rows.push_back({std::to_string(row.s), to_string(row.bb_square), to_string(row.count)});
  }
  return t;
}

Table series_table(const std::string& name, int order) {
  const auto which = modforms::parse_series_name(name);
  if (!which) throw Error(ErrorCode::InvalidArgument, "unknown series '" + name + "'");
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "order must be >= 1");
  const RationalSeries s = modforms::named_series(*which, order);
  Table t{{"exponent", "value"}, {}};
  const int start = std::min(s.valuation(), 0);
  for (int e = start; e < s.order(); ++e) {
    t.rows.push_back({std::to_string(e), to_string(s.coefficient(e))});
  }
  return t;
}

Table jacobi_table(int qorder) {
  if (qorder < 1) throw Error(ErrorCode::InvalidArgument, "qorder must be >= 1");
  const JacobiSeries s = counts::n_k3two_jacobi(qorder);
  Table t{{"n", "k", "s", "value"}, {}};
  for (int n = 0; n < s.order(); ++n) {
    for (const auto& [k, c] : s.coefficient(n).terms()) {
      t.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(4 * n - k * k),
                        to_string(c)});
    }
  }
  return t;
}

Table fano_table(FanoQuantity which, bool via_euler) {
  using namespace chow;
  const FanoTower tower = build_fano_tower();
  Table t{{"quantity", "value"}, {}};
  if (which == FanoQuantity::Genus) {
    const GenusResult g = sigma_genus(tower);
    t.rows.push_back({"adjunction-integral", to_string(g.adjunction_integral)});
    t.rows.push_back({"genus", std::to_string(g.genus)});
    return t;
  }
  const ChowClass closed = discriminant_divisor_on(tower.pe, tower.q_tilde);
  const ChowClass euler = discriminant_divisor_via_euler_on(tower.pe, tower.q_tilde);
  if (!(closed == euler)) {
    throw Error(ErrorCode::InvariantViolation,
                "discriminant classes differ: " + closed.to_string() + " vs " + euler.to_string());
  }
  const Rational degree =
      sigma_j_degree(tower, via_euler ? DiscriminantRoute::Euler : DiscriminantRoute::ClosedForm);
  t.rows.push_back({"route", via_euler ? "euler" : "closed-form"});
  t.rows.push_back({"degree", to_string(degree)});
  return t;
}

Table selftest_table(SelftestLevel level) {
  Table t{{"check", "expected", "status", "value"}, {}};
  for (const auto& c : selftest::run(level == SelftestLevel::Full)) {
    t.rows.push_back({c.name, c.expected, c.passed ? "PASS" : "FAIL", c.actual});
    if (!c.passed) t.failed = true;
  }
  return t;
}

}  // namespace hk::report
