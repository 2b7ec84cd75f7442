#include "selftest.hpp"

#include <exception>
#include <functional>

#include "hkcount/chow.hpp"
#include "hkcount/counts.hpp"
#include "hkcount/fano.hpp"
#include "hkcount/modforms.hpp"

namespace hk::selftest {

namespace {

using namespace hk::chow;

class Runner {
 public:
  // Records `name: actual` against `expected`; exceptions count as failures.
  void value(const std::string& name, const std::string& expected,
             const std::function<std::string()>& f) {
    std::string actual;
    try {
      actual = f();
    } catch (const std::exception& e) {
      actual = std::string("error: ") + e.what();
    }
    checks_.push_back({name + ": " + expected, expected, actual, actual == expected});
  }

  void holds(const std::string& name, const std::function<bool()>& f) {
    value(name, "true", [&] { return f() ? std::string("true") : std::string("false"); });
  }

  std::vector<Check> take() { return std::move(checks_); }

 private:
  std::vector<Check> checks_;
};

std::string top_chern_integral(int k, int n, int d) {
  const Space g = Space::grassmannian(k, n);
  const BundleClass e = tautological_sub(g).dual().sym(d);
  return to_string(e.chern_class(g.dimension()).integral());
}

void quick_checks(Runner& r) {
  using namespace hk::modforms;
  r.value("delta-q2", "-24", [] { return to_string(delta(4).coefficient(2)); });
  r.value("inv-delta-q0", "24", [] { return to_string(inv_delta(4).coefficient(0)); });
  r.value("e4-q1", "240", [] { return to_string(eisenstein(4, 4).coefficient(1)); });
  r.holds("delta-derivative", [] {
    const int n = 20;
    return delta(n).q_derivative().agrees_with(eisenstein(2, n) * delta(n));
  });
  r.holds("ramanujan-e2", [] {
    const int n = 20;
    const auto e2 = eisenstein(2, n);
    return (Rational(12) * e2.q_derivative()).agrees_with(e2 * e2 - eisenstein(4, n));
  });
  r.holds("g-is-e-of-q4", [] {
    return g_series(2, 40).agrees_with(eisenstein(2, 10).substitute_power(4)) &&
           g_series(4, 40).agrees_with(eisenstein(4, 10).substitute_power(4));
  });
  r.value("k3-h7", "41513472", [] { return to_string(counts::n_k3_series(9).coefficient(6)); });
  r.value("k3two-q0", "648", [] {
    return counts::n_k3two_jacobi(2).coefficient(0).to_string();
  });
  r.value("k3two-q1", "648*y^2 + 3780*y + 23760 + 3780*y^-1 + 648*y^-2", [] {
    return counts::n_k3two_jacobi(2).coefficient(1).to_string();
  });
  r.value("sigma1-power4-gr24", "2", [] {
    const Space g = Space::grassmannian(2, 4);
    return to_string(special_schubert(g, 1).pow(4, g.dimension()).integral());
  });
  r.value("lines-on-cubic", "27", [] { return top_chern_integral(2, 4, 3); });
}

void full_checks(Runner& r) {
  r.value("lines-on-quintic", "2875", [] { return top_chern_integral(2, 5, 5); });
  r.value("euler-gr46", "15", [] {
    const Space g = Space::grassmannian(4, 6);
    return to_string(tangent_bundle(g).chern_class(g.dimension()).integral());
  });
  const FanoTower tower = build_fano_tower();
  r.value("fano-genus", "1260",
          [&] { return to_string(sigma_genus(tower).adjunction_integral); });
  r.value("genus", "631", [&] { return std::to_string(sigma_genus(tower).genus); });
  r.holds("discriminant-routes", [&] {
    return discriminant_divisor_on(tower.pe, tower.q_tilde) ==
           discriminant_divisor_via_euler_on(tower.pe, tower.q_tilde);
  });
  r.value("fano-degree", "3780",
          [&] { return to_string(sigma_j_degree(tower, DiscriminantRoute::ClosedForm)); });
  r.value("fano-degree-euler", "3780",
          [&] { return to_string(sigma_j_degree(tower, DiscriminantRoute::Euler)); });
  r.value("k3two-cross-method-s24", "5647803840", [] {
    return to_string(counts::table2(24, counts::Method::Both).back().count);
  });
}

}  // namespace

std::vector<Check> run(bool full) {
  Runner r;
  quick_checks(r);
  if (full) full_checks(r);
  return r.take();
}

}  // namespace hk::selftest
