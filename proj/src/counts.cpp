#include "hkcount/counts.hpp"

#include <cmath>
#include <string>

#include "hkcount/error.hpp"
#include "hkcount/modforms.hpp"

namespace hk::counts {

namespace {

// Extra q-orders computed beyond what the requested coefficients need.
constexpr int kOrderMargin = 2;

void require_integral(const Rational& value, const std::string& what) {
  if (!is_integer(value)) {
    throw Error(ErrorCode::NonIntegralCount, what + " is not an integer: " + to_string(value));
  }
}

int ceil_div4(int s) { return s >= 0 ? (s + 3) / 4 : -((-s) / 4); }

}  // namespace

K3Series k3_series(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "k3 series needs order >= 1");
  const RationalSeries inv = modforms::inv_delta(order);
  const RationalSeries dinv = inv.q_derivative();
  K3Series out{inv + dinv, Rational(2) * dinv, Rational(-2) * inv};
  const RationalSeries bridge = (out.big_n - out.c) * Rational(1, 2);
  if (!(bridge == out.n)) {
    throw Error(ErrorCode::InvariantViolation, "n != (N - C)/2 for the K3 series");
  }
  return out;
}

RationalSeries n_k3_series(int order) { return k3_series(order).n; }

JacobiSeries jacobi_bracket(int order) {
  using modforms::eisenstein;
  const RationalSeries e2 = eisenstein(2, order);
  const RationalSeries e4 = eisenstein(4, order);
  const RationalSeries one = RationalSeries::constant(1, order);
  // 54 wp E2 - 54 wp = 54 wp (E2 - 1); the remaining terms carry the
  // (y - 2 + 1/y) prefactor that turns Theta^2 into P^2.
  const RationalSeries scalar = Rational(-9, 4) * e2 * e2 + Rational(3, 4) * e4 +
                                Rational(15, 2) * e2 - Rational(6) * one;
  const JacobiSeries wp = modforms::wp_tilde(order);
  const JacobiSeries prefactor = JacobiSeries::constant(modforms::theta_prefactor(), order);
  return Rational(54) * wp * to_jacobi(e2 - one) + prefactor * to_jacobi(scalar);
}

JacobiSeries n_k3two_jacobi(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "jacobi series needs order >= 1");
  const int work = order + 1;
  const JacobiSeries bracket = jacobi_bracket(work);
  if (bracket.valuation() < 1) {
    throw Error(ErrorCode::InvariantViolation,
                "bracket does not cancel the pole of 1/Delta: " + bracket.to_string());
  }
  const JacobiSeries raw =
      modforms::prodpart_sq(work) * to_jacobi(modforms::inv_delta(work)) * bracket;
  // The theta and wp constructors use the multiplicative variable p of the
  // elliptic argument. The count series is written in y = -p with Theta
  // normalized as u + O(u^3), which flips the sign of Theta^2, and carries an
  // overall factor 1/2. Only this normalization reproduces
  // 648 + (648y^2 + 3780y + 23760 + ...)q and agrees with the Gamma_0(4) form.
  return (Rational(-1, 2) * negate_y(raw)).truncate(order);
}

RationalSeries n_k3two_gamma0(int order) {
  if (order < 1) throw Error(ErrorCode::InvalidArgument, "gamma0 series needs order >= 1");
  using namespace modforms;
  const int work = order + 5;
  const RationalSeries one = RationalSeries::constant(1, work);
  const RationalSeries th = theta4(work);
  const RationalSeries f = f_series(work);
  const RationalSeries g2 = g_series(2, work);
  const RationalSeries g4 = g_series(4, work);
  const RationalSeries th4 = th * th * th * th;

  const RationalSeries bracket = Rational(-9, 4) * (th4 + Rational(4) * f) * (g2 - one) -
                                 Rational(3, 8) * g4 + Rational(9, 8) * g2 * g2 -
                                 Rational(15, 4) * g2 + Rational(3) * one;
  const RationalSeries delta4 =
      delta(std::max(2, (work + 3) / 4)).substitute_power(4).truncate(work);
  const RationalSeries denominator = f * th * delta4;
  if (bracket.valuation() != denominator.valuation()) {
    throw Error(ErrorCode::BracketValuationMismatch,
                "bracket valuation " + std::to_string(bracket.valuation()) +
                    " does not match denominator valuation " +
                    std::to_string(denominator.valuation()));
  }
  // The displayed right-hand side is n(-q); undo the sign once at the end.
  return (bracket * denominator.invert()).substitute_negate().truncate(order);
}

std::optional<Representative> minimal_representative(int s) {
  const int r = ((s % 4) + 4) % 4;
  if (r == 1 || r == 2) return std::nullopt;
  int k = r == 0 ? 0 : 1;
  while (s + k * k < 0) k += 2;
  return Representative{(s + k * k) / 4, k};
}

std::vector<Representative> representatives(int s, int order) {
  std::vector<Representative> out;
  auto rep = minimal_representative(s);
  if (!rep) return out;
  for (int k = rep->k;; k += 2) {
    const int n = (s + k * k) / 4;
    if (n >= order) break;
    out.push_back({n, k});
  }
  return out;
}

Rational n_k3two(const JacobiSeries& series, int s) {
  const auto rep = minimal_representative(s);
  if (!rep) return 0;
  const auto reps = representatives(s, series.order());
  if (reps.empty()) {
    throw Error(ErrorCode::RepresentativeOutOfRange,
                "s = " + std::to_string(s) + " needs q-order > " + std::to_string(rep->n));
  }
  const Rational value = y_coefficient(series, reps.front().n, reps.front().k);
  for (const auto& r : reps) {
    for (int k : {r.k, -r.k}) {
      if (y_coefficient(series, r.n, k) != value) {
        throw Error(ErrorCode::JacobiIndexViolation,
                    "coefficients of 4n - k^2 = " + std::to_string(s) + " disagree at (" +
                        std::to_string(r.n) + ", " + std::to_string(k) + ")");
      }
    }
  }
  return value;
}

Rational n_k3two(int s, int order) { return n_k3two(n_k3two_jacobi(order), s); }

int k3_default_order(int hmax) { return hmax + 2; }

int k3two_default_qorder(int smax) { return ceil_div4(smax) + 3; }

std::vector<K3Row> table1(int hmax) {
  if (hmax < 0) throw Error(ErrorCode::InvalidArgument, "hmax must be >= 0");
  const RationalSeries n = n_k3_series(k3_default_order(hmax));
  std::vector<K3Row> rows;
  for (int h = 0; h <= hmax; ++h) {
    const Rational& c = n.coefficient(h - 1);
    require_integral(c, "n_K3," + std::to_string(h));
    rows.push_back({h, 2 * h - 2, c});
  }
  return rows;
}

std::vector<K3TwoRow> table2(int smax, Method method) {
  if (smax < 0) throw Error(ErrorCode::InvalidArgument, "smax must be >= 0");
  std::optional<JacobiSeries> jacobi;
  std::optional<RationalSeries> gamma0;
  if (method != Method::Gamma0) jacobi = n_k3two_jacobi(k3two_default_qorder(smax));
  if (method != Method::Jacobi) gamma0 = n_k3two_gamma0(smax + 1 + kOrderMargin);

  std::vector<K3TwoRow> rows;
  for (int s = 0; s <= smax; ++s) {
    const auto rep = minimal_representative(s);
    std::optional<Rational> from_jacobi;
    std::optional<Rational> from_gamma0;
    if (jacobi) from_jacobi = n_k3two(*jacobi, s);
    if (gamma0) from_gamma0 = gamma0->coefficient(s);
    if (from_jacobi && from_gamma0 && *from_jacobi != *from_gamma0) {
      throw Error(ErrorCode::InvariantViolation,
                  "jacobi and gamma0 formulas disagree at s = " + std::to_string(s) + ": " +
                      to_string(*from_jacobi) + " vs " + to_string(*from_gamma0));
    }
    const Rational value = from_jacobi ? *from_jacobi : *from_gamma0;
    if (!rep) {
      if (sgn(value) != 0) {
        throw Error(ErrorCode::InvariantViolation,
                    "nonzero count at s = " + std::to_string(s) + " = 1, 2 mod 4");
      }
      continue;
    }
    require_integral(value, "n_K3[2]," + std::to_string(s));
    rows.push_back({s, make_rational(s, 2), *rep, value});
  }
  return rows;
}

}  // namespace hk::counts
