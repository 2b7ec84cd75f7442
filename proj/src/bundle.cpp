#include <algorithm>

#include "chow_internal.hpp"
#include "hkcount/chow.hpp"
#include "hkcount/error.hpp"

namespace hk::chow {

namespace {

long rank_of(const ChowClass& ch) {
  const Rational& r = ch.coefficient(0);
  if (!is_integer(r) || !r.get_num().fits_slong_p()) {
    throw Error(ErrorCode::InvalidArgument, "Chern character has non-integral rank " + to_string(r));
  }
  return r.get_num().get_si();
}

void require_same_space(const BundleClass& a, const BundleClass& b) {
  if (!(a.space() == b.space())) {
    throw Error(ErrorCode::SpaceMismatch, "bundles live on different spaces");
  }
}

// Scales the degree-i part by f(i).
template <class F>
ChowClass scale_by_degree(const ChowClass& a, F&& f) {
  std::vector<Rational> c = a.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (sgn(c[i]) != 0) c[i] *= f(a.space().basis_degree(i));
  }
  return ChowClass(a.space(), std::move(c));
}

}  // namespace

BundleClass::BundleClass(ChowClass ch) : BundleClass(ch, ch.space().dimension()) {}

BundleClass::BundleClass(ChowClass ch, int precision)
    : ch_(std::move(ch)), rank_(0), precision_(std::clamp(precision, 0, ch_.space().dimension())) {
  ch_ = ch_.truncate(precision_);
  rank_ = rank_of(ch_);
}

BundleClass BundleClass::trivial(const Space& space, long rank) {
  return BundleClass(ChowClass::constant(space, rank));
}

BundleClass BundleClass::line_bundle(const ChowClass& c1) {
  return line_bundle(c1, c1.space().dimension());
}

BundleClass BundleClass::line_bundle(const ChowClass& c1, int precision) {
  return BundleClass(c1.exp(precision), precision);
}

BundleClass BundleClass::from_chern_classes(const Space& space, long rank,
                                            const std::vector<ChowClass>& c) {
  const int top = std::min<int>(static_cast<int>(c.size()) - 1, space.dimension());
  // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
  std::vector<ChowClass> p;
  p.reserve(static_cast<std::size_t>(std::max(top, 0)) + 1);
  p.emplace_back(space);
  ChowClass ch = ChowClass::constant(space, rank);
  for (int k = 1; k <= top; ++k) {
    ChowClass pk = c[static_cast<std::size_t>(k)] * Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k; ++i) {
      ChowClass t = c[static_cast<std::size_t>(i)].multiply(p[static_cast<std::size_t>(k - i)], k);
      if (i % 2 == 1) {
        pk += t;
      } else {
        pk -= t;
      }
    }
    ch += pk * (1 / factorial(static_cast<unsigned>(k)));
    p.push_back(std::move(pk));
  }
  return BundleClass(std::move(ch), std::max(top, 0));
}

BundleClass BundleClass::dual() const {
  return BundleClass(scale_by_degree(ch_, [](int d) { return Rational(d % 2 == 0 ? 1 : -1); }),
                     precision_);
}

BundleClass BundleClass::pullback(const Space& target) const {
  // Pulling back does not raise the degree to which ch is known.
  const int p = precision_ == space().dimension() ? target.dimension() : precision_;
  return BundleClass(ch_.pullback(target), p);
}

BundleClass BundleClass::with_precision(int precision) const {
  return BundleClass(ch_, std::min(precision, precision_));
}

BundleClass BundleClass::adams(int k) const {
  return BundleClass(scale_by_degree(ch_,
                                     [k](int d) {
                                       Integer v;
                                       mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(std::abs(k)),
                                                     static_cast<unsigned long>(d));
                                       if (k < 0 && d % 2 == 1) v = -v;
                                       return Rational(v);
                                     }),
                     precision_);
}

BundleClass BundleClass::sym(int d) const {
  if (d < 0) throw Error(ErrorCode::InvalidArgument, "negative symmetric power");
  // d S_d = sum_{k=1}^{d} psi^k(ch E) S_{d-k}.
  std::vector<ChowClass> s;
  s.push_back(ChowClass::constant(space(), 1));
  std::vector<ChowClass> psi;
  for (int k = 1; k <= d; ++k) psi.push_back(adams(k).ch());
  for (int m = 1; m <= d; ++m) {
    ChowClass acc(space());
    for (int k = 1; k <= m; ++k) {
      acc += psi[static_cast<std::size_t>(k - 1)].multiply(s[static_cast<std::size_t>(m - k)],
                                                           precision_);
    }
    acc *= Rational(1, m);
    s.push_back(std::move(acc));
  }
  return BundleClass(s.back(), precision_);
}

std::vector<ChowClass> BundleClass::chern_classes(int max_index) const {
  const int top = std::clamp(max_index, 0, precision_);
  // k c_k = sum_{i=1}^{k} (-1)^{i-1} c_{k-i} p_i with p_i = i! ch_i.
  std::vector<ChowClass> p;
  p.emplace_back(space());
  for (int i = 1; i <= top; ++i) {
    p.push_back(ch_.degree_part(i) * factorial(static_cast<unsigned>(i)));
  }
  std::vector<ChowClass> c;
  c.push_back(ChowClass::constant(space(), 1));
  for (int k = 1; k <= top; ++k) {
    ChowClass acc(space());
    for (int i = 1; i <= k; ++i) {
      const auto& ci = c[static_cast<std::size_t>(k - i)];
      const auto& pi = p[static_cast<std::size_t>(i)];
      if (ci.is_zero() || pi.is_zero()) continue;
      ChowClass t = ci.multiply(pi, k);
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    acc *= Rational(1, k);
    c.push_back(std::move(acc));
  }
  return c;
}

ChowClass BundleClass::chern_class(int i) const {
  if (i < 0 || i > space().dimension()) return ChowClass(space());
  if (i > precision_) {
    throw Error(ErrorCode::InvalidArgument,
                "c_" + std::to_string(i) + " requested beyond the known precision");
  }
  return chern_classes(i).back();
}

ChowClass BundleClass::total_chern_class() const {
  ChowClass total(space());
  for (const auto& c : chern_classes()) total += c;
  return total;
}

BundleClass operator+(const BundleClass& a, const BundleClass& b) {
  require_same_space(a, b);
  return BundleClass(a.ch_ + b.ch_, std::min(a.precision_, b.precision_));
}

BundleClass operator-(const BundleClass& a, const BundleClass& b) {
  require_same_space(a, b);
  return BundleClass(a.ch_ - b.ch_, std::min(a.precision_, b.precision_));
}

BundleClass operator*(const BundleClass& a, const BundleClass& b) {
  require_same_space(a, b);
  const int p = std::min(a.precision_, b.precision_);
  return BundleClass(a.ch_.multiply(b.ch_, p), p);
}

bool operator==(const BundleClass& a, const BundleClass& b) {
  return a.precision_ == b.precision_ && a.ch_ == b.ch_;
}

BundleClass tensor(const BundleClass& a, const BundleClass& b) { return a * b; }

BundleClass tautological_quotient(const Space& grassmannian) {
  const int k = grassmannian.grass_k();
  const int n = grassmannian.grass_n();
  std::vector<ChowClass> c;
  for (int i = 0; i <= grassmannian.dimension(); ++i) c.push_back(special_schubert(grassmannian, i));
  return BundleClass::from_chern_classes(grassmannian, n - k, c);
}

BundleClass tautological_sub(const Space& grassmannian) {
  return BundleClass::trivial(grassmannian, grassmannian.grass_n()) -
         tautological_quotient(grassmannian);
}

BundleClass tautological_line(const Space& proj_bundle) {
  return BundleClass::line_bundle(-hyperplane(proj_bundle));
}

BundleClass hyperplane_bundle(const Space& proj_bundle) {
  return BundleClass::line_bundle(hyperplane(proj_bundle));
}

BundleClass universal_quotient(const Space& proj_bundle) {
  return proj_bundle.bundle().pullback(proj_bundle) - tautological_line(proj_bundle);
}

BundleClass tangent_bundle(const Space& space) { return tangent_bundle(space, space.dimension()); }

BundleClass tangent_bundle(const Space& space, int precision) {
  switch (space.kind()) {
    case SpaceKind::Point:
      return BundleClass::trivial(space, 0);
    case SpaceKind::Grassmannian: {
      const BundleClass s = tautological_sub(space).with_precision(precision);
      const BundleClass q = tautological_quotient(space).with_precision(precision);
      return s.dual() * q;
    }
    case SpaceKind::ProjBundle: {
      const ChowClass z = hyperplane(space);
      const BundleClass o1 = BundleClass::line_bundle(z, precision);
      const BundleClass o_minus1 = BundleClass::line_bundle(-z, precision);
      const BundleClass e = space.bundle().with_precision(precision).pullback(space);
      const BundleClass relative = o1 * (e.with_precision(precision) - o_minus1);
      return tangent_bundle(space.base(), precision).pullback(space).with_precision(precision) +
             relative;
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown space kind");
}

ChowClass canonical_class(const Space& space) { return -tangent_bundle(space, 1).chern_class(1); }

ChowClass segre_class(const BundleClass& e) {
  const auto c = e.chern_classes();
  std::vector<ChowClass> s;
  s.push_back(ChowClass::constant(e.space(), 1));
  ChowClass total = s.front();
  for (int k = 1; k < static_cast<int>(c.size()); ++k) {
    ChowClass acc(e.space());
    for (int i = 1; i <= k; ++i) {
      acc -= c[static_cast<std::size_t>(i)].multiply(s[static_cast<std::size_t>(k - i)], k);
    }
    total += acc;
    s.push_back(std::move(acc));
  }
  return total;
}

}  // namespace hk::chow
