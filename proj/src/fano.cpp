#include "hkcount/fano.hpp"

#include "hkcount/error.hpp"

namespace hk::chow {

namespace {

void require_rank3(const BundleClass& v) {
  if (v.rank() != 3) {
    throw Error(ErrorCode::RankMismatch,
                "plane cubics need a rank-3 bundle, got rank " + std::to_string(v.rank()));
  }
}

void require_cubics_over(const Space& pw, const BundleClass& v) {
  require_rank3(v);
  if (pw.kind() != SpaceKind::ProjBundle || !(pw.base() == v.space()) || pw.fiber_rank() != 10) {
    throw Error(ErrorCode::SpaceMismatch, "expected P(Sym^3 V^v) over the space of V");
  }
}

}  // namespace

FanoTower build_fano_tower() {
  const Space g = Space::grassmannian(4, 6);
  const BundleClass k_sub = tautological_sub(g);
  const Space pk = Space::proj_bundle(k_sub, "y");
  const BundleClass q_tilde = universal_quotient(pk);
  const BundleClass e = q_tilde.dual().sym(3);
  const Space pe = Space::proj_bundle(e, "z");
  const BundleClass f = k_sub.dual().sym(3).pullback(pe) - tautological_line(pe);
  return FanoTower{g,   pk,   pe, k_sub, q_tilde, e, f, hyperplane(pk), hyperplane(pe),
                   q_tilde.chern_class(1)};
}

GenusResult zero_locus_genus(const Space& ambient, const BundleClass& bundle) {
  const int r = ambient.dimension() - 1;
  if (bundle.rank() != r || !(bundle.space() == ambient)) {
    throw Error(ErrorCode::RankMismatch, "zero locus of a section is not a curve");
  }
  const auto c = bundle.chern_classes(r);
  const ChowClass integrand =
      c[static_cast<std::size_t>(r)] * (canonical_class(ambient) + c[1]);
  const Rational integral = integrand.integral();
  if (!is_integer(integral) || integral.get_num() % 2 != 0) {
    throw Error(ErrorCode::OddAdjunctionIntegral,
                "adjunction integral " + to_string(integral) + " is not even");
  }
  return GenusResult{integral, to_int64(integral / 2 + 1)};
}

GenusResult sigma_genus(const FanoTower& tower) { return zero_locus_genus(tower.pe, tower.f); }

GenusResult sigma_genus() { return sigma_genus(build_fano_tower()); }

Space cubic_curves_bundle(const BundleClass& v) {
  require_rank3(v);
  return Space::proj_bundle(v.dual().sym(3), "z");
}

Discriminant discriminant_divisor_class(const Space& x, const BundleClass& v) {
  if (!(v.space() == x)) throw Error(ErrorCode::SpaceMismatch, "V must live on X");
  const Space pw = cubic_curves_bundle(v);
  return Discriminant{pw, discriminant_divisor_on(pw, v)};
}

ChowClass discriminant_divisor_on(const Space& pw, const BundleClass& v) {
  require_cubics_over(pw, v);
  return Rational(12) * hyperplane(pw) - Rational(12) * v.chern_class(1).pullback(pw);
}

Discriminant discriminant_divisor_via_euler(const Space& x, const BundleClass& v) {
  if (!(v.space() == x)) throw Error(ErrorCode::SpaceMismatch, "V must live on X");
  const Space pw = cubic_curves_bundle(v);
  return Discriminant{pw, discriminant_divisor_via_euler_on(pw, v)};
}

ChowClass discriminant_divisor_via_euler_on(const Space& pw, const BundleClass& v) {
  require_cubics_over(pw, v);
  // pwv = P(W) x_X P(V), realised as P(V) pulled back to pw.
  const Space pwv = Space::proj_bundle(v.pullback(pw), "w");
  const ChowClass w = hyperplane(pwv);
  const ChowClass zeta = hyperplane(pw).pullback(pwv);
  constexpr int kRank = 3;
  const BundleClass twist = BundleClass::line_bundle(Rational(2) * w + zeta, kRank);
  const BundleClass m = twist * v.dual().with_precision(kRank).pullback(pwv);
  return pushforward(m.chern_class(kRank));
}

Rational sigma_j_degree(const FanoTower& tower, DiscriminantRoute route) {
  const ChowClass d = route == DiscriminantRoute::ClosedForm
                          ? discriminant_divisor_on(tower.pe, tower.q_tilde)
                          : discriminant_divisor_via_euler_on(tower.pe, tower.q_tilde);
  return (tower.f.chern_class(tower.f.rank()) * d).integral();
}

Rational sigma_j_degree(DiscriminantRoute route) {
  return sigma_j_degree(build_fano_tower(), route);
}

}  // namespace hk::chow
