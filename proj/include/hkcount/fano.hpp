#pragma once

#include "hkcount/chow.hpp"

namespace hk::chow {

// Cubic cones in 3-planes of P^5: G = Gr(4,6) with tautological K (rank 4),
// PK = P(K) -> G with y = c_1(O_PK(1)) and Qt = p^*K - O_PK(-1) (rank 3),
// PE = P(Sym^3 Qt^v) -> PK with z = c_1(O_PE(1)), and
// F = (pullback of Sym^3 K^v) - O_PE(-1), of virtual rank 19 on the
// 20-dimensional PE.
struct FanoTower {
  Space g;
  Space pk;
  Space pe;
  BundleClass k_sub;
  BundleClass q_tilde;  // on PK
  BundleClass e;        // Sym^3 Qt^v on PK
  BundleClass f;        // on PE
  ChowClass y;          // on PK
  ChowClass z;          // on PE
  ChowClass c1_q_tilde; // on PK
};

FanoTower build_fano_tower();

struct GenusResult {
  Rational adjunction_integral;  // int_PE c_19(F) (K_PE + c_1(F)) = 2g - 2
  long genus;
};

// Adjunction for the zero locus of a regular section of a rank-(dim - 1)
// bundle; raises OddAdjunctionIntegral when the integral is odd.
GenusResult zero_locus_genus(const Space& ambient, const BundleClass& bundle);

GenusResult sigma_genus(const FanoTower& tower);
GenusResult sigma_genus();

struct Discriminant {
  Space pw;   // P(Sym^3 V^v) over X
  ChowClass d;  // class of the singular-cubic divisor on pw
};

// P(Sym^3 V^v) over V's space, V of rank 3: the relative space of plane cubics.
Space cubic_curves_bundle(const BundleClass& v);

// D = 12 z_W - 12 c_1(V), building P(Sym^3 V^v) over x.
Discriminant discriminant_divisor_class(const Space& x, const BundleClass& v);
// Same formula on an existing pw = P(Sym^3 V^v) over V's space.
ChowClass discriminant_divisor_on(const Space& pw, const BundleClass& v);

// Independent route: on P(V) over pw, the Euler class of
// O_{P(V)}(2) (x) O_{P(W)}(1) (x) V^v pushed forward to pw.
Discriminant discriminant_divisor_via_euler(const Space& x, const BundleClass& v);
ChowClass discriminant_divisor_via_euler_on(const Space& pw, const BundleClass& v);

enum class DiscriminantRoute { ClosedForm, Euler };

// int_PE c_19(F) D: the number of singular cubic cones on the curve cut out by F.
Rational sigma_j_degree(const FanoTower& tower, DiscriminantRoute route);
Rational sigma_j_degree(DiscriminantRoute route);

}  // namespace hk::chow
