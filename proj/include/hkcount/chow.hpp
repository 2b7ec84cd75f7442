#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "hkcount/rational.hpp"
#include "hkcount/schubert.hpp"

namespace hk::chow {

class BundleClass;
class ChowClass;

namespace detail {
struct SpaceData;
}

enum class SpaceKind { Point, Grassmannian, ProjBundle };

// A space whose rational Chow ring is a free module with an explicit graded
// basis: a point, a Grassmannian Gr(k, n) of k-planes in C^n with the
// Schubert basis, or a projective bundle P(E) of lines in E over another such
// space with basis {z^j * b : j < rank E, b in basis(base)}, z = c_1(O(1)).
//
// Spaces are immutable handles; copies share the same ring and compare equal.
// Classes from different spaces never mix implicitly, pullback first.
class Space {
 public:
  static Space point();
  static Space grassmannian(int k, int n);
  // P(E) over E.space(); O(-1) is the tautological subbundle of the pullback
  // of E. `generator` names z in labels.
  static Space proj_bundle(const BundleClass& bundle, std::string generator = "z");

  SpaceKind kind() const;
  int dimension() const;
  std::size_t basis_size() const;
  int basis_degree(std::size_t index) const;
  std::string basis_label(std::size_t index) const;
  // Index of the unique top-degree basis element (the point class).
  std::size_t point_index() const;

  // Grassmannian accessors.
  int grass_k() const;
  int grass_n() const;
  const std::vector<Partition>& schubert_basis() const;
  std::size_t schubert_index(const Partition& p) const;

  // Projective bundle accessors.
  const Space& base() const;
  const BundleClass& bundle() const;
  int fiber_rank() const;
  const std::string& generator() const;

  // True when `other` is this space or one of the bases below it.
  bool lies_over(const Space& other) const;

  const detail::SpaceData& data() const { return *data_; }

  friend bool operator==(const Space& a, const Space& b) { return a.data_ == b.data_; }

 private:
  explicit Space(std::shared_ptr<const detail::SpaceData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::SpaceData> data_;
};

// Element of the Chow ring (possibly of mixed degree), stored densely in the
// space's basis.
class ChowClass {
 public:
  explicit ChowClass(Space space);
  ChowClass(Space space, std::vector<Rational> coefficients);

  static ChowClass constant(const Space& space, const Rational& c);
  static ChowClass basis_element(const Space& space, std::size_t index,
                                 const Rational& c = 1);

  const Space& space() const { return space_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t index) const { return coeffs_.at(index); }

  bool is_zero() const;
  // Lowest / highest degree with a nonzero coefficient; -1 for the zero class.
  int min_degree() const;
  int max_degree() const;

  ChowClass degree_part(int degree) const;
  ChowClass truncate(int max_degree) const;

  // Product with every term above max_degree dropped.
  ChowClass multiply(const ChowClass& other, int max_degree) const;
  ChowClass pow(int exponent, int max_degree) const;
  // exp(this) through max_degree; requires no degree-0 part.
  ChowClass exp(int max_degree) const;

  ChowClass pullback(const Space& target) const;
  // Degree of the top-degree part via iterated pushforward to a point.
  Rational integral() const;

  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const Rational& c);
  ChowClass operator-() const;

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
  friend ChowClass operator*(ChowClass a, const Rational& c) { return a *= c; }
  friend ChowClass operator*(const Rational& c, ChowClass a) { return a *= c; }
  friend bool operator==(const ChowClass& a, const ChowClass& b);

  std::string to_string() const;

 private:
  Space space_;
  std::vector<Rational> coeffs_;
};

// Schubert class sigma_lambda on a Grassmannian.
ChowClass schubert(const Space& grassmannian, const Partition& lambda);
// sigma_i = c_i(Q).
ChowClass special_schubert(const Space& grassmannian, int i);
// z = c_1(O(1)) on a projective bundle.
ChowClass hyperplane(const Space& proj_bundle);
// Pushforward along P(E) -> base: the z^{r-1} coefficient of the normal form.
ChowClass pushforward(const ChowClass& a);

// Class in K-theory with rational coefficients, recorded by its Chern
// character. The degree-0 part of ch is the (virtual) rank; ch is known
// through `precision()` (at most the dimension of the space), and every
// derived quantity is only computed to that degree.
class BundleClass {
 public:
  explicit BundleClass(ChowClass ch);
  BundleClass(ChowClass ch, int precision);

  static BundleClass trivial(const Space& space, long rank);
  // Line bundle with the given first Chern class.
  static BundleClass line_bundle(const ChowClass& c1);
  static BundleClass line_bundle(const ChowClass& c1, int precision);
  // Inverse of chern_classes: c[i] is c_i (c[0] is ignored).
  static BundleClass from_chern_classes(const Space& space, long rank,
                                        const std::vector<ChowClass>& c);

  const Space& space() const { return ch_.space(); }
  long rank() const { return rank_; }
  const ChowClass& ch() const { return ch_; }
  int precision() const { return precision_; }

  BundleClass dual() const;
  BundleClass pullback(const Space& target) const;
  BundleClass with_precision(int precision) const;
  // psi^k: scales the degree-i part of ch by k^i.
  BundleClass adams(int k) const;
  // Sym^d via sum_d ch(Sym^d E) t^d = exp(sum_k psi^k ch(E) t^k / k).
  BundleClass sym(int d) const;

  // c_0 .. c_{min(max_index, precision)} by Newton's identities.
  std::vector<ChowClass> chern_classes(int max_index) const;
  std::vector<ChowClass> chern_classes() const { return chern_classes(precision_); }
  ChowClass chern_class(int i) const;
  ChowClass total_chern_class() const;

  friend BundleClass operator+(const BundleClass& a, const BundleClass& b);
  friend BundleClass operator-(const BundleClass& a, const BundleClass& b);
  // Tensor product.
  friend BundleClass operator*(const BundleClass& a, const BundleClass& b);
  friend bool operator==(const BundleClass& a, const BundleClass& b);

 private:
  ChowClass ch_;
  long rank_;
  int precision_;
};

BundleClass tensor(const BundleClass& a, const BundleClass& b);

// Tautological bundles of Gr(k, n): 0 -> S -> O^n -> Q -> 0.
BundleClass tautological_sub(const Space& grassmannian);
BundleClass tautological_quotient(const Space& grassmannian);

// On P(E): O(-1), O(1) and the universal quotient pi^*E / O(-1).
BundleClass tautological_line(const Space& proj_bundle);
BundleClass hyperplane_bundle(const Space& proj_bundle);
BundleClass universal_quotient(const Space& proj_bundle);

// T(point) = 0, T(Gr) = S^v (x) Q, T(P(E)) = pi^*T(base) + O(1) (x) (pi^*E - O(-1)).
BundleClass tangent_bundle(const Space& space);
BundleClass tangent_bundle(const Space& space, int precision);
ChowClass canonical_class(const Space& space);

// Segre classes s(E) = 1 / c(E) through the dimension of the space.
ChowClass segre_class(const BundleClass& e);

}  // namespace hk::chow
