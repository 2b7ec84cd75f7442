#include "hkcount/chow.hpp"

#include <algorithm>
#include <sstream>

#include "chow_internal.hpp"
#include "hkcount/error.hpp"

namespace hk::chow {

namespace detail {

namespace {

// Lowest degree of a nonzero entry in x[0..len), or -1.
int lowest_degree(const Rational* x, const std::vector<int>& degree) {
  int lo = -1;
  for (std::size_t i = 0; i < degree.size(); ++i) {
    if (sgn(x[i]) != 0 && (lo < 0 || degree[i] < lo)) lo = degree[i];
  }
  return lo;
}

}  // namespace

void SpaceData::multiply_into(const Rational* a, const Rational* b, Rational* out,
                              int max_degree) const {
  if (max_degree < 0) return;
  switch (kind) {
    case SpaceKind::Point: {
      if (sgn(a[0]) != 0 && sgn(b[0]) != 0) out[0] += a[0] * b[0];
      return;
    }
    case SpaceKind::Grassmannian: {
      const std::size_t len = size();
      std::vector<std::uint32_t> nza;
      std::vector<std::uint32_t> nzb;
      for (std::size_t i = 0; i < len; ++i) {
        if (sgn(a[i]) != 0) nza.push_back(static_cast<std::uint32_t>(i));
        if (sgn(b[i]) != 0) nzb.push_back(static_cast<std::uint32_t>(i));
      }
      Rational t;
      for (auto i : nza) {
        for (auto j : nzb) {
          if (degree[i] + degree[j] > max_degree) continue;
          const auto& terms = table[i * len + j];
          if (terms.empty()) continue;
          mpq_mul(t.get_mpq_t(), a[i].get_mpq_t(), b[j].get_mpq_t());
          for (const auto& term : terms) {
            if (term.coefficient == 1) {
              out[term.index] += t;
            } else {
              out[term.index] += t * term.coefficient;
            }
          }
        }
      }
      return;
    }
    case SpaceKind::ProjBundle: {
      const SpaceData& bd = base->data();
      const std::size_t block = bd.size();
      const int r = rank;
      std::vector<int> amin(static_cast<std::size_t>(r));
      std::vector<int> bmin(static_cast<std::size_t>(r));
      for (int j = 0; j < r; ++j) {
        amin[static_cast<std::size_t>(j)] = lowest_degree(a + j * block, bd.degree);
        bmin[static_cast<std::size_t>(j)] = lowest_degree(b + j * block, bd.degree);
      }
      // Polynomial product in z, then reduction of z^m for m >= r.
      const int top = 2 * r - 1;
      std::vector<Rational> tmp(static_cast<std::size_t>(top) * block);
      std::vector<bool> used(static_cast<std::size_t>(top), false);
      for (int j = 0; j < r; ++j) {
        const int aj = amin[static_cast<std::size_t>(j)];
        if (aj < 0) continue;
        for (int k = 0; k < r; ++k) {
          const int bk = bmin[static_cast<std::size_t>(k)];
          if (bk < 0 || aj + bk + j + k > max_degree) continue;
          bd.multiply_into(a + j * block, b + k * block, tmp.data() + (j + k) * block,
                           max_degree - j - k);
          used[static_cast<std::size_t>(j + k)] = true;
        }
      }
      for (int m = top - 1; m >= r; --m) {
        if (!used[static_cast<std::size_t>(m)]) continue;
        const Rational* tm = tmp.data() + m * block;
        if (lowest_degree(tm, bd.degree) < 0) continue;
        // z^m = -sum_{i=1}^{r} c_i(E) z^{m-i}
        for (int i = 1; i <= r; ++i) {
          if (i > bd.dimension) break;
          bd.multiply_into(tm, neg_chern[static_cast<std::size_t>(i - 1)].data(),
                           tmp.data() + (m - i) * block, max_degree - (m - i));
          used[static_cast<std::size_t>(m - i)] = true;
        }
      }
      for (std::size_t idx = 0; idx < static_cast<std::size_t>(r) * block; ++idx) {
        if (sgn(tmp[idx]) != 0) out[idx] += tmp[idx];
      }
      return;
    }
  }
}

Rational SpaceData::integrate(const Rational* a) const {
  switch (kind) {
    case SpaceKind::Point:
      return a[0];
    case SpaceKind::Grassmannian:
      return a[top_index];
    case SpaceKind::ProjBundle:
      return base->data().integrate(a + (rank - 1) * base->data().size());
  }
  return 0;
}

}  // namespace detail

namespace {

void require_same_space(const Space& a, const Space& b) {
  if (!(a == b)) throw Error(ErrorCode::SpaceMismatch, "classes live on different spaces");
}

void require_kind(const Space& s, SpaceKind kind, const char* what) {
  if (s.kind() != kind) throw Error(ErrorCode::InvalidArgument, std::string(what));
}

}  // namespace

// ---------------------------------------------------------------- Space

Space Space::point() {
  static const Space pt = [] {
    auto d = std::make_shared<detail::SpaceData>();
    d->kind = SpaceKind::Point;
    d->degree = {0};
    return Space(std::move(d));
  }();
  return pt;
}

Space Space::grassmannian(int k, int n) {
  if (k <= 0 || k >= n) {
    throw Error(ErrorCode::InvalidArgument,
                "Gr(k, n) needs 0 < k < n, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  auto d = std::make_shared<detail::SpaceData>();
  d->kind = SpaceKind::Grassmannian;
  d->k = k;
  d->n = n;
  d->dimension = k * (n - k);
  d->partitions = partitions_in_box(k, n - k);
  const std::size_t len = d->partitions.size();
  for (std::size_t i = 0; i < len; ++i) {
    d->index_of.emplace(d->partitions[i], i);
    d->degree.push_back(d->partitions[i].size());
  }
  d->top_index = len - 1;
  d->table.resize(len * len);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t j = 0; j < len; ++j) {
      if (d->degree[i] + d->degree[j] > d->dimension) continue;
      for (const auto& [nu, c] : lr_product(d->partitions[i], d->partitions[j], k, n - k)) {
        d->table[i * len + j].push_back(
            {static_cast<std::uint32_t>(d->index_of.at(nu)), c});
      }
    }
  }
  return Space(std::move(d));
}

Space Space::proj_bundle(const BundleClass& bundle, std::string generator) {
  const long r = bundle.rank();
  if (r <= 0) {
    throw Error(ErrorCode::InvalidArgument,
                "projective bundle needs positive rank, got " + std::to_string(r));
  }
  const Space& base = bundle.space();
  const int need = std::min<int>(static_cast<int>(r), base.dimension());
  if (bundle.precision() < need) {
    throw Error(ErrorCode::InvalidArgument, "bundle Chern character known to too low a degree");
  }
  auto d = std::make_shared<detail::SpaceData>();
  d->kind = SpaceKind::ProjBundle;
  d->base = base;
  d->bundle = std::make_unique<BundleClass>(bundle);
  d->rank = static_cast<int>(r);
  d->generator = std::move(generator);
  d->dimension = base.dimension() + d->rank - 1;
  const auto& bd = base.data();
  for (int j = 0; j < d->rank; ++j) {
    for (std::size_t b = 0; b < bd.size(); ++b) d->degree.push_back(bd.degree[b] + j);
  }
  d->top_index = static_cast<std::size_t>(d->rank - 1) * bd.size() + bd.top_index;
  const auto c = bundle.chern_classes(need);
  for (int i = 1; i <= d->rank; ++i) {
    if (i < static_cast<int>(c.size())) {
      d->neg_chern.push_back((-c[static_cast<std::size_t>(i)]).coefficients());
    } else {
      d->neg_chern.emplace_back(bd.size());
    }
  }
  return Space(std::move(d));
}

SpaceKind Space::kind() const { return data_->kind; }
int Space::dimension() const { return data_->dimension; }
std::size_t Space::basis_size() const { return data_->size(); }
int Space::basis_degree(std::size_t index) const { return data_->degree.at(index); }
std::size_t Space::point_index() const { return data_->top_index; }

std::string Space::basis_label(std::size_t index) const {
  const auto& d = *data_;
  switch (d.kind) {
    case SpaceKind::Point:
      return "1";
    case SpaceKind::Grassmannian: {
      const auto& p = d.partitions.at(index);
      return p.length() == 0 ? "1" : "s" + p.to_string();
    }
    case SpaceKind::ProjBundle: {
      const std::size_t block = d.base->basis_size();
      const std::size_t j = index / block;
      const std::string rest = d.base->basis_label(index % block);
      if (j == 0) return rest;
      std::string z = d.generator + (j > 1 ? "^" + std::to_string(j) : "");
      return rest == "1" ? z : z + "*" + rest;
    }
  }
  return "?";
}

int Space::grass_k() const {
  require_kind(*this, SpaceKind::Grassmannian, "not a Grassmannian");
  return data_->k;
}

int Space::grass_n() const {
  require_kind(*this, SpaceKind::Grassmannian, "not a Grassmannian");
  return data_->n;
}

const std::vector<Partition>& Space::schubert_basis() const {
  require_kind(*this, SpaceKind::Grassmannian, "not a Grassmannian");
  return data_->partitions;
}

std::size_t Space::schubert_index(const Partition& p) const {
  require_kind(*this, SpaceKind::Grassmannian, "not a Grassmannian");
  auto it = data_->index_of.find(p);
  if (it == data_->index_of.end()) {
    throw Error(ErrorCode::InvalidArgument, "partition " + p.to_string() + " outside the box");
  }
  return it->second;
}

const Space& Space::base() const {
  require_kind(*this, SpaceKind::ProjBundle, "not a projective bundle");
  return *data_->base;
}

const BundleClass& Space::bundle() const {
  require_kind(*this, SpaceKind::ProjBundle, "not a projective bundle");
  return *data_->bundle;
}

int Space::fiber_rank() const {
  require_kind(*this, SpaceKind::ProjBundle, "not a projective bundle");
  return data_->rank;
}

const std::string& Space::generator() const {
  require_kind(*this, SpaceKind::ProjBundle, "not a projective bundle");
  return data_->generator;
}

bool Space::lies_over(const Space& other) const {
  if (*this == other) return true;
  return kind() == SpaceKind::ProjBundle && base().lies_over(other);
}

// ---------------------------------------------------------------- ChowClass

ChowClass::ChowClass(Space space) : space_(std::move(space)), coeffs_(space_.basis_size()) {}

ChowClass::ChowClass(Space space, std::vector<Rational> coefficients)
    : space_(std::move(space)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != space_.basis_size()) {
    throw Error(ErrorCode::InvalidArgument, "coefficient vector does not match the basis");
  }
}

ChowClass ChowClass::constant(const Space& space, const Rational& c) {
  return basis_element(space, 0, c);
}

ChowClass ChowClass::basis_element(const Space& space, std::size_t index, const Rational& c) {
  ChowClass r(space);
  r.coeffs_.at(index) = c;
  return r;
}

bool ChowClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return sgn(c) == 0; });
}

int ChowClass::min_degree() const {
  int lo = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int d = space_.basis_degree(i);
    if (sgn(coeffs_[i]) != 0 && (lo < 0 || d < lo)) lo = d;
  }
  return lo;
}

int ChowClass::max_degree() const {
  int hi = -1;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) != 0) hi = std::max(hi, space_.basis_degree(i));
  }
  return hi;
}

ChowClass ChowClass::degree_part(int degree) const {
  ChowClass r(space_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (space_.basis_degree(i) == degree) r.coeffs_[i] = coeffs_[i];
  }
  return r;
}

ChowClass ChowClass::truncate(int max_degree) const {
  ChowClass r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (space_.basis_degree(i) > max_degree) r.coeffs_[i] = 0;
  }
  return r;
}

ChowClass ChowClass::multiply(const ChowClass& other, int max_degree) const {
  require_same_space(space_, other.space_);
  ChowClass r(space_);
  space_.data().multiply_into(coeffs_.data(), other.coeffs_.data(), r.coeffs_.data(),
                              std::min(max_degree, space_.dimension()));
  return r;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b) {
  return a.multiply(b, a.space().dimension());
}

ChowClass ChowClass::pow(int exponent, int max_degree) const {
  if (exponent < 0) throw Error(ErrorCode::InvalidArgument, "negative power of a Chow class");
  ChowClass r = constant(space_, 1);
  for (int i = 0; i < exponent; ++i) r = r.multiply(*this, max_degree);
  return r;
}

ChowClass ChowClass::exp(int max_degree) const {
  if (sgn(coeffs_[0]) != 0) {
    throw Error(ErrorCode::InvalidArgument, "exp needs a class without degree-0 part");
  }
  max_degree = std::min(max_degree, space_.dimension());
  ChowClass sum = constant(space_, 1);
  ChowClass term = sum;
  for (int k = 1; k <= max_degree; ++k) {
    term = term.multiply(*this, max_degree);
    term *= Rational(1, k);
    if (term.is_zero()) break;
    sum += term;
  }
  return sum;
}

ChowClass ChowClass::pullback(const Space& target) const {
  if (target == space_) return *this;
  if (!target.lies_over(space_)) {
    throw Error(ErrorCode::SpaceMismatch, "pullback target does not lie over the class's space");
  }
  const ChowClass below = pullback(target.base());
  ChowClass r(target);
  std::copy(below.coeffs_.begin(), below.coeffs_.end(), r.coeffs_.begin());
  return r;
}

Rational ChowClass::integral() const { return space_.data().integrate(coeffs_.data()); }

ChowClass& ChowClass::operator+=(const ChowClass& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other) {
  require_same_space(space_, other.space_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ChowClass& ChowClass::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

ChowClass ChowClass::operator-() const {
  ChowClass r = *this;
  for (auto& x : r.coeffs_) x = -x;
  return r;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
  return a.space_ == b.space_ && a.coeffs_ == b.coeffs_;
}

std::string ChowClass::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << hk::to_string(coeffs_[i]) << "*" << space_.basis_label(i);
  }
  return first ? "0" : os.str();
}

ChowClass schubert(const Space& grassmannian, const Partition& lambda) {
  return ChowClass::basis_element(grassmannian, grassmannian.schubert_index(lambda));
}

ChowClass special_schubert(const Space& grassmannian, int i) {
  if (i == 0) return ChowClass::constant(grassmannian, 1);
  if (i < 0 || i > grassmannian.grass_n() - grassmannian.grass_k()) {
    return ChowClass(grassmannian);
  }
  return schubert(grassmannian, Partition{i});
}

ChowClass hyperplane(const Space& proj_bundle) {
  require_kind(proj_bundle, SpaceKind::ProjBundle, "hyperplane class needs a projective bundle");
  // P(L) = X for a line bundle L, and the relation z = -c_1(L) gives z itself.
  if (proj_bundle.fiber_rank() == 1) {
    return -proj_bundle.bundle().chern_class(1).pullback(proj_bundle);
  }
  return ChowClass::basis_element(proj_bundle, proj_bundle.base().basis_size());
}

ChowClass pushforward(const ChowClass& a) {
  const Space& s = a.space();
  require_kind(s, SpaceKind::ProjBundle, "pushforward needs a projective bundle");
  const std::size_t block = s.base().basis_size();
  const auto offset = static_cast<std::ptrdiff_t>((s.fiber_rank() - 1) * block);
  std::vector<Rational> c(a.coefficients().begin() + offset,
                          a.coefficients().begin() + offset + static_cast<std::ptrdiff_t>(block));
  return ChowClass(s.base(), std::move(c));
}

}  // namespace hk::chow
