#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hkcount/chow.hpp"

namespace hk::chow::detail {

struct SchubertTerm {
  std::uint32_t index;
  std::int64_t coefficient;
};

struct SpaceData {
  SpaceKind kind = SpaceKind::Point;
  int dimension = 0;
  std::vector<int> degree;
  std::size_t top_index = 0;

  // Grassmannian.
  int k = 0;
  int n = 0;
  std::vector<Partition> partitions;
  std::map<Partition, std::size_t> index_of;
  // table[i * size + j] = sigma_i * sigma_j in the Schubert basis.
  std::vector<std::vector<SchubertTerm>> table;

  // Projective bundle.
  std::optional<Space> base;
  std::unique_ptr<BundleClass> bundle;
  int rank = 0;
  std::string generator;
  // -c_i(E) for i = 1..rank, as coefficient vectors on the base.
  std::vector<std::vector<Rational>> neg_chern;

  std::size_t size() const { return degree.size(); }

  // out += a * b, dropping every term of degree > max_degree.
  void multiply_into(const Rational* a, const Rational* b, Rational* out, int max_degree) const;

  Rational integrate(const Rational* a) const;
};

}  // namespace hk::chow::detail
