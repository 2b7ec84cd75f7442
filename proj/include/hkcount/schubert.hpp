#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hk::chow {

// Weakly decreasing sequence of positive parts (trailing zeros are dropped).
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;  // number of boxes
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  bool fits_in_box(int rows, int cols) const;
  bool contains(const Partition& other) const;
  // Complement inside a rows x cols box.
  Partition complement(int rows, int cols) const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions in a rows x cols box, ordered by size then lexicographically.
std::vector<Partition> partitions_in_box(int rows, int cols);

// Littlewood-Richardson coefficient c^nu_{lambda mu}.
std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// sigma_lambda * sigma_mu in a rows x cols box: the terms c^nu sigma_nu with nu
// inside the box. Results are memoized and safe to request concurrently.
std::vector<std::pair<Partition, std::int64_t>> lr_product(const Partition& lambda,
                                                            const Partition& mu, int rows,
                                                            int cols);

// Persistence of the memo table. load returns false when the file is absent;
// malformed files raise hk::Error(InvalidArgument).
bool lr_cache_load(const std::string& path);
void lr_cache_save(const std::string& path);
std::size_t lr_cache_size();
void lr_cache_clear();

}  // namespace hk::chow
