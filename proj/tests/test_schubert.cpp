#include <cstdio>
#include <filesystem>
#include <map>
#include <thread>

#include "doctest.h"
#include "hkcount/error.hpp"
#include "hkcount/rational.hpp"
#include "hkcount/schubert.hpp"

using namespace hk::chow;

namespace {

Partition conjugate(const Partition& p) {
  std::vector<int> out;
  for (int c = 0; c < p.part(0); ++c) {
    int len = 0;
    while (p.part(len) > c) ++len;
    out.push_back(len);
  }
  return Partition(out);
}

// Pieri: add i boxes to lambda, no two in the same column.
std::map<Partition, std::int64_t> pieri(const Partition& lambda, int i, int rows, int cols) {
  std::map<Partition, std::int64_t> out;
  std::vector<int> nu(static_cast<std::size_t>(rows));
  auto rec = [&](auto&& self, int r, int left) -> void {
    if (r == rows) {
      if (left == 0) out[Partition(nu)] += 1;
      return;
    }
    const int lo = lambda.part(r);
    // Horizontal strip: nu_r <= lambda_{r-1}.
    const int hi = std::min(cols, r == 0 ? cols : lambda.part(r - 1));
    for (int v = lo; v <= hi && v - lo <= left; ++v) {
      nu[static_cast<std::size_t>(r)] = v;
      self(self, r + 1, left - (v - lo));
    }
  };
  rec(rec, 0, i);
  return out;
}

std::map<Partition, std::int64_t> as_map(const std::vector<std::pair<Partition, std::int64_t>>& v) {
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("partitions") {
  const Partition p{3, 1, 0};
  CHECK(p.length() == 2);
  CHECK(p.size() == 4);
  CHECK(p.to_string() == "[3,1]");
  CHECK(p.fits_in_box(2, 3));
  CHECK_FALSE(p.fits_in_box(1, 4));
  CHECK(p.contains(Partition{2, 1}));
  CHECK(p.complement(2, 3) == Partition{2});
  CHECK_THROWS_AS(Partition({1, 2}), hk::Error);
  CHECK(Partition{}.to_string() == "[]");
  CHECK(partitions_in_box(4, 2).size() == 15);
  CHECK(partitions_in_box(2, 3).size() == 10);
  const auto box = partitions_in_box(2, 2);
  CHECK(box.front() == Partition{});
  CHECK(box.back() == Partition{2, 2});
}

TEST_CASE("known LR coefficients") {
  CHECK(lr_coefficient({2, 1}, {2, 1}, {3, 2, 1}) == 2);
  CHECK(lr_coefficient({1}, {1}, {2}) == 1);
  CHECK(lr_coefficient({1}, {1}, {1, 1}) == 1);
  CHECK(lr_coefficient({2}, {2}, {2, 1, 1}) == 0);
  CHECK(lr_coefficient({2, 1}, {1}, {2, 2}) == 1);
  CHECK(lr_coefficient({3, 2, 1}, {2, 1}, {4, 3, 2}) == 2);
  CHECK(lr_coefficient({1}, {1}, {3}) == 0);
}

TEST_CASE("Pieri oracle") {
  for (auto [rows, cols] : {std::pair{2, 2}, std::pair{3, 4}, std::pair{4, 2}, std::pair{3, 3}}) {
    for (const auto& lambda : partitions_in_box(rows, cols)) {
      for (int i = 1; i <= cols; ++i) {
        CHECK(as_map(lr_product(lambda, Partition{i}, rows, cols)) == pieri(lambda, i, rows, cols));
      }
    }
  }
}

TEST_CASE("LR symmetries") {
  const auto all = partitions_in_box(3, 3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      if (a.size() + b.size() > 9) continue;
      const auto ab = as_map(lr_product(a, b, 3, 3));
      CHECK(ab == as_map(lr_product(b, a, 3, 3)));
      for (const auto& [nu, c] : ab) {
        CHECK(lr_coefficient(conjugate(a), conjugate(b), conjugate(nu)) == c);
      }
    }
  }
}

TEST_CASE("memo is consistent under concurrent use") {
  lr_cache_clear();
  const auto all = partitions_in_box(3, 4);
  std::map<std::pair<Partition, Partition>, std::map<Partition, std::int64_t>> serial;
  for (const auto& a : all) {
    for (const auto& b : all) serial[{a, b}] = as_map(lr_product(a, b, 3, 4));
  }
  lr_cache_clear();
  std::vector<std::thread> threads;
  std::vector<int> mismatches(4, 0);
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&, t] {
      for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& a = all[(i + static_cast<std::size_t>(t) * 7) % all.size()];
        for (const auto& b : all) {
          if (as_map(lr_product(a, b, 3, 4)) != serial[{a, b}]) ++mismatches[static_cast<std::size_t>(t)];
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (int m : mismatches) CHECK(m == 0);
}

TEST_CASE("cache file round trip") {
  const auto path = (std::filesystem::temp_directory_path() / "hk_lr_cache_test.txt").string();
  std::remove(path.c_str());
  lr_cache_clear();
  CHECK_FALSE(lr_cache_load(path));
  lr_product({2, 1}, {2, 1}, 3, 3);
  lr_product({1}, {1}, 2, 2);
  const std::size_t n = lr_cache_size();
  CHECK(n >= 2);
  lr_cache_save(path);
  lr_cache_clear();
  CHECK(lr_cache_size() == 0);
  CHECK(lr_cache_load(path));
  CHECK(lr_cache_size() == n);
  CHECK(as_map(lr_product({2, 1}, {2, 1}, 3, 3)).at(Partition{3, 2, 1}) == 2);
  {
    std::FILE* f = std::fopen(path.c_str(), "w");
    std::fputs("garbage\n", f);
    std::fclose(f);
  }
  CHECK_THROWS_AS(lr_cache_load(path), hk::Error);
  std::remove(path.c_str());
}
