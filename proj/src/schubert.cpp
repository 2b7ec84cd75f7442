#include "hkcount/schubert.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <tuple>

#include "hkcount/error.hpp"

namespace hk::chow {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw Error(ErrorCode::InvalidArgument, "partition parts must be weakly decreasing and >= 0");
    }
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits_in_box(int rows, int cols) const {
  return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other.part(i) > part(i)) return false;
  }
  return true;
}

Partition Partition::complement(int rows, int cols) const {
  std::vector<int> out(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)] = cols - part(rows - 1 - i);
  return Partition(std::move(out));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << "]";
  return os.str();
}

namespace {

void box_partitions(int rows, int cols, std::vector<int>& cur, std::vector<Partition>& out) {
  out.emplace_back(cur);
  if (static_cast<int>(cur.size()) == rows) return;
  const int cap = cur.empty() ? cols : cur.back();
  for (int p = 1; p <= cap; ++p) {
    cur.push_back(p);
    box_partitions(rows, cols, cur, out);
    cur.pop_back();
  }
}

// Counts LR tableaux of shape nu/lambda and content mu: semistandard fillings
// whose reverse row reading word (right to left, top to bottom) is a lattice
// word. Cells are filled in reading order.
class LrCounter {
 public:
  LrCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
      : lambda_(lambda), mu_(mu), nu_(nu) {
    rows_ = nu.length();
    cols_ = nu.part(0);
    grid_.assign(static_cast<std::size_t>(rows_ * std::max(cols_, 1)), 0);
    used_.assign(static_cast<std::size_t>(mu.length() + 1), 0);
    for (int r = 0; r < rows_; ++r) {
      for (int c = nu.part(r) - 1; c >= lambda.part(r); --c) cells_.emplace_back(r, c);
    }
  }

  std::int64_t count() { return fill(0); }

 private:
  int& at(int r, int c) { return grid_[static_cast<std::size_t>(r * cols_ + c)]; }

  std::int64_t fill(std::size_t idx) {
    if (idx == cells_.size()) return 1;
    const auto [r, c] = cells_[idx];
    // Weakly increasing along rows: bounded by the right neighbour.
    int hi = mu_.length();
    if (c + 1 < nu_.part(r)) hi = std::min(hi, at(r, c + 1));
    // Strictly increasing down columns.
    int lo = 1;
    if (r > 0 && c >= lambda_.part(r - 1)) lo = at(r - 1, c) + 1;
    // Entries in row r never exceed r + 1 in an LR tableau.
    hi = std::min(hi, r + 1);
    std::int64_t total = 0;
    for (int v = lo; v <= hi; ++v) {
      const auto vi = static_cast<std::size_t>(v);
      if (used_[vi] >= mu_.part(v - 1)) continue;
      if (v > 1 && used_[vi] + 1 > used_[vi - 1]) continue;
      ++used_[vi];
      at(r, c) = v;
      total += fill(idx + 1);
      --used_[vi];
    }
    at(r, c) = 0;
    return total;
  }

  const Partition& lambda_;
  const Partition& mu_;
  const Partition& nu_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<int> grid_;
  std::vector<int> used_;
  std::vector<std::pair<int, int>> cells_;
};

using LrKey = std::tuple<Partition, Partition, int, int>;
using LrValue = std::vector<std::pair<Partition, std::int64_t>>;

struct LrMemo {
  std::shared_mutex mutex;
  std::map<LrKey, LrValue> table;
};

LrMemo& memo() {
  static LrMemo m;
  return m;
}

LrValue compute_product(const Partition& lambda, const Partition& mu, int rows, int cols) {
  LrValue out;
  const int target = lambda.size() + mu.size();
  for (const auto& nu : partitions_in_box(rows, cols)) {
    if (nu.size() != target || !nu.contains(lambda) || !nu.contains(mu)) continue;
    const std::int64_t c = lr_coefficient(lambda, mu, nu);
    if (c != 0) out.emplace_back(nu, c);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> parts;
  int p;
  while (is >> p) parts.push_back(p);
  if (!is.eof()) throw Error(ErrorCode::InvalidArgument, "bad partition in LR cache: " + text);
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.parts().size(); ++i) os << (i ? " " : "") << p.parts()[i];
  return os.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::vector<Partition> partitions_in_box(int rows, int cols) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::InvalidArgument, "negative box size");
  std::vector<Partition> out;
  std::vector<int> cur;
  box_partitions(rows, cols, cur, out);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.parts() > b.parts();
  });
  return out;
}

std::int64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) || !nu.contains(mu)) return 0;
  return LrCounter(lambda, mu, nu).count();
}

std::vector<std::pair<Partition, std::int64_t>> lr_product(const Partition& lambda,
                                                            const Partition& mu, int rows,
                                                            int cols) {
  // The coefficient is symmetric in (lambda, mu); key on the ordered pair.
  LrKey key = lambda <= mu ? LrKey{lambda, mu, rows, cols} : LrKey{mu, lambda, rows, cols};
  auto& m = memo();
  {
    std::shared_lock lock(m.mutex);
    auto it = m.table.find(key);
    if (it != m.table.end()) return it->second;
  }
  LrValue value = compute_product(std::get<0>(key), std::get<1>(key), rows, cols);
  std::unique_lock lock(m.mutex);
  // A concurrent writer computes the identical value, so either copy is fine.
  return m.table.try_emplace(std::move(key), std::move(value)).first->second;
}

// One entry per line: "rows cols|lambda|mu|nu:c;nu:c" with parts separated by
// spaces.
bool lr_cache_load(const std::string& path) {
  std::ifstream in(path);
  if (!in) return false;
  std::map<LrKey, LrValue> loaded;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, '|');
    if (fields.size() != 4) throw Error(ErrorCode::InvalidArgument, "bad LR cache line: " + line);
    std::istringstream box(fields[0]);
    int rows = -1;
    int cols = -1;
    box >> rows >> cols;
    if (!box || rows < 0 || cols < 0) {
      throw Error(ErrorCode::InvalidArgument, "bad LR cache box: " + line);
    }
    LrValue value;
    if (!fields[3].empty()) {
      for (const auto& term : split(fields[3], ';')) {
        const auto colon = term.find(':');
        if (colon == std::string::npos) {
          throw Error(ErrorCode::InvalidArgument, "bad LR cache term: " + term);
        }
        value.emplace_back(parse_partition(term.substr(0, colon)),
                           std::stoll(term.substr(colon + 1)));
      }
    }
    loaded.insert_or_assign(
        LrKey{parse_partition(fields[1]), parse_partition(fields[2]), rows, cols},
        std::move(value));
  }
  auto& m = memo();
  std::unique_lock lock(m.mutex);
  for (auto& [k, v] : loaded) m.table.insert_or_assign(k, std::move(v));
  return true;
}

void lr_cache_save(const std::string& path) {
  auto& m = memo();
  std::shared_lock lock(m.mutex);
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write LR cache " + path);
  for (const auto& [key, value] : m.table) {
    const auto& [lambda, mu, rows, cols] = key;
    out << rows << ' ' << cols << '|' << format_partition(lambda) << '|' << format_partition(mu)
        << '|';
    for (std::size_t i = 0; i < value.size(); ++i) {
      out << (i ? ";" : "") << format_partition(value[i].first) << ':' << value[i].second;
    }
    out << '\n';
  }
}

std::size_t lr_cache_size() {
  auto& m = memo();
  std::shared_lock lock(m.mutex);
  return m.table.size();
}

void lr_cache_clear() {
  auto& m = memo();
  std::unique_lock lock(m.mutex);
  m.table.clear();
}

}  // namespace hk::chow
