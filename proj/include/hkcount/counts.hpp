#pragma once

#include <optional>
#include <vector>

#include "hkcount/qseries.hpp"

namespace hk::counts {

// Generating series over q^{h-1} for a K3 surface.
struct K3Series {
  RationalSeries n;       // sum n_{K3,h} q^{h-1}
  RationalSeries big_n;   // 2 q d/dq (1/Delta)
  RationalSeries c;       // -2 / Delta
};

// Builds all three series to O(q^order) and checks n = (N - C)/2 termwise.
K3Series k3_series(int order);

// sum n_{K3,h} q^{h-1} = 1/Delta + q d/dq (1/Delta).
RationalSeries n_k3_series(int order);

// sum_{n,k} n_{K3[2],(4n-k^2)/2} q^n y^k to O(q^order).
JacobiSeries n_k3two_jacobi(int order);

// The bracket multiplying P^2/Delta in the finite-support form of the
// two-variable formula (before the normalization to counts). Exposed for tests.
JacobiSeries jacobi_bracket(int order);

// sum_s n_{K3[2],s} q^s to O(q^order), from the Gamma_0(4) presentation.
RationalSeries n_k3two_gamma0(int order);

struct Representative {
  int n;
  int k;
};

// (n, k) with 4n - k^2 = s, k >= 0 and n minimal; none for s = 1, 2 mod 4.
std::optional<Representative> minimal_representative(int s);

// All (n, k) with k >= 0, 4n - k^2 = s and n < order.
std::vector<Representative> representatives(int s, int order);

// n_{K3[2],s} read off the two-variable series. Every representative below
// the series order is cross-checked; disagreement raises JacobiIndexViolation.
Rational n_k3two(const JacobiSeries& series, int s);
Rational n_k3two(int s, int order);

struct K3Row {
  int h;
  int bb_square;  // 2h - 2
  Rational count;
};

enum class Method { Jacobi, Gamma0, Both };

struct K3TwoRow {
  int s;
  Rational bb_square;  // s / 2
  Representative representative;
  Rational count;
};

// Default truncation orders used by the tables.
int k3_default_order(int hmax);
int k3two_default_qorder(int smax);

std::vector<K3Row> table1(int hmax);

// Rows for 0 <= s <= smax with s = 0, 3 mod 4. With Method::Both the two
// formulas are evaluated independently and must agree for every s <= smax,
// including the vanishing ones.
std::vector<K3TwoRow> table2(int smax, Method method);

}  // namespace hk::counts
