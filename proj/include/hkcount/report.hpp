#pragma once

#include <string>
#include <vector>

namespace hk::report {

// A rectangular table of exact values rendered as strings. The last column
// holds the value; the others index it.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  // Set when a verified invariant failed while producing the rows.
  bool failed = false;
};

enum class Method { Jacobi, Gamma0, Both };
enum class FanoQuantity { Genus, Degree };
enum class SelftestLevel { Quick, Full };

Table k3_table(int hmax);
Table k3two_table(int smax, Method method);
// Coefficients of a named one-variable series for exponents valuation..order-1.
Table series_table(const std::string& name, int order);
// Nonzero coefficients of the two-variable K3[2] series below q^qorder.
Table jacobi_table(int qorder);
// Headline value last. Both discriminant routes are always evaluated and must
// agree as classes; `via_euler` picks the one that produces the number.
Table fano_table(FanoQuantity which, bool via_euler);
Table selftest_table(SelftestLevel level);

}  // namespace hk::report
