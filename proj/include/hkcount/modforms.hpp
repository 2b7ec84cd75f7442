#pragma once

#include <optional>
#include <string_view>

#include "hkcount/qseries.hpp"

namespace hk::modforms {

// One-variable series addressable by name; the two-variable ones
// (prodpart_sq, theta_sq, wp_tilde) have their own constructors.
enum class SeriesName { Delta, InvDelta, E2, E4, Theta4, F, G2, G4 };

std::optional<SeriesName> parse_series_name(std::string_view name);
const char* series_name(SeriesName name);

RationalSeries named_series(SeriesName name, int order);

// Divisor power sum sigma_k(n).
Integer divisor_sigma(int k, long n);

// Bernoulli number B_k (B_1 = -1/2 convention).
Rational bernoulli(int k);

// Delta(q) = q prod (1 - q^m)^24, valuation 1.
RationalSeries delta(int order);

// 1/Delta, valuation -1.
RationalSeries inv_delta(int order);

// E_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^n for even k >= 2.
RationalSeries eisenstein(int k, int order);

// sum_{n in Z} q^{n^2}.
RationalSeries theta4(int order);

// sum over odd n of sigma_1(n) q^n.
RationalSeries f_series(int order);

// G_k = 1 - (2k / B_k) sum sigma_{k-1}(n) q^{4n}.
RationalSeries g_series(int k, int order);

// P^2 with P = prod_m (1 - q^m y)(1 - q^m / y)(1 - q^m)^{-2}.
JacobiSeries prodpart_sq(int order);

// Theta^2 = (y - 2 + 1/y) P^2.
JacobiSeries theta_sq(int order);

// (y - 2 + 1/y) * wp, where
// wp = 1/12 + y/(1-y)^2 + sum_d sum_{k|d} k (y^k - 2 + y^-k) q^d.
// Since (y - 2 + 1/y) y/(1-y)^2 = 1 every coefficient has finite support.
JacobiSeries wp_tilde(int order);

// y - 2 + 1/y.
YLaurent theta_prefactor();

}  // namespace hk::modforms
