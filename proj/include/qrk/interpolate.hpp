#pragma once

/**
 * @file interpolate.hpp
 * @brief Divided-difference extraction of leading coefficients and exact
 *        polynomial degree from point samples.
 */

#include <stdexcept>
#include <utility>
#include <vector>

#include "qrk/rational.hpp"

namespace qrk {

namespace detail {
inline bool scalar_is_zero_interp(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero_interp(double x) { return x == 0.0; }
}  // namespace detail

/**
 * Leading coefficient of the unique degree-`degree` polynomial through the
 * first degree+1 samples (Newton divided differences). Abscissae must be
 * pairwise distinct.
 */
template <class K>
K leading_coefficient(const std::vector<std::pair<K, K>>& samples, int degree) {
  if (degree < 0) throw std::invalid_argument("leading_coefficient: negative degree");
  if (static_cast<int>(samples.size()) < degree + 1)
    throw std::invalid_argument("leading_coefficient: need at least degree+1 samples");
  std::vector<K> xs, ys;
  xs.reserve(degree + 1);
  ys.reserve(degree + 1);
  for (int i = 0; i <= degree; ++i) {
    xs.push_back(samples[i].first);
    ys.push_back(samples[i].second);
  }
  for (int j = 1; j <= degree; ++j) {
    for (int i = degree; i >= j; --i) {
      K dx = xs[i] - xs[i - j];
      if (detail::scalar_is_zero_interp(dx))
        throw std::domain_error("leading_coefficient: duplicated abscissae");
      ys[i] = (ys[i] - ys[i - 1]) / dx;
    }
  }
  return ys[degree];
}

/// Exact degree of the interpolating polynomial through all samples
/// (largest j with a nonzero j-th divided difference; 0 for constants).
template <class K>
int interpolation_degree(const std::vector<std::pair<K, K>>& samples) {
  int n = static_cast<int>(samples.size()) - 1;
  std::vector<K> xs, tab;
  for (auto& [x, y] : samples) {
    xs.push_back(x);
    tab.push_back(y);
  }
  int deg = 0;
  for (int j = 1; j <= n; ++j) {
    std::vector<K> next;
    next.reserve(n - j + 1);
    for (int i = 0; i + j <= n; ++i)
      next.push_back((tab[i + 1] - tab[i]) / (xs[i + j] - xs[i]));
    tab = std::move(next);
    for (const K& t : tab)
      if (!detail::scalar_is_zero_interp(t)) {
        deg = j;
        break;
      }
  }
  return deg;
}

}  // namespace qrk
