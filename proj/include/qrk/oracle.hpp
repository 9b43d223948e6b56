#pragma once

/**
 * @file oracle.hpp
 * @brief Ground truth: Gram-Schmidt construction of monic orthogonal
 *        polynomials for a discrete measure with optional point masses.
 *
 * Runs in exact rationals over the monomial basis (conditioning is
 * irrelevant in exact arithmetic); the double instantiation exists solely
 * for the classical q -> 1 Racah measure.
 */

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qrk/qseries.hpp"

namespace qrk {

namespace detail {
template <class K>
K kpow_oracle(const K& x, int e) {
  K acc(1);
  for (int i = 0; i < e; ++i) acc *= x;
  return acc;
}
}  // namespace detail

template <class K>
struct DiscreteMeasure {
  std::vector<K> nodes;    // x(s), pairwise distinct
  std::vector<K> weights;  // rho(s) * Delta x(s-1/2)
  std::vector<std::pair<int, K>> masses;  // (node index, mass)

  K effective_weight(size_t i) const {
    K w = weights[i];
    for (const auto& [idx, m] : masses)
      if (static_cast<size_t>(idx) == i) w += m;
    return w;
  }
};

template <class K>
K polyval(const std::vector<K>& coeffs, const K& x) {
  K acc(0);
  for (size_t i = coeffs.size(); i-- > 0;) acc = acc * x + coeffs[i];
  return acc;
}

/// <f, g> = sum_s f(s) g(s) weight(s) + sum of point-mass contributions.
/// f and g are given by their values at the nodes.
template <class K>
K inner_product(const DiscreteMeasure<K>& mu, const std::vector<K>& f, const std::vector<K>& g) {
  if (f.size() != mu.nodes.size() || g.size() != mu.nodes.size())
    throw std::invalid_argument("inner_product: evals must cover all nodes");
  K acc(0);
  for (size_t i = 0; i < mu.nodes.size(); ++i) acc += f[i] * g[i] * mu.effective_weight(i);
  return acc;
}

template <class K>
struct OracleTable {
  std::vector<std::vector<K>> coeffs;  // monomial coefficients of p_0..p_nmax
  std::vector<K> norms;                // <p_n, p_n>
  std::vector<K> betas;                // <x p_n, p_n> / <p_n, p_n>
  std::vector<K> gammas;               // <p_n,p_n> / <p_{n-1},p_{n-1}>; gamma_0 = 0

  K eval(int n, const K& x) const { return polyval(coeffs[n], x); }
};

/// Monic p_0..p_nmax orthogonal for mu; errors when a norm vanishes before
/// nmax (quasi-definiteness failure, the kappa = 0 situation).
template <class K>
OracleTable<K> gram_schmidt_monic(const DiscreteMeasure<K>& mu, int nmax) {
  const size_t npts = mu.nodes.size();
  if (nmax + 1 > static_cast<int>(npts))
    throw std::invalid_argument("gram_schmidt_monic: nmax exceeds node count - 1");
  std::vector<K> w(npts);
  for (size_t i = 0; i < npts; ++i) w[i] = mu.effective_weight(i);
  auto ip_vals = [&](const std::vector<K>& fv, const std::vector<K>& gv) {
    K acc(0);
    for (size_t i = 0; i < npts; ++i) acc += fv[i] * gv[i] * w[i];
    return acc;
  };
  OracleTable<K> out;
  std::vector<std::vector<K>> vals;  // node values of each p_j
  for (int n = 0; n <= nmax; ++n) {
    std::vector<K> c(n + 1, K(0));
    c[n] = K(1);  // x^n
    std::vector<K> cv(npts);
    for (size_t i = 0; i < npts; ++i) cv[i] = detail::kpow_oracle(mu.nodes[i], n);
    for (int j = 0; j < n; ++j) {
      K coef = ip_vals(cv, vals[j]) / out.norms[j];
      for (size_t k = 0; k < out.coeffs[j].size(); ++k) c[k] -= coef * out.coeffs[j][k];
      for (size_t i = 0; i < npts; ++i) cv[i] -= coef * vals[j][i];
    }
    K nrm = ip_vals(cv, cv);
    if (detail::scalar_is_zero(nrm))
      throw std::domain_error("gram_schmidt_monic: vanishing norm at degree " + std::to_string(n) +
                              " (quasi-definiteness failure)");
    std::vector<K> xv(npts);
    for (size_t i = 0; i < npts; ++i) xv[i] = mu.nodes[i] * cv[i];
    out.coeffs.push_back(std::move(c));
    out.norms.push_back(nrm);
    out.betas.push_back(ip_vals(xv, cv) / nrm);
    out.gammas.push_back(n > 0 ? nrm / out.norms[n - 1] : K(0));
    vals.push_back(std::move(cv));
  }
  return out;
}

}  // namespace qrk
