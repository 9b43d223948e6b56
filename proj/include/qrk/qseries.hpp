#pragma once

/**
 * @file qseries.hpp
 * @brief q-Pochhammer symbols and terminating basic hypergeometric sums.
 *
 * Templated on the scalar so the same code runs exactly over Rational and
 * approximately over double (used only by the floating limit harness).
 */

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "qrk/rational.hpp"

namespace qrk {

/// (a;q)_k = prod_{i=0}^{k-1} (1 - a q^i). (a;q)_0 = 1.
template <class K>
K qpochhammer(const K& a, const K& q, int k) {
  K r(1);
  K aq = a;
  for (int i = 0; i < k; ++i) {
    r *= (K(1) - aq);
    aq *= q;
  }
  return r;
}

/// Product of several Pochhammers at the same (q, k).
template <class K>
K qpochhammer(std::initializer_list<K> as, const K& q, int k) {
  K r(1);
  for (const K& a : as) r *= qpochhammer(a, q, k);
  return r;
}

/// Floating (a;q)_inf, |q| < 1: factors multiplied until |a q^i| < tol.
inline double qpochhammer_inf_approx(double a, double q, double tol) {
  if (!(std::abs(q) < 1.0)) throw std::domain_error("qpochhammer_inf_approx: needs |q| < 1");
  if (!(tol > 0.0)) throw std::domain_error("qpochhammer_inf_approx: needs tol > 0");
  double r = 1.0;
  double aq = a;
  for (int i = 0; std::abs(aq) >= tol && i < 100000; ++i) {
    r *= (1.0 - aq);
    aq *= q;
  }
  return r;
}

/// Ordinary Pochhammer (a)_k, for the classical (q -> 1) side.
inline double pochhammer(double a, int k) {
  double r = 1.0;
  for (int i = 0; i < k; ++i) r *= (a + i);
  return r;
}

/**
 * A terminating basic hypergeometric sum
 *   sum_{k=0}^{terms-1} [prod (upper;q)_k / prod (lower;q)_k] z^k / (q;q)_k
 * (the balanced rφ_{r-1} convention used throughout: no extra (-1)^k
 * q-power factor).
 *
 * Invariant: no lower parameter may equal q^{-j} for 0 <= j < terms-1,
 * which would zero a denominator inside the active range.
 */
template <class K>
struct HyperSpec {
  std::vector<K> upper;
  std::vector<K> lower;
  K base;      // q
  K argument;  // z
  int terms = 0;
};

namespace detail {
inline bool scalar_is_zero(const Rational& x) { return x.is_zero(); }
inline bool scalar_is_zero(double x) { return x == 0.0; }
}  // namespace detail

/// Left-to-right summation with incremental term ratios.
template <class K>
K basic_hyper_terminating(const HyperSpec<K>& spec) {
  if (spec.terms < 0) throw std::invalid_argument("basic_hyper_terminating: negative terms");
  K total(0);
  K term(1);
  K qk(1);  // q^k
  for (int k = 0; k < spec.terms; ++k) {
    total += term;
    if (k == spec.terms - 1) break;
    K num(1);
    for (const K& a : spec.upper) num *= (K(1) - a * qk);
    K den(1);
    for (const K& b : spec.lower) {
      K f = K(1) - b * qk;
      if (detail::scalar_is_zero(f))
        throw std::domain_error("basic_hyper_terminating: lower parameter hits q^{-k} inside the sum");
      den *= f;
    }
    qk *= spec.base;
    den *= (K(1) - qk);  // the (q;q)_k factor advances with k+1
    term = term * num / den * spec.argument;
  }
  return total;
}

}  // namespace qrk
