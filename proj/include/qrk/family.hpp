#pragma once

/**
 * @file family.hpp
 * @brief Abstract base-family contract consumed by the Krall layer.
 *
 * A family is a finite system of monic orthogonal polynomials on N+1
 * lattice nodes: evaluations, squared norms, probability point masses and
 * the two endpoint boundary values. The Krall machinery (two endpoint
 * masses) is written against this interface only, so the dual q-Hahn,
 * q-Hahn and classical Racah variants are parameter swaps.
 */

#include <cstddef>
#include <vector>

namespace qrk {

template <class K>
class Family {
 public:
  virtual ~Family() = default;

  virtual int N() const = 0;
  /// Lattice value at integer s (defined for s somewhat outside 0..N too;
  /// the representation-formula checks evaluate there).
  virtual K x(long s) const = 0;
  /// Monic R_n at node s.
  virtual K eval(int n, long s) const = 0;
  /// Squared norm d_n^2.
  virtual K d2(int n) const = 0;
  /// Point mass rho(s) * Delta x(s-1/2) of the orthogonality measure, s = 0..N.
  virtual K mass(long s) const = 0;
  virtual K boundary_0(int n) const { return eval(n, 0); }
  virtual K boundary_N(int n) const { return eval(n, N()); }
};

/// Eagerly tabulated family built from evaluation callables; immutable
/// after construction, hence freely shareable across threads.
template <class K>
class TabulatedFamily final : public Family<K> {
 public:
  static constexpr long kMargin = 4;  // extra nodes either side for difference quotients

  template <class XF, class EF, class D2F, class MF>
  TabulatedFamily(int N, XF&& xf, EF&& ef, D2F&& d2f, MF&& mf) : N_(N), s_lo_(-kMargin) {
    long s_hi = N + kMargin;
    for (long s = s_lo_; s <= s_hi; ++s) xs_.push_back(xf(s));
    for (int n = 0; n <= N; ++n) {
      d2_.push_back(d2f(n));
      std::vector<K> row;
      for (long s = s_lo_; s <= s_hi; ++s) row.push_back(ef(n, s));
      evals_.push_back(std::move(row));
    }
    for (long s = 0; s <= N; ++s) masses_.push_back(mf(s));
  }

  int N() const override { return N_; }
  K x(long s) const override { return xs_.at(static_cast<size_t>(s - s_lo_)); }
  K eval(int n, long s) const override {
    return evals_.at(n).at(static_cast<size_t>(s - s_lo_));
  }
  K d2(int n) const override { return d2_.at(n); }
  K mass(long s) const override { return masses_.at(static_cast<size_t>(s)); }

 private:
  int N_;
  long s_lo_;
  std::vector<K> xs_;
  std::vector<std::vector<K>> evals_;
  std::vector<K> d2_;
  std::vector<K> masses_;
};

}  // namespace qrk
