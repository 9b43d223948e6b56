#pragma once

/**
 * @file qhahn.hpp
 * @brief Standard q-Hahn polynomials on the exponential lattice mu(s) = q^{-s},
 *        the q^delta -> 0 limit target of the q-Racah family.
 */

#include <memory>

#include "qrk/family.hpp"
#include "qrk/lattice.hpp"
#include "qrk/qseries.hpp"

namespace qrk {

class QHahnParams {
 public:
  QHahnParams(const Rational& v, const Rational& mu, const Rational& nu, int N);

  const Rational& q() const { return lat_.base().q; }
  const Rational& v() const { return lat_.base().v; }
  const Rational& mu() const { return mu_; }
  const Rational& nu() const { return nu_; }
  int N() const { return N_; }
  const Lattice& lattice() const { return lat_; }

  Rational x(long s) const { return lat_.xi(s); }  // mu(s) = q^{-s}
  /// Monic h_n via the defining 3phi2 with prefactor
  /// (nu q;q)_n (q^{-N};q)_n / (mu nu q^{n+1};q)_n.
  Rational eval(int n, long s) const;
  /// Squared norm dbar_n^2, closed form.
  Rational d2(int n) const;
  /// Probability point mass at s: the standard q-Hahn weight
  /// (nu q, q^{-N};q)_s / [(q, mu^{-1} q^{-N};q)_s (mu nu q)^s], normalized.
  Rational mass(long s) const;

 private:
  Rational mu_, nu_;
  int N_;
  Lattice lat_;
  std::vector<Rational> masses_;
};

std::shared_ptr<const Family<Rational>> make_qhahn_family(const QHahnParams& p);

}  // namespace qrk
