#pragma once

/**
 * @file dual_qhahn.hpp
 * @brief Standard dual q-Hahn polynomials on x(s) = q^{-s} + gamma delta q^{s+1},
 *        the beta -> 0 limit of the q-Racah family at alpha q = q^{-N}.
 */

#include <memory>
#include <vector>

#include "qrk/family.hpp"
#include "qrk/lattice.hpp"
#include "qrk/qseries.hpp"

namespace qrk {

class DualQHahnParams {
 public:
  DualQHahnParams(const Rational& v, const Rational& gamma, const Rational& delta, int N);

  const Rational& q() const { return lat_.base().q; }
  const Rational& v() const { return lat_.base().v; }
  const Rational& gamma() const { return gamma_; }
  const Rational& delta() const { return delta_; }
  int N() const { return N_; }
  const Lattice& lattice() const { return lat_; }

  Rational x(long s) const { return lat_.xi(s); }
  /// Monic dual q-Hahn via the defining 3phi2 with prefactor (q^{-N}, gamma q;q)_n.
  Rational eval(int n, long s) const;
  /// Squared norm (gamma delta q)^n (q, delta^{-1} q^{-N}, gamma q, q^{-N};q)_n.
  Rational d2(int n) const;
  /// rho(s): the weight, probability-normalized.
  Rational weight(long s) const;
  /// rho(s) * Delta x(s - 1/2).
  Rational mass(long s) const;

 private:
  Rational gamma_, delta_;
  int N_;
  Lattice lat_;
};

std::shared_ptr<const Family<Rational>> make_dual_qhahn_family(const DualQHahnParams& p);

}  // namespace qrk
