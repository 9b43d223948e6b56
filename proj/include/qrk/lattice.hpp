#pragma once

/**
 * @file lattice.hpp
 * @brief The q-quadratic lattice x(s) = c1 q^s + q^{-s} at integer and
 *        half-integer s.
 *
 * q is supplied through its exact square root v, so half-integer lattice
 * points (and every q^{n/2} the structure data need) stay rational.
 * Half-integer s is passed as a doubled integer index: two_s = 2s.
 */

#include <functional>

#include "qrk/rational.hpp"

namespace qrk {

/// The deformation parameter via its exact square root: q = v^2, 0 < q < 1.
struct QBase {
  Rational v;
  Rational q;

  explicit QBase(const Rational& v_);
};

/// x(s) = c1 q^s + c2 q^{-s} + c3 with c2 = 1, c3 = 0 and c1 = delta*gamma*q.
class Lattice {
 public:
  /// Checks that x is injective on {0..N} and that no lattice increment
  /// Delta x(s) or half-increment Delta x(s-1/2) vanishes on the grid
  /// (c1 must avoid q^{-u} for u = 0..2N).
  Lattice(QBase base, Rational c1, int N);

  const QBase& base() const { return base_; }
  const Rational& c1() const { return c1_; }
  int N() const { return N_; }

  /// x at half-integer s, encoded as two_s = 2s.
  Rational x(long two_s) const;
  /// x at integer s.
  Rational xi(long s) const { return x(2 * s); }

  /// Delta x(s) = x(s+1) - x(s), via the closed form q^{-s}(1 - c1 q^{2s+1})(q^{-1} - 1).
  Rational delta_x(long s) const;
  /// Delta x(s - 1/2) = x(s+1/2) - x(s-1/2), exact.
  Rational delta_x_half(long s) const;

  /// (f(s+1) - f(s)) / Delta x(s); errors on a zero increment.
  Rational fwd_quot(const std::function<Rational(long)>& f, long s) const;
  /// (f(s) - f(s-1)) / nabla x(s); errors on a zero increment.
  Rational bwd_quot(const std::function<Rational(long)>& f, long s) const;

 private:
  QBase base_;
  Rational c1_;
  int N_;
};

}  // namespace qrk
