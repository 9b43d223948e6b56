#include "qrk/lattice.hpp"

#include <stdexcept>

namespace qrk {

QBase::QBase(const Rational& v_) : v(v_), q(v_ * v_) {
  if (!(v > Rational(0)) || !(v < Rational(1)))
    throw std::domain_error("QBase: v must lie in (0,1)");
}

Lattice::Lattice(QBase base, Rational c1, int N) : base_(std::move(base)), c1_(std::move(c1)), N_(N) {
  if (N < 1) throw std::domain_error("Lattice: N must be positive");
  // x(s) - x(t) = (q^s - q^t)(c1 - q^{-s-t}); injectivity on {0..N} needs
  // c1 != q^{-u} for u = 1..2N-1. c1 = q^{-2s} zeroes Delta x(s-1/2) and
  // c1 = q^{-2s-1} zeroes Delta x(s); together u = 0..2N.
  Rational qu(1);  // q^{-u}
  for (int u = 0; u <= 2 * N; ++u) {
    if (c1_ == qu)
      throw std::domain_error("Lattice: c1 = q^{-" + std::to_string(u) +
                              "} degenerates the lattice on 0..N");
    qu /= base_.q;
  }
}

Rational Lattice::x(long two_s) const {
  return qrk::pow(base_.v, -two_s) + c1_ * qrk::pow(base_.v, two_s);
}

Rational Lattice::delta_x(long s) const {
  // q^{-s}(1 - c1 q^{2s+1})(q^{-1} - 1); equals x(s+1) - x(s).
  const Rational& q = base_.q;
  return qrk::pow(q, -s) * (Rational(1) - c1_ * qrk::pow(q, 2 * s + 1)) * (Rational(1) / q - Rational(1));
}

Rational Lattice::delta_x_half(long s) const { return x(2 * s + 1) - x(2 * s - 1); }

Rational Lattice::fwd_quot(const std::function<Rational(long)>& f, long s) const {
  Rational dx = delta_x(s);
  if (dx.is_zero()) throw std::domain_error("fwd_quot: zero lattice increment");
  return (f(s + 1) - f(s)) / dx;
}

Rational Lattice::bwd_quot(const std::function<Rational(long)>& f, long s) const {
  Rational dx = delta_x(s - 1);
  if (dx.is_zero()) throw std::domain_error("bwd_quot: zero lattice increment");
  return (f(s) - f(s - 1)) / dx;
}

}  // namespace qrk
