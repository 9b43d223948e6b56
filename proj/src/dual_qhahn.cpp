#include "qrk/dual_qhahn.hpp"

#include <stdexcept>

namespace qrk {

DualQHahnParams::DualQHahnParams(const Rational& v, const Rational& gamma, const Rational& delta,
                                 int N)
    : gamma_(gamma), delta_(delta), N_(N), lat_(QBase(v), gamma * delta * v * v, N) {
  const Rational& q = lat_.base().q;
  // weight denominators nonzero on 0..N
  for (int s = 0; s <= N; ++s) {
    Rational den = qpochhammer({q, gamma * delta * qrk::pow(q, N + 2), delta * q}, q, s);
    if (den.is_zero()) throw std::domain_error("DualQHahnParams: weight denominator zero");
  }
  for (int n = 0; n <= N; ++n)
    if (d2(n).is_zero()) throw std::domain_error("DualQHahnParams: d_n^2 = 0");
}

Rational DualQHahnParams::eval(int n, long s) const {
  const Rational& q = this->q();
  Rational qmN = qrk::pow(q, -N_);
  Rational pref = qpochhammer({qmN, gamma_ * q}, q, n);
  HyperSpec<Rational> h{{qrk::pow(q, -n), qrk::pow(q, -s), delta_ * gamma_ * qrk::pow(q, s + 1)},
                        {qmN, gamma_ * q},
                        q,
                        q,
                        n + 1};
  return pref * basic_hyper_terminating(h);
}

Rational DualQHahnParams::d2(int n) const {
  const Rational& q = this->q();
  return qrk::pow(gamma_ * delta_ * q, n) *
         qpochhammer({q, qrk::pow(q, -N_) / delta_, gamma_ * q, qrk::pow(q, -N_)}, q, n);
}

Rational DualQHahnParams::weight(long s) const {
  const Rational& q = this->q();
  Rational gd = gamma_ * delta_;
  Rational num = qrk::pow(q, N_ * s - s * (s - 1) / 2) * qrk::pow(gamma_ * q, N_) *
                 qpochhammer(delta_ * q, q, N_) *
                 qpochhammer({gamma_ * q, gd * q, qrk::pow(q, -N_)}, q, static_cast<int>(s));
  Rational den = qrk::pow(-gamma_, s) * (Rational(1) - gd * q) *
                 (Rational(1) / v() - v()) * qpochhammer(gd * q * q, q, N_) *
                 qpochhammer({q, gd * qrk::pow(q, N_ + 2), delta_ * q}, q, static_cast<int>(s));
  return num / den;
}

Rational DualQHahnParams::mass(long s) const { return weight(s) * lat_.delta_x_half(s); }

std::shared_ptr<const Family<Rational>> make_dual_qhahn_family(const DualQHahnParams& p) {
  return std::make_shared<TabulatedFamily<Rational>>(
      p.N(), [&](long s) { return p.x(s); }, [&](int n, long s) { return p.eval(n, s); },
      [&](int n) { return p.d2(n); }, [&](long s) { return p.mass(s); });
}

}  // namespace qrk
