#include "qrk/qhahn.hpp"

#include <stdexcept>

namespace qrk {

QHahnParams::QHahnParams(const Rational& v, const Rational& mu, const Rational& nu, int N)
    : mu_(mu), nu_(nu), N_(N), lat_(QBase(v), Rational(0), N) {
  const Rational& q = lat_.base().q;
  // parameter degeneracy: mu nu q^k = 1 in the active range
  Rational mnq = mu * nu;
  for (int k = 1; k <= 2 * N + 2; ++k) {
    mnq *= q;
    if (mnq == Rational(1)) throw std::domain_error("QHahnParams: mu*nu*q^k = 1 is inadmissible");
  }
  std::vector<Rational> raw(N + 1);
  Rational total(0);
  Rational qmN = qrk::pow(q, -N);
  for (int s = 0; s <= N; ++s) {
    Rational den = qpochhammer({q, qmN / mu}, q, s) * qrk::pow(mu * nu * q, s);
    if (den.is_zero()) throw std::domain_error("QHahnParams: weight denominator zero");
    raw[s] = qpochhammer({nu * q, qmN}, q, s) / den;
    total += raw[s];
  }
  if (total.is_zero()) throw std::domain_error("QHahnParams: zero total mass");
  masses_.resize(N + 1);
  for (int s = 0; s <= N; ++s) masses_[s] = raw[s] / total;
  for (int n = 0; n <= N; ++n)
    if (d2(n).is_zero()) throw std::domain_error("QHahnParams: dbar_n^2 = 0");
}

Rational QHahnParams::eval(int n, long s) const {
  const Rational& q = this->q();
  Rational qmN = qrk::pow(q, -N_);
  Rational den = qpochhammer(mu_ * nu_ * qrk::pow(q, n + 1), q, n);
  if (den.is_zero()) throw std::domain_error("qhahn eval: zero prefactor denominator");
  Rational pref = qpochhammer({nu_ * q, qmN}, q, n) / den;
  HyperSpec<Rational> h{{qrk::pow(q, -n), mu_ * nu_ * qrk::pow(q, n + 1), qrk::pow(q, -s)},
                        {nu_ * q, qmN},
                        q,
                        q,
                        n + 1};
  return pref * basic_hyper_terminating(h);
}

Rational QHahnParams::d2(int n) const {
  const Rational& q = this->q();
  Rational num = qrk::pow(-nu_ * q, n) * qrk::pow(q, (static_cast<long>(n) * (n - 1)) / 2 - static_cast<long>(N_) * n) *
                 qpochhammer({q, mu_ * q, nu_ * q, qrk::pow(q, -N_), mu_ * nu_ * qrk::pow(q, N_ + 2)}, q, n);
  Rational den = qpochhammer(mu_ * nu_ * q * q, q, 2 * n) *
                 qpochhammer(mu_ * nu_ * qrk::pow(q, n + 1), q, n);
  return num / den;
}

Rational QHahnParams::mass(long s) const { return masses_.at(static_cast<size_t>(s)); }

std::shared_ptr<const Family<Rational>> make_qhahn_family(const QHahnParams& p) {
  return std::make_shared<TabulatedFamily<Rational>>(
      p.N(), [&](long s) { return p.x(s); }, [&](int n, long s) { return p.eval(n, s); },
      [&](int n) { return p.d2(n); }, [&](long s) { return p.mass(s); });
}

}  // namespace qrk
