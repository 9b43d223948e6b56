#include "qrk/racah.hpp"

namespace qrk {

std::string to_string(Truncation t) {
  switch (t) {
    case Truncation::AlphaQ: return "alpha";
    case Truncation::BetaDeltaQ: return "betadelta";
    case Truncation::GammaQ: return "gamma";
  }
  return "?";
}

namespace {
Rational need(const std::optional<Rational>& o, const char* name) {
  if (!o) throw std::invalid_argument(std::string("RacahParams: missing parameter ") + name);
  return *o;
}

RacahCore<Rational> make_core(const Rational& v, int N, Truncation trunc,
                              const RacahParams::Free& free) {
  if (N < 1) throw std::domain_error("RacahParams: N must be positive");
  RacahCore<Rational> core;
  const Rational q = v * v;
  Rational qmN1 = qrk::pow(q, -N - 1);  // q^{-N-1}
  core.q = q;
  core.N = N;
  core.trunc = trunc;
  switch (trunc) {
    case Truncation::GammaQ:
      core.alpha = need(free.alpha, "alpha");
      core.beta = need(free.beta, "beta");
      core.delta = need(free.delta, "delta");
      core.gamma = qmN1;
      break;
    case Truncation::AlphaQ:
      core.beta = need(free.beta, "beta");
      core.gamma = need(free.gamma, "gamma");
      core.delta = need(free.delta, "delta");
      core.alpha = qmN1;
      break;
    case Truncation::BetaDeltaQ:
      core.alpha = need(free.alpha, "alpha");
      core.gamma = need(free.gamma, "gamma");
      core.delta = need(free.delta, "delta");
      if (core.delta.is_zero()) throw std::domain_error("RacahParams: betadelta truncation needs delta != 0");
      core.beta = qmN1 / core.delta;
      break;
  }
  return core;
}
}  // namespace

RacahParams::RacahParams(const Rational& v, int N, Truncation trunc, const Free& free)
    : core_(make_core(v, N, trunc, free)), lat_(QBase(v), core_.dg() * core_.q, N) {
  // coefficient denominators: alpha beta q^k != 1 for 1 <= k <= 2N+2.
  const Rational& q = core_.q;
  Rational abq = core_.alpha * core_.beta;
  for (int k = 1; k <= 2 * N + 2; ++k) {
    abq *= q;
    if (abq == Rational(1))
      throw std::domain_error("RacahParams: alpha*beta*q^" + std::to_string(k) + " = 1 is inadmissible");
  }
  // Quasi-definiteness of the base family: all norms nonzero.
  for (int n = 0; n <= N; ++n) {
    if (core_.d2(n).is_zero())
      throw std::domain_error("RacahParams: d_n^2 = 0 at n = " + std::to_string(n));
  }
}

Rational RacahParams::weight_normalization() const {
  Rational total(0);
  for (int s = 0; s <= N(); ++s) total += core_.rho_hat(s) * lat_.delta_x_half(s);
  if (!(total > Rational(0)))
    throw std::domain_error("weight: non-positive total mass (inadmissible parameter region)");
  return Rational(1) / total;
}

Rational RacahParams::weight(long s) const {
  if (s < 0 || s > N()) throw std::out_of_range("weight: s out of lattice range 0..N");
  return weight_normalization() * core_.rho_hat(s);
}

Rational RacahParams::weight_normalization_closed_form() const {
  if (truncation() != Truncation::GammaQ)
    throw std::domain_error("weight_normalization_closed_form: derived for the gamma truncation");
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational gd = g * d;
  int Nn = N();
  Rational num = qpochhammer(gd * q / a, q, Nn) * qpochhammer(g * q / b, q, Nn);
  Rational den = (Rational(1) / v() - v()) * (Rational(1) - gd * q) * qpochhammer(gd * q * q, q, Nn) *
                 qpochhammer(g / (a * b), q, Nn);
  return num / den;
}

double RacahParams::weight_prefactor_check() const {
  double qf = q().to_double();
  double a = alpha().to_double(), b = beta().to_double(), g = gamma().to_double(), d = delta().to_double();
  double tol = 1e-17;
  auto qpi = [&](double x) { return qpochhammer_inf_approx(x, qf, tol); };
  double vf = v().to_double();
  double pref = 1.0 / ((1.0 / vf - vf) * (1.0 - g * d * qf)) * qpi(1.0 / (a * b) / qf) *
                qpi(g * d * qf / a) * qpi(g * qf / b) * qpi(d * qf) /
                (qpi(g / (a * b)) * qpi(d / a) * qpi(1.0 / b) * qpi(g * d * qf * qf));
  double c = weight_normalization().to_double();
  return std::abs(c - pref) / std::abs(pref);
}

// ---- difference-equation data ----

Rational RacahParams::sigma_s(long s) const {
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational half = v() - Rational(1) / v();  // q^{1/2} - q^{-1/2}
  Rational qs = qrk::pow(q, s);
  // (delta gamma q)^2 reduces to delta^2 q^{-2N} under the gamma truncation
  // and keeps the Pearson relation exact under the other two.
  return qrk::pow(dg() * q, 2) * half * half * qrk::pow(q, -2 * s) * (qs - Rational(1)) *
         (qs - Rational(1) / d) * (qs - b / g) * (qs - a / (d * g));
}

Rational RacahParams::Phi_s(long s) const {
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational half = v() - Rational(1) / v();
  Rational qs1 = qrk::pow(q, s + 1);
  return half * half * qrk::pow(q, -2 * s) * (Rational(1) - a * qs1) * (Rational(1) - b * d * qs1) *
         (Rational(1) - g * qs1) * (Rational(1) - dg() * qs1);
}

Rational RacahParams::tau_s(long s) const {
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational qs = qrk::pow(q, s), qs1 = qs * q;
  Rational br = (Rational(1) - a * qs1) * (Rational(1) - b * d * qs1) * (Rational(1) - g * qs1) *
                    (Rational(1) - dg() * qs1) -
                qrk::pow(dg() * q, 2) * (qs - Rational(1)) * (qs - Rational(1) / d) * (qs - b / g) *
                    (qs - a / (d * g));
  Rational den = Rational(1) - dg() * qrk::pow(q, 2 * s + 1);
  if (den.is_zero()) throw std::domain_error("tau_s: zero denominator");
  return (Rational(1) / v() - v()) * qrk::pow(q, -s) / den * br;
}

Rational RacahParams::lambda_n(int n) const {
  return -qrk::pow(core_.q, -n) * v() * (Rational(1) - qrk::pow(core_.q, n)) *
         (Rational(1) - core_.alpha * core_.beta * qrk::pow(core_.q, n + 1));
}

Rational RacahParams::tau_n_s(int n, long s) const {
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational ab = a * b;
  Rational inner = (Rational(1) - ab * qrk::pow(q, 2 * n + 2)) * lat_.x(2 * s + n) +
                   qrk::pow(v(), -n) * ((Rational(1) - a * qrk::pow(q, n + 1)) *
                                            (Rational(1) - b * d * qrk::pow(q, n + 1)) *
                                            (Rational(1) - g * qrk::pow(q, n + 1)) -
                                        (Rational(1) + dg() * qrk::pow(q, n + 1)) *
                                            (Rational(1) - ab * qrk::pow(q, 2 * n + 2)));
  return -qrk::pow(q, -n) * (v() - Rational(1) / v()) * inner;
}

Rational RacahParams::alpha_bar(int n) const {
  return qrk::pow(core_.q, -n) * v() * (Rational(1) / v() - v()) *
         (Rational(1) - core_.alpha * core_.beta * qrk::pow(core_.q, 2 * n + 1));
}

Rational RacahParams::beta_bar(int n, long s) const {
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational ab = a * b;
  Rational inner = (Rational(1) - ab * qrk::pow(q, 2 * n + 2)) * lat_.x(2 * s + n) +
                   qrk::pow(v(), -n) * ((Rational(1) - a * qrk::pow(q, n + 1)) *
                                            (Rational(1) - b * d * qrk::pow(q, n + 1)) *
                                            (Rational(1) - g * qrk::pow(q, n + 1)) -
                                        (Rational(1) + dg() * qrk::pow(q, n + 1)) *
                                            (Rational(1) - ab * qrk::pow(q, 2 * n + 2)));
  return qrk::pow(v(), 1 - n) * (v() - Rational(1) / v()) * (Rational(1) - ab * qrk::pow(q, n + 1)) /
         (Rational(1) - ab * qrk::pow(q, 2 * n + 2)) * inner;
}

Rational RacahParams::beta_hat(int n, long s) const {
  const Rational& q = core_.q;
  Rational extra = qrk::pow(q, -s - n) * v() * (v() - Rational(1) / v()) *
                   (Rational(1) - qrk::pow(q, n)) *
                   (Rational(1) - core_.alpha * core_.beta * qrk::pow(q, n + 1)) *
                   (Rational(1) - dg() * qrk::pow(q, 2 * s + 1));
  return beta_bar(n, s) - extra;
}

Rational RacahParams::sode_residual(int n, long s, SodeConvention conv) const {
  auto f = [&](long t) { return core_.eval_hyper(n, t); };
  Rational fwd = lat_.fwd_quot(f, s);
  Rational bwd = lat_.bwd_quot(f, s);
  Rational dxh = lat_.delta_x_half(s);
  if (dxh.is_zero()) throw std::domain_error("sode_residual: zero half increment");
  Rational second = (fwd - bwd) / dxh;
  Rational tau_term = conv == SodeConvention::TauForward
                          ? tau_s(s) * fwd
                          : tau_s(s) / Rational(2) * (fwd + bwd);
  return sigma_s(s) * second + tau_term + lambda_n(n) * core_.eval_hyper(n, s);
}

RacahParams::SodeProbe RacahParams::sode_probe(int nmax) const {
  SodeProbe probe;
  probe.forward_zero = true;
  probe.symmetric_zero = true;
  probe.phi_relation_zero = true;
  for (int n = 0; n <= nmax; ++n) {
    for (long s = 1; s <= N() - 1; ++s) {
      if (!sode_residual(n, s, SodeConvention::TauForward).is_zero()) probe.forward_zero = false;
      if (!sode_residual(n, s, SodeConvention::TauSymmetric).is_zero()) probe.symmetric_zero = false;
    }
  }
  for (long s = 0; s <= N(); ++s) {
    if (!(Phi_s(s) - sigma_s(s) - tau_s(s) * lat_.delta_x_half(s)).is_zero())
      probe.phi_relation_zero = false;
  }
  return probe;
}

// ---- Theta/Xi shift identity ----
//
// R_{n-1}(s) = Theta(s,n) R_n(s) + Xi(s,n) R_n(s+1), equivalent to the
// combination of the TTRR with the forward structure relation. The closed
// forms below hold under all three truncations.

Rational RacahParams::xi(long s, int n) const {
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational ab = a * b;
  Rational qs1 = qrk::pow(q, s + 1);
  Rational den = (Rational(1) - a * qrk::pow(q, n)) * (Rational(1) - ab * qrk::pow(q, n)) *
                 (Rational(1) - b * d * qrk::pow(q, n)) * (Rational(1) - g * qrk::pow(q, n)) *
                 (Rational(1) - qrk::pow(q, n)) * (Rational(1) - b * qrk::pow(q, n)) *
                 (g - ab * qrk::pow(q, n)) * (d - a * qrk::pow(q, n)) *
                 (Rational(1) - dg() * qrk::pow(q, 2 * s + 2));
  if (den.is_zero()) throw std::domain_error("xi: zero denominator at (s,n)");
  Rational num = qrk::pow(q, -s - 1 + n) * (Rational(1) - ab * qrk::pow(q, 2 * n - 1)) *
                 qrk::pow(Rational(1) - ab * qrk::pow(q, 2 * n), 2) * (Rational(1) - a * qs1) *
                 (Rational(1) - b * d * qs1) * (Rational(1) - g * qs1) * (Rational(1) - dg() * qs1);
  return -num / den;
}

Rational RacahParams::theta(long s, int n) const {
  const Rational &q = core_.q, &a = core_.alpha, &b = core_.beta, &g = core_.gamma, &d = core_.delta;
  Rational ab = a * b;
  Rational den = (Rational(1) - a * qrk::pow(q, n)) * (Rational(1) - ab * qrk::pow(q, n)) *
                 (Rational(1) - b * d * qrk::pow(q, n)) * (Rational(1) - g * qrk::pow(q, n)) *
                 (Rational(1) - qrk::pow(q, n)) * (Rational(1) - b * qrk::pow(q, n)) *
                 (g - ab * qrk::pow(q, n)) * (d - a * qrk::pow(q, n));
  if (den.is_zero()) throw std::domain_error("theta: zero denominator at (s,n)");
  Rational G = (Rational(1) - ab * qrk::pow(q, 2 * n - 1)) *
               qrk::pow(Rational(1) - ab * qrk::pow(q, 2 * n), 2) / den;
  Rational t1 = (qrk::pow(q, -s) - Rational(1)) * (Rational(1) - dg() * qrk::pow(q, s + 1));
  Rational t2 = (Rational(1) - a * qrk::pow(q, n + 1)) * (Rational(1) - ab * qrk::pow(q, n + 1)) *
                (Rational(1) - b * d * qrk::pow(q, n + 1)) * (Rational(1) - g * qrk::pow(q, n + 1)) /
                ((Rational(1) - ab * qrk::pow(q, 2 * n + 1)) * (Rational(1) - ab * qrk::pow(q, 2 * n + 2)));
  Rational t3 = q * (Rational(1) - qrk::pow(q, n)) * (Rational(1) - b * qrk::pow(q, n)) *
                (g - ab * qrk::pow(q, n)) * (d - a * qrk::pow(q, n)) /
                ((Rational(1) - ab * qrk::pow(q, 2 * n)) * (Rational(1) - ab * qrk::pow(q, 2 * n + 1)));
  Rational inner = (Rational(1) - ab * qrk::pow(q, 2 * n + 2)) * lat_.x(2 * s + n) +
                   qrk::pow(v(), -n) * ((Rational(1) - a * qrk::pow(q, n + 1)) *
                                            (Rational(1) - b * d * qrk::pow(q, n + 1)) *
                                            (Rational(1) - g * qrk::pow(q, n + 1)) -
                                        (Rational(1) + dg() * qrk::pow(q, n + 1)) *
                                            (Rational(1) - ab * qrk::pow(q, 2 * n + 2)));
  Rational W = qrk::pow(v(), n) * (Rational(1) - ab * qrk::pow(q, n + 1)) /
                   (Rational(1) - ab * qrk::pow(q, 2 * n + 2)) * inner -
               qrk::pow(q, -s) * (Rational(1) - qrk::pow(q, n)) *
                   (Rational(1) - ab * qrk::pow(q, n + 1)) *
                   (Rational(1) - dg() * qrk::pow(q, 2 * s + 1));
  return -xi(s, n) + G * ((Rational(1) - ab * qrk::pow(q, 2 * n + 1)) * (t1 + t2 + t3) - W) / q;
}

}  // namespace qrk
