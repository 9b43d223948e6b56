#include "qrk/krall_racah.hpp"

namespace qrk {

std::shared_ptr<const Family<Rational>> make_racah_family(const RacahParams& p) {
  std::vector<Rational> masses;
  bool have_weight = true;
  // beta = 0 (the exact beta->0 limit) has no finite rho_hat; the Krall
  // layer never consults masses, so an unused placeholder is stored.
  if (p.alpha().is_zero() || p.beta().is_zero()) have_weight = false;
  std::vector<Rational> m;
  if (have_weight) m = p.core().normalized_masses();
  return std::make_shared<TabulatedFamily<Rational>>(
      p.N(), [&](long s) { return p.x(s); }, [&](int n, long s) { return p.eval_hyper(n, s); },
      [&](int n) { return p.d2(n); },
      [&](long s) { return have_weight ? m[static_cast<size_t>(s)] : Rational(0); });
}

Rep1Coeffs rep1_coeffs(const RacahParams& p, const Family<Rational>& fam, const MassConfigQ& mc,
                       int n, long s) {
  KrallBoundary<Rational> b = boundary_modified(fam, mc, n);
  Rep1Coeffs c;
  c.A_bar = -mc.A * b.r0 * kappa0(p, s, n) - mc.B * b.rN * kappaN(p, s, n);
  c.B_bar = -mc.A * b.r0 * kappa0_bar(p, s, n);
  c.C_bar = -mc.B * b.rN * kappaN_bar(p, s, n);
  return c;
}

Rational eval_rep1(const RacahParams& p, const Family<Rational>& fam, const MassConfigQ& mc,
                   int n, long s) {
  Rep1Coeffs c = rep1_coeffs(p, fam, mc, n, s);
  auto f = [&](long t) { return fam.eval(n - 1, t); };
  Rational bwd = p.lattice().bwd_quot(f, s);
  Rational fwd = p.lattice().fwd_quot(f, s);
  return fam.eval(n, s) + c.A_bar * fam.eval(n - 1, s) + c.B_bar * bwd + c.C_bar * fwd;
}

Rational eval_rep3(const RacahParams& p, const Family<Rational>& fam, const MassConfigQ& mc,
                   int n, long s) {
  Rep2Coeffs<Rational> c = rep2_coeffs(fam, mc, n);
  Rational a_sn = c.A_sn(fam, s) + c.B_sn(fam, s) * p.theta(s, n);
  Rational b_sn = c.B_sn(fam, s) * p.xi(s, n);
  return a_sn * fam.eval(n, s) + b_sn * fam.eval(n, s + 1);
}

namespace {
// vartheta_n of the Pi_1 factorization.
Rational vartheta_n(const RacahParams& p, int n) {
  const Rational &q = p.q(), &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
  Rational ab = a * b;
  return (Rational(1) - a * qrk::pow(q, n)) * (Rational(1) - b * d * qrk::pow(q, n)) *
         (Rational(1) - g * qrk::pow(q, n)) * (Rational(1) - qrk::pow(q, -n)) /
         ((Rational(1) - ab * qrk::pow(q, 2 * n - 1)) * (Rational(1) - ab * qrk::pow(q, 2 * n)));
}
}  // namespace

std::optional<Rational> series_rep(const RacahParams& p, const Family<Rational>& fam,
                                   const MassConfigQ& mc, int n, long s) {
  const Rational &q = p.q(), &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
  Rep2Coeffs<Rational> c = rep2_coeffs(fam, mc, n);
  Rational As = c.A_sn(fam, s), Bs = c.B_sn(fam, s);
  Rational tht = vartheta_n(p, n);
  Rational den_b1 = As * a * b * qrk::pow(q, n) * tht + Bs * qrk::pow(q, -n);
  Rational num_b1 = As * tht + Bs;
  if (den_b1.is_zero() || num_b1.is_zero()) return std::nullopt;  // degenerate beta_1
  Rational q_b1 = num_b1 / den_b1;  // q^{beta_1}, an exact rational
  // lower parameter q^{-beta_1} must avoid poles inside the sum
  Rational qi(1);
  for (int i = 0; i < n; ++i) {
    if (q_b1 == qi) return std::nullopt;
    qi *= q;
  }
  Rational Dn = -qpochhammer({a * q, b * d * q, g * q}, q, n - 1) /
                qpochhammer(a * b * qrk::pow(q, n), q, n - 1) * (Rational(1) - q_b1) /
                (Rational(1) - qrk::pow(q, -n)) * den_b1;
  HyperSpec<Rational> h{{qrk::pow(q, -n), a * b * qrk::pow(q, n), qrk::pow(q, -s),
                         p.dg() * qrk::pow(q, s + 1), q / q_b1},
                        {a * q, b * d * q, g * q, Rational(1) / q_b1},
                        q,
                        q,
                        n + 1};
  return Dn * basic_hyper_terminating(h);
}

Rational series_rep_direct(const RacahParams& p, const Family<Rational>& fam,
                           const MassConfigQ& mc, int n, long s) {
  const Rational &q = p.q(), &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
  Rep2Coeffs<Rational> c = rep2_coeffs(fam, mc, n);
  Rational lam_n = qpochhammer({a * q, b * d * q, g * q}, q, n) /
                   qpochhammer(a * b * qrk::pow(q, n + 1), q, n);
  Rational lam_m = qpochhammer({a * q, b * d * q, g * q}, q, n - 1) /
                   qpochhammer(a * b * qrk::pow(q, n), q, n - 1);
  HyperSpec<Rational> h1{{qrk::pow(q, -n), a * b * qrk::pow(q, n + 1), qrk::pow(q, -s),
                          p.dg() * qrk::pow(q, s + 1)},
                         {a * q, b * d * q, g * q},
                         q,
                         q,
                         n + 1};
  HyperSpec<Rational> h2{{qrk::pow(q, -n + 1), a * b * qrk::pow(q, n), qrk::pow(q, -s),
                          p.dg() * qrk::pow(q, s + 1)},
                         {a * q, b * d * q, g * q},
                         q,
                         q,
                         n};
  return c.A_sn(fam, s) * lam_n * basic_hyper_terminating(h1) +
         c.B_sn(fam, s) * lam_m * basic_hyper_terminating(h2);
}

Rational one_mass_phi(const RacahParams& p, long s) {
  const Rational& q = p.q();
  return (qrk::pow(q, -s) - Rational(1)) * (Rational(1) - p.dg() * qrk::pow(q, s + 1));
}

Rational one_mass_boundary0(const Family<Rational>& fam, const Rational& A, int n) {
  Rational k00 = kernel_sum(fam, n - 1, 0, 0);
  Rational den = Rational(1) + A * k00;
  if (den.is_zero()) throw std::domain_error("one_mass_boundary0: 1 + A K_{n-1}(0,0) = 0");
  return fam.boundary_0(n) / den;
}

namespace {
// one-mass coefficient pair.
struct OneMassCoeffs {
  Rational A_sn, B_sn;
};
OneMassCoeffs one_mass_coeffs(const RacahParams& p, const Family<Rational>& fam, const Rational& A,
                              int n, long s) {
  Rational r0 = one_mass_boundary0(fam, A, n);
  Rational d2m = fam.d2(n - 1);
  OneMassCoeffs c;
  c.A_sn = one_mass_phi(p, s) - A * r0 * fam.boundary_0(n - 1) / d2m;
  c.B_sn = A * r0 * fam.boundary_0(n) / d2m;
  return c;
}
}  // namespace

Rational one_mass_rep2(const RacahParams& p, const Family<Rational>& fam, const Rational& A,
                       int n, long s) {
  OneMassCoeffs c = one_mass_coeffs(p, fam, A, n, s);
  return c.A_sn * fam.eval(n, s) + c.B_sn * fam.eval(n - 1, s);
}

Rational one_mass_rep3(const RacahParams& p, const Family<Rational>& fam, const Rational& A,
                       int n, long s) {
  OneMassCoeffs c = one_mass_coeffs(p, fam, A, n, s);
  Rational a_sn = c.A_sn + c.B_sn * p.theta(s, n);
  Rational b_sn = c.B_sn * p.xi(s, n);
  return a_sn * fam.eval(n, s) + b_sn * fam.eval(n, s + 1);
}

// ---- compact endpoint kernel coefficients ----

namespace {
// Linear-in-x(s + m/2) coefficient of beta_bar_m.
Rational lam_coeff(const RacahParams& p, int m) {
  return qrk::pow(p.v(), 1 - m) * (p.v() - Rational(1) / p.v()) *
         (Rational(1) - p.alpha() * p.beta() * qrk::pow(p.q(), m + 1));
}
// Coefficient of q^{-s}(1 - dg q^{2s+1}) in the beta_hat extra term.
Rational ce_coeff(const RacahParams& p, int m) {
  return qrk::pow(p.q(), -m) * p.v() * (p.v() - Rational(1) / p.v()) *
         (Rational(1) - qrk::pow(p.q(), m)) *
         (Rational(1) - p.alpha() * p.beta() * qrk::pow(p.q(), m + 1));
}
}  // namespace

Rational kappa0(const RacahParams& p, long s, int n) {
  const int m = n - 1;
  const Rational& q = p.q();
  Rational den = p.alpha_bar(m) * p.d2(m) * (Rational(1) - p.dg() * qrk::pow(q, s + 1));
  if (den.is_zero()) throw std::domain_error("kappa0: zero denominator");
  return -p.boundary0(m) * lam_coeff(p, m) * qrk::pow(p.v(), -m) *
         (Rational(1) - p.dg() * qrk::pow(q, s + m + 1)) / den;
}

Rational kappa0_bar(const RacahParams& p, long s, int n) {
  const int m = n - 1;
  const Rational &q = p.q(), &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
  Rational qs = qrk::pow(q, s);
  Rational half = p.v() - Rational(1) / p.v();
  Rational den = p.alpha_bar(m) * p.d2(m) * (Rational(1) - p.dg() * qrk::pow(q, s + 1));
  if (den.is_zero()) throw std::domain_error("kappa0_bar: zero denominator");
  return -p.boundary0(m) * qrk::pow(p.dg() * q, 2) * half * half * qrk::pow(q, -s) *
         (qs - Rational(1) / d) * (qs - b / g) * (qs - a / (d * g)) / den;
}

Rational kappaN(const RacahParams& p, long s, int n) {
  const int m = n - 1;
  const Rational& q = p.q();
  const int N = p.N();
  Rational den = p.alpha_bar(m) * p.d2(m) * (Rational(1) - p.dg() * qrk::pow(q, s + N + 1));
  if (den.is_zero()) throw std::domain_error("kappaN: zero denominator");
  Rational bracket = lam_coeff(p, m) * qrk::pow(p.v(), -m) *
                         (Rational(1) - p.dg() * qrk::pow(q, s + N + m + 1)) -
                     ce_coeff(p, m) * (Rational(1) + p.dg() * qrk::pow(q, s + N + 1));
  return -p.boundaryN(m) * bracket / den;
}

Rational kappaN_bar(const RacahParams& p, long s, int n) {
  const int m = n - 1;
  const Rational &q = p.q(), &a = p.alpha(), &b = p.beta(), &g = p.gamma(), &d = p.delta();
  const int N = p.N();
  Rational qs1 = qrk::pow(q, s + 1);
  Rational half = p.v() - Rational(1) / p.v();
  // P4(s) with the truncation-active factor (1 - q^{s-N}) divided out
  // against x(s) - x(N).
  Rational other3;
  switch (p.truncation()) {
    case Truncation::GammaQ:
      other3 = (Rational(1) - a * qs1) * (Rational(1) - b * d * qs1) * (Rational(1) - p.dg() * qs1);
      break;
    case Truncation::AlphaQ:
      other3 = (Rational(1) - b * d * qs1) * (Rational(1) - g * qs1) * (Rational(1) - p.dg() * qs1);
      break;
    case Truncation::BetaDeltaQ:
      other3 = (Rational(1) - a * qs1) * (Rational(1) - g * qs1) * (Rational(1) - p.dg() * qs1);
      break;
  }
  Rational den = p.alpha_bar(m) * p.d2(m) * (Rational(1) - p.dg() * qrk::pow(q, s + N + 1));
  if (den.is_zero()) throw std::domain_error("kappaN_bar: zero denominator");
  return p.boundaryN(m) * half * half * qrk::pow(q, -s) * other3 / den;
}

Rational kernel_at0_compact(const RacahParams& p, int n, long s) {
  auto f = [&](long t) { return p.eval_hyper(n - 1, t); };
  Rational bwd = p.lattice().bwd_quot(f, s);
  return kappa0(p, s, n) * p.eval_hyper(n - 1, s) + kappa0_bar(p, s, n) * bwd;
}

Rational kernel_atN_compact(const RacahParams& p, int n, long s) {
  auto f = [&](long t) { return p.eval_hyper(n - 1, t); };
  Rational fwd = p.lattice().fwd_quot(f, s);
  return kappaN(p, s, n) * p.eval_hyper(n - 1, s) + kappaN_bar(p, s, n) * fwd;
}

}  // namespace qrk
