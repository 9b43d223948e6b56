#include "qrk/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qrk/oracle.hpp"

namespace qrk {

namespace {
// |a - b| relative to |b| when b != 0, absolute otherwise.
double rel_dev(const Rational& a, const Rational& b) {
  Rational d = abs(a - b);
  if (!b.is_zero()) return (d / abs(b)).to_double();
  return d.to_double();
}
}  // namespace

VerificationReport limit_beta_to_zero_check(const DualQHahnParams& dual, const MassConfigQ& mc,
                                            int nmax) {
  VerificationReport rep;
  rep.suite = "limits/beta-to-zero";
  const int N = dual.N();
  // q-Racah at alpha q = q^{-N}, beta = 0 (exact substitution)
  RacahParams::Free f;
  f.beta = Rational(0);
  f.gamma = dual.gamma();
  f.delta = dual.delta();
  RacahParams racah(dual.v(), N, Truncation::AlphaQ, f);
  auto fam_r = make_racah_family(racah);
  auto fam_d = make_dual_qhahn_family(dual);

  bool ok_eval = true, ok_d2 = true, ok_bnd = true;
  for (int n = 0; n <= nmax; ++n) {
    if (fam_r->d2(n) != fam_d->d2(n)) ok_d2 = false;
    if (racah.boundary0(n) != fam_d->eval(n, 0)) ok_bnd = false;
    if (racah.boundaryN(n) != fam_d->eval(n, N)) ok_bnd = false;
    for (long s = 0; s <= N; ++s)
      if (fam_r->eval(n, s) != fam_d->eval(n, s)) ok_eval = false;
  }
  rep.add_exact("beta0-evals-equal-dual-qhahn", "n<=" + std::to_string(nmax), ok_eval);
  rep.add_exact("beta0-norms-equal-dual-d2", "n<=" + std::to_string(nmax), ok_d2);
  rep.add_exact("beta0-boundaries-equal", "n<=" + std::to_string(nmax), ok_bnd);

  // dual weight: probability-normalized and orthogonal with the
  // closed-form d_n^2 (which is the exact squared norm, sign included)
  {
    Rational total(0);
    for (long s = 0; s <= N; ++s) total += fam_d->mass(s);
    rep.add_exact("dual-weight-probability", "s=0.." + std::to_string(N), total == Rational(1));
    bool ok = true;
    bool positive = true;
    for (int n = 0; n <= nmax; ++n) {
      if (!(fam_d->d2(n) > Rational(0))) positive = false;
      for (int k = n; k <= nmax; ++k) {
        Rational acc(0);
        for (long s = 0; s <= N; ++s) acc += fam_d->eval(n, s) * fam_d->eval(k, s) * fam_d->mass(s);
        if (acc != ((n == k) ? fam_d->d2(n) : Rational(0))) ok = false;
      }
    }
    rep.add_exact("dual-orthogonality-closed-form-d2", "n<=" + std::to_string(nmax), ok,
                  positive ? "closed-form d_n^2 are the exact norms (all positive here)"
                           : "closed-form d_n^2 are the exact norms (not all positive here)");
  }
  // Krall families coincide exactly
  {
    bool ok = true;
    for (int n = 0; n <= nmax && ok; ++n) {
      KrallBoundary<Rational> br = boundary_modified(*fam_r, mc, n);
      KrallBoundary<Rational> bd = boundary_modified(*fam_d, mc, n);
      if (br.r0 != bd.r0 || br.rN != bd.rN || br.d2_mod != bd.d2_mod) ok = false;
      for (long s = 0; s <= N && ok; ++s)
        if (eval_krall(*fam_r, mc, n, s) != eval_krall(*fam_d, mc, n, s)) ok = false;
    }
    rep.add_exact("beta0-krall-families-equal", "n<=" + std::to_string(nmax), ok);
  }
  // modified dual orthogonality
  {
    bool ok = true;
    for (int n = 0; n <= nmax && ok; ++n) {
      Rational dn = boundary_modified(*fam_d, mc, n).d2_mod;
      for (int k = n; k <= nmax && ok; ++k) {
        Rational acc(0);
        for (long s = 0; s <= N; ++s)
          acc += eval_krall(*fam_d, mc, n, s) * eval_krall(*fam_d, mc, k, s) * fam_d->mass(s);
        acc += mc.A * eval_krall(*fam_d, mc, n, 0) * eval_krall(*fam_d, mc, k, 0);
        acc += mc.B * eval_krall(*fam_d, mc, n, N) * eval_krall(*fam_d, mc, k, N);
        if (acc != ((n == k) ? dn : Rational(0))) ok = false;
      }
    }
    rep.add_exact("dual-krall-orthogonality", "n<=" + std::to_string(nmax), ok);
  }
  return rep;
}

VerificationReport limit_qdelta_to_zero_check(const QHahnParams& target, const MassConfigQ& mc,
                                              int nmax, const std::vector<Rational>& epsilons,
                                              double final_threshold) {
  VerificationReport rep;
  rep.suite = "limits/qdelta-to-zero";
  const int N = target.N();
  auto fam_h = make_qhahn_family(target);

  // q-Hahn orthogonality with the closed-form dbar_n^2 (exact)
  {
    bool ok = true;
    for (int n = 0; n <= nmax && ok; ++n)
      for (int k = n; k <= nmax && ok; ++k) {
        Rational acc(0);
        for (long s = 0; s <= N; ++s) acc += fam_h->eval(n, s) * fam_h->eval(k, s) * fam_h->mass(s);
        if (acc != ((n == k) ? fam_h->d2(n) : Rational(0))) ok = false;
      }
    rep.add_exact("qhahn-orthogonality-closed-form-d2", "n<=" + std::to_string(nmax), ok,
                  "standard q-Hahn weight, probability-normalized");
  }
  // q-Hahn-Krall orthogonality via the shared layer (exact)
  {
    bool ok = true;
    for (int n = 0; n <= nmax && ok; ++n) {
      Rational dn = boundary_modified(*fam_h, mc, n).d2_mod;
      for (int k = n; k <= nmax && ok; ++k) {
        Rational acc(0);
        for (long s = 0; s <= N; ++s)
          acc += eval_krall(*fam_h, mc, n, s) * eval_krall(*fam_h, mc, k, s) * fam_h->mass(s);
        acc += mc.A * eval_krall(*fam_h, mc, n, 0) * eval_krall(*fam_h, mc, k, 0);
        acc += mc.B * eval_krall(*fam_h, mc, n, N) * eval_krall(*fam_h, mc, k, N);
        if (acc != ((n == k) ? dn : Rational(0))) ok = false;
      }
    }
    rep.add_exact("qhahn-krall-orthogonality", "n<=" + std::to_string(nmax), ok);
  }
  // the limit sequence
  std::vector<double> devs;
  bool zero_order_exact = true;
  for (const Rational& eps : epsilons) {
    RacahParams::Free f;
    f.alpha = target.nu();
    f.beta = target.mu();
    f.delta = eps;
    RacahParams racah(target.v(), N, Truncation::GammaQ, f);
    auto fam_r = make_racah_family(racah);
    double worst = 0.0;
    auto upd = [&](const Rational& a, const Rational& b) {
      worst = std::max(worst, rel_dev(a, b));
    };
    for (int n = 0; n <= nmax; ++n) {
      for (long s = 0; s <= N; ++s) upd(fam_r->eval(n, s), fam_h->eval(n, s));
      if (fam_r->eval(0, 0) != fam_h->eval(0, 0)) zero_order_exact = false;
      upd(fam_r->d2(n), fam_h->d2(n));
      upd(racah.boundary0(n), fam_h->eval(n, 0));   // C_n = 1
      upd(racah.boundaryN(n), fam_h->eval(n, N));
    }
    for (long s1 = 0; s1 <= N; ++s1)
      for (long s2 = s1; s2 <= N; ++s2)
        upd(kernel_sum(*fam_r, nmax - 1, s1, s2), kernel_sum(*fam_h, nmax - 1, s1, s2));
    for (int n = 1; n <= nmax; ++n)
      for (long s = 0; s <= N; ++s)
        upd(eval_krall(*fam_r, mc, n, s), eval_krall(*fam_h, mc, n, s));
    devs.push_back(worst);
  }
  bool decreasing = true;
  for (size_t i = 0; i + 1 < devs.size(); ++i)
    if (!(devs[i + 1] < devs[i])) decreasing = false;
  std::ostringstream note;
  note << "deviations:";
  for (double d : devs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3e", d);
    note << buf;
  }
  rep.add_numeric("qdelta-deviation-strictly-decreasing", "eps sequence", decreasing,
                  devs.empty() ? 0.0 : devs.back(), note.str());
  rep.add_numeric("qdelta-final-below-threshold", "last eps",
                  !devs.empty() && devs.back() < final_threshold, devs.empty() ? 0.0 : devs.back());
  rep.add_exact("qdelta-n0-exact", "n=0", zero_order_exact, "degree-0 values agree at every eps");
  return rep;
}

VerificationReport limit_q_to_one_check(const RacahClassicalParams& target, double A, double B,
                                        int nmax, const std::vector<int>& ks, double oracle_tol) {
  VerificationReport rep;
  rep.suite = "limits/q-to-one";
  const int N = target.N;
  auto fam_c = make_classical_racah_family(target);
  MassConfig<double> mcd{A, B};

  std::vector<double> devs;
  bool zero_order_ok = true;
  for (int k : ks) {
    double qq = 1.0 - std::pow(2.0, -k);
    RacahCore<double> core;
    core.q = qq;
    core.N = N;
    core.trunc = Truncation::GammaQ;
    core.alpha = std::pow(qq, target.alpha);
    core.beta = std::pow(qq, target.beta);
    core.gamma = std::pow(qq, target.gamma);
    core.delta = std::pow(qq, target.delta);
    std::vector<double> masses = core.normalized_masses();
    TabulatedFamily<double> fam_q(
        N, [&](long s) { return core.x(s); }, [&](int n, long s) { return core.eval_hyper(n, s); },
        [&](int n) { return core.d2(n); }, [&](long s) { return masses[static_cast<size_t>(s)]; });
    double scale = (1.0 - qq) * (1.0 - qq);  // (1-q)^2 per degree
    double worst = 0.0;
    auto upd = [&](double a, double b) {
      double d = std::abs(a - b) / std::max(1.0, std::abs(b));
      worst = std::max(worst, d);
    };
    for (int n = 0; n <= nmax; ++n) {
      double sn = std::pow(scale, -n);
      for (long s = 0; s <= N; ++s) {
        upd(fam_q.eval(n, s) * sn, fam_c->eval(n, s));
        upd(eval_krall(fam_q, mcd, n, s) * sn, eval_krall(*fam_c, mcd, n, s));
        if (n == 0 && fam_q.eval(0, s) != 1.0) zero_order_ok = false;
      }
    }
    devs.push_back(worst);
  }
  bool decreasing = true;
  for (size_t i = 0; i + 1 < devs.size(); ++i)
    if (!(devs[i + 1] < devs[i])) decreasing = false;
  std::ostringstream note;
  note << "deviations:";
  for (double d : devs) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " %.3e", d);
    note << buf;
  }
  rep.add_numeric("q1-deviation-strictly-decreasing", "q = 1 - 2^{-k}", decreasing,
                  devs.empty() ? 0.0 : devs.back(), note.str());
  rep.add_exact("q1-n0-exact", "n=0", zero_order_ok);

  // classical Krall family vs floating Gram-Schmidt oracle
  {
    DiscreteMeasure<double> mu;
    for (long s = 0; s <= N; ++s) {
      mu.nodes.push_back(fam_c->x(s));
      mu.weights.push_back(fam_c->mass(s));
    }
    mu.masses.push_back({0, A});
    mu.masses.push_back({N, B});
    OracleTable<double> t = gram_schmidt_monic(mu, nmax);
    double worst = 0.0;
    for (int n = 0; n <= nmax; ++n)
      for (long s = 0; s <= N; ++s) {
        double a = t.eval(n, fam_c->x(s));
        double b = eval_krall(*fam_c, mcd, n, s);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(b)));
      }
    rep.add_numeric("classical-krall-vs-floating-oracle", "n<=" + std::to_string(nmax),
                    worst < oracle_tol, worst);
  }
  return rep;
}

}  // namespace qrk
