#include "qrk/racah_classical.hpp"

#include <cmath>

#include "qrk/qseries.hpp"

namespace qrk {

double classical_lattice(const RacahClassicalParams& p, long x) {
  return static_cast<double>(x) * (x + p.gamma + p.delta + 1.0);
}

double classical_racah_eval(const RacahClassicalParams& p, int n, long x) {
  double pref = pochhammer(p.alpha + 1, n) * pochhammer(p.beta + p.delta + 1, n) *
                pochhammer(p.gamma + 1, n) / pochhammer(p.alpha + p.beta + n + 1, n);
  double total = 0.0, term = 1.0;
  for (int k = 0; k <= n; ++k) {
    total += term;
    if (k == n) break;
    double num = (-n + k) * (n + p.alpha + p.beta + 1 + k) * (-static_cast<double>(x) + k) *
                 (x + p.gamma + p.delta + 1 + k);
    double den = (p.alpha + 1 + k) * (p.beta + p.delta + 1 + k) * (p.gamma + 1 + k) * (k + 1);
    term *= num / den;
  }
  return pref * total;
}

std::vector<double> classical_racah_masses(const RacahClassicalParams& p) {
  std::vector<double> raw(p.N + 1);
  double total = 0.0;
  double gd1 = p.gamma + p.delta + 1;
  for (int x = 0; x <= p.N; ++x) {
    double fact = 1.0;
    for (int i = 2; i <= x; ++i) fact *= i;
    raw[x] = pochhammer(p.alpha + 1, x) * pochhammer(p.beta + p.delta + 1, x) *
             pochhammer(p.gamma + 1, x) * pochhammer(gd1, x) /
             (pochhammer(-p.alpha + p.gamma + p.delta + 1, x) * pochhammer(-p.beta + p.gamma + 1, x) *
              pochhammer(p.delta + 1, x) * fact) *
             (gd1 + 2 * x) / gd1;
    total += raw[x];
  }
  for (auto& w : raw) w /= total;
  return raw;
}

std::shared_ptr<const Family<double>> make_classical_racah_family(const RacahClassicalParams& p) {
  std::vector<double> masses = classical_racah_masses(p);
  std::vector<std::vector<double>> evals(p.N + 1);
  std::vector<double> d2(p.N + 1, 0.0);
  for (int n = 0; n <= p.N; ++n) {
    for (int s = 0; s <= p.N; ++s) d2[n] += classical_racah_eval(p, n, s) * classical_racah_eval(p, n, s) * masses[s];
  }
  RacahClassicalParams copy = p;
  return std::make_shared<TabulatedFamily<double>>(
      p.N, [&](long s) { return classical_lattice(copy, s); },
      [&](int n, long s) { return classical_racah_eval(copy, n, s); },
      [&](int n) { return d2[n]; },
      [&](long s) { return masses[static_cast<size_t>(s)]; });
}

}  // namespace qrk
