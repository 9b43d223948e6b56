#pragma once

/**
 * @file kernels.hpp
 * @brief Reproducing kernels: definition-by-sum, Christoffel-Darboux closed
 *        form, and the compact endpoint forms for the q-Racah family.
 */

#include "qrk/family.hpp"
#include "qrk/racah.hpp"

namespace qrk {

/// K_m(s,t) = sum_{k<=m} R_k(s) R_k(t) / d_k^2. m = -1 gives the empty sum.
template <class K>
K kernel_sum(const Family<K>& fam, int m, long s, long t) {
  K total(0);
  for (int k = 0; k <= m; ++k) total += fam.eval(k, s) * fam.eval(k, t) / fam.d2(k);
  return total;
}

/// Christoffel-Darboux closed form at distinct lattice points; alpha_n = 1
/// for monic polynomials.
template <class K>
K kernel_cd(const Family<K>& fam, int n, long s1, long s2) {
  K dx = fam.x(s1) - fam.x(s2);
  if (detail::scalar_is_zero(dx))
    throw std::domain_error("kernel_cd: coincident abscissae (use kernel_sum)");
  return (fam.eval(n + 1, s1) * fam.eval(n, s2) - fam.eval(n + 1, s2) * fam.eval(n, s1)) /
         (fam.d2(n) * dx);
}

/**
 * Coefficient functions of the two-term compact endpoint kernels
 *   K_{n-1}(s,0) = kappa0 R_{n-1}(s) + kappa0_bar * grad R_{n-1}(s)/grad x(s),
 *   K_{n-1}(s,N) = kappaN R_{n-1}(s) + kappaN_bar * Delta R_{n-1}(s)/Delta x(s).
 *
 * Closed forms: the structure relations
 *   sigma(s) grad R_m/grad x = abar_m R_{m+1} + bbar_m(s) R_m,
 *   Phi(s) Delta R_m/Delta x = abar_m R_{m+1} + bhat_m(s) R_m   (m = n-1)
 * inserted into the Christoffel-Darboux form, with the removable factors
 * at s = 0 and s = N cancelled so every grid point evaluates directly.
 */
Rational kappa0(const RacahParams& p, long s, int n);
Rational kappa0_bar(const RacahParams& p, long s, int n);
Rational kappaN(const RacahParams& p, long s, int n);
Rational kappaN_bar(const RacahParams& p, long s, int n);

/// K_{n-1}(s,0) via the compact form (1 <= n <= N).
Rational kernel_at0_compact(const RacahParams& p, int n, long s);
/// K_{n-1}(s,N) via the compact form (1 <= n <= N).
Rational kernel_atN_compact(const RacahParams& p, int n, long s);

}  // namespace qrk
