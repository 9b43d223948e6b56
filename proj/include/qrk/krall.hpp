#pragma once

/**
 * @file krall.hpp
 * @brief The Krall modification layer: two endpoint masses added to a base
 *        family. Generic over Family<K>; kernels are taken from
 *        kernel_sum, the unconditionally correct path.
 */

#include <string>

#include "qrk/family.hpp"
#include "qrk/kernels.hpp"

namespace qrk {

template <class K>
struct MassConfig {
  K A{};
  K B{};
};

template <class K>
struct KrallBoundary {
  K r0;         // R~_n(0)
  K rN;         // R~_n(N)
  K kappa_det;  // kappa_{n-1}(0,N)
  K d2_mod;     // d~_n^2
};

/// kappa_m(s,t) = 1 + A K_m(s,s) + B K_m(t,t) + AB {K_m(s,s)K_m(t,t) - K_m(s,t)^2}.
template <class K>
K kappa_det(const Family<K>& fam, const MassConfig<K>& mc, int m, long s, long t) {
  K kss = kernel_sum(fam, m, s, s);
  K ktt = kernel_sum(fam, m, t, t);
  K kst = kernel_sum(fam, m, s, t);
  return K(1) + mc.A * kss + mc.B * ktt + mc.A * mc.B * (kss * ktt - kst * kst);
}

/// Modified boundary values, existence determinant and modified norm at
/// degree n. Errors when kappa_{n-1}(0,N) = 0 (the family does not exist
/// at this degree).
template <class K>
KrallBoundary<K> boundary_modified(const Family<K>& fam, const MassConfig<K>& mc, int n) {
  const long N = fam.N();
  K k00 = kernel_sum(fam, n - 1, 0, 0);
  K kNN = kernel_sum(fam, n - 1, N, N);
  K k0N = kernel_sum(fam, n - 1, 0, N);
  K kap = K(1) + mc.A * k00 + mc.B * kNN + mc.A * mc.B * (k00 * kNN - k0N * k0N);
  if (detail::scalar_is_zero(kap))
    throw std::domain_error("boundary_modified: kappa_{n-1}(0,N) = 0, family does not exist at degree " +
                            std::to_string(n));
  K r0b = fam.boundary_0(n);
  K rNb = fam.boundary_N(n);
  KrallBoundary<K> out;
  out.kappa_det = kap;
  out.r0 = ((K(1) + mc.B * kNN) * r0b - mc.B * k0N * rNb) / kap;
  out.rN = (-mc.A * k0N * r0b + (K(1) + mc.A * k00) * rNb) / kap;
  out.d2_mod = fam.d2(n) + (mc.A * r0b * r0b * (K(1) + mc.B * kNN) +
                            mc.B * rNb * rNb * (K(1) + mc.A * k00) -
                            K(2) * mc.A * mc.B * r0b * rNb * k0N) /
                               kap;
  return out;
}

/// Canonical evaluator (the kernel representation): defined at every
/// lattice point including s = 0, N.
template <class K>
K eval_krall(const Family<K>& fam, const MassConfig<K>& mc, int n, long s) {
  if (n == 0) return K(1);
  KrallBoundary<K> b = boundary_modified(fam, mc, n);
  return fam.eval(n, s) - mc.A * b.r0 * kernel_sum(fam, n - 1, s, 0) -
         mc.B * b.rN * kernel_sum(fam, n - 1, s, fam.N());
}

/**
 * Coefficients of the 2nd representation formula
 *   phi(s) R~_n(s) = A(s,n) R_n(s) + B(s,n) R_{n-1}(s)
 * with phi(s) = (x(s) - x(0))(x(s) - x(N)); the coefficient functions are
 * linear combinations of x(s)-x(N) and x(s)-x(0).
 */
template <class K>
struct Rep2Coeffs {
  K x0, xN;
  K a_r0, b_rN;  // A R~_n(0), B R~_n(N)
  K rn0_base, rnN_base, rm0_base, rmN_base;
  K d2m;

  K phi(const Family<K>& fam, long s) const {
    return (fam.x(s) - x0) * (fam.x(s) - xN);
  }
  K A_sn(const Family<K>& fam, long s) const {
    return phi(fam, s) -
           (a_r0 * rm0_base * (fam.x(s) - xN) + b_rN * rmN_base * (fam.x(s) - x0)) / d2m;
  }
  K B_sn(const Family<K>& fam, long s) const {
    return (a_r0 * rn0_base * (fam.x(s) - xN) + b_rN * rnN_base * (fam.x(s) - x0)) / d2m;
  }
};

template <class K>
Rep2Coeffs<K> rep2_coeffs(const Family<K>& fam, const MassConfig<K>& mc, int n) {
  KrallBoundary<K> b = boundary_modified(fam, mc, n);
  Rep2Coeffs<K> c;
  c.x0 = fam.x(0);
  c.xN = fam.x(fam.N());
  c.a_r0 = mc.A * b.r0;
  c.b_rN = mc.B * b.rN;
  c.rn0_base = fam.boundary_0(n);
  c.rnN_base = fam.boundary_N(n);
  c.rm0_base = fam.boundary_0(n - 1);
  c.rmN_base = fam.boundary_N(n - 1);
  c.d2m = fam.d2(n - 1);
  return c;
}

/// phi(s) * R~_n(s) via the 2nd representation formula (n >= 1).
template <class K>
K eval_rep2(const Family<K>& fam, const MassConfig<K>& mc, int n, long s) {
  Rep2Coeffs<K> c = rep2_coeffs(fam, mc, n);
  return c.A_sn(fam, s) * fam.eval(n, s) + c.B_sn(fam, s) * fam.eval(n - 1, s);
}

template <class K>
struct TTRRmod {
  K beta_mod;
  K gamma_mod;
  K delta_n;    // Delta_n
  K delta_nm1;  // Delta_{n-1}
};

/// Modified three-term recurrence coefficients at degree n
/// (x R~_n = R~_{n+1} + beta~_n R~_n + gamma~_n R~_{n-1}); needs n+1 <= N.
template <class K>
TTRRmod<K> ttrr_modified(const Family<K>& fam, const MassConfig<K>& mc,
                         const K& beta_base, const K& gamma_base, int n) {
  auto Delta = [&](int k) -> K {
    if (k < 0) return K(0);
    KrallBoundary<K> b = boundary_modified(fam, mc, k);
    return mc.A * b.r0 * fam.boundary_0(k) / fam.d2(k) +
           mc.B * b.rN * fam.boundary_N(k) / fam.d2(k);
  };
  KrallBoundary<K> bn = boundary_modified(fam, mc, n);
  KrallBoundary<K> bn1 = boundary_modified(fam, mc, n + 1);
  TTRRmod<K> out;
  K term_a = n >= 1 ? bn.r0 * fam.boundary_0(n - 1) / fam.d2(n - 1) : K(0);
  K term_b = n >= 1 ? bn.rN * fam.boundary_N(n - 1) / fam.d2(n - 1) : K(0);
  out.beta_mod = beta_base -
                 mc.A * (term_a - bn1.r0 * fam.boundary_0(n) / fam.d2(n)) -
                 mc.B * (term_b - bn1.rN * fam.boundary_N(n) / fam.d2(n));
  out.delta_n = Delta(n);
  out.delta_nm1 = Delta(n - 1);
  K denom = K(1) + out.delta_nm1;
  if (detail::scalar_is_zero(denom))
    throw std::domain_error("ttrr_modified: 1 + Delta_{n-1} = 0 (degenerate)");
  out.gamma_mod = gamma_base * (K(1) + out.delta_n) / denom;
  return out;
}

/// Existence guard over all degrees <= nmax: kappa_{n-1}(0,N) != 0.
template <class K>
bool krall_exists(const Family<K>& fam, const MassConfig<K>& mc, int nmax) {
  for (int n = 1; n <= nmax; ++n) {
    K kap = kappa_det(fam, mc, n - 1, 0, fam.N());
    if (detail::scalar_is_zero(kap)) return false;
  }
  return true;
}

}  // namespace qrk
