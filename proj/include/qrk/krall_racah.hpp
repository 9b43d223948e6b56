#pragma once

/**
 * @file krall_racah.hpp
 * @brief q-Racah-specific Krall machinery: the tabulated family adapter,
 *        the compact-kernel representation, the Theta/Xi two-point
 *        form, the 5phi4 basic-series form, the direct two-4phi3 form and
 *        the one-mass (B = 0) specialization.
 */

#include <memory>
#include <optional>

#include "qrk/krall.hpp"
#include "qrk/racah.hpp"

namespace qrk {

/// Family<Rational> view of a RacahParams (eager evaluation tables).
std::shared_ptr<const Family<Rational>> make_racah_family(const RacahParams& p);

using MassConfigQ = MassConfig<Rational>;

/// 1st representation formula coefficients (two-mass):
///   R~_n = R_n + Abar R_{n-1} + Bbar grad R_{n-1}/grad x + Cbar Delta R_{n-1}/Delta x.
struct Rep1Coeffs {
  Rational A_bar, B_bar, C_bar;
};
Rep1Coeffs rep1_coeffs(const RacahParams& p, const Family<Rational>& fam, const MassConfigQ& mc,
                       int n, long s);

/// R~_n(s) via the 1st representation formula (compact endpoint kernels).
/// Errors on a zero lattice increment at s (fall back to eval_krall).
Rational eval_rep1(const RacahParams& p, const Family<Rational>& fam, const MassConfigQ& mc,
                   int n, long s);

/// phi(s) R~_n(s) via the Theta/Xi two-point form
///   a(s;n) R_n(s) + b(s;n) R_n(s+1), a = A + B Theta, b = B Xi.
Rational eval_rep3(const RacahParams& p, const Family<Rational>& fam, const MassConfigQ& mc,
                   int n, long s);

/// phi(s) R~_n(s) as D_n(s) * 5phi4. Returns nullopt when beta_1 is
/// degenerate (zero numerator or denominator of q^{beta_1}, or a lower
/// parameter of the 5phi4 hitting a pole); callers fall back to eval_rep2.
std::optional<Rational> series_rep(const RacahParams& p, const Family<Rational>& fam,
                                   const MassConfigQ& mc, int n, long s);

/// phi(s) R~_n(s) as A(s,n) Lambda_n 4phi3(n) + B(s,n) Lambda_{n-1} 4phi3(n-1)
/// with Lambda_n = (alpha q, beta delta q, gamma q;q)_n/(alpha beta q^{n+1};q)_n.
Rational series_rep_direct(const RacahParams& p, const Family<Rational>& fam,
                           const MassConfigQ& mc, int n, long s);

/// One-mass (B = 0) specialization, written in its own reduced form with
/// phi_1(s) = (q^{-s} - 1)(1 - delta gamma q^{s+1}) = x(s) - x(0).
Rational one_mass_phi(const RacahParams& p, long s);
/// R~_n(0) = R_n(0) / (1 + A K_{n-1}(0,0)).
Rational one_mass_boundary0(const Family<Rational>& fam, const Rational& A, int n);
/// phi_1(s) R~_n(s) = A(s,n) R_n(s) + B(s,n) R_{n-1}(s) with the one-mass
/// coefficient pair.
Rational one_mass_rep2(const RacahParams& p, const Family<Rational>& fam, const Rational& A,
                       int n, long s);
/// phi_1(s) R~_n(s) = a(s;n) R_n(s) + b(s;n) R_n(s+1).
Rational one_mass_rep3(const RacahParams& p, const Family<Rational>& fam, const Rational& A,
                       int n, long s);

}  // namespace qrk
