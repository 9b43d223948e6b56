#pragma once

/**
 * @file limits.hpp
 * @brief The three limit families of the q-Racah-Krall polynomials:
 *        dual q-Hahn (beta -> 0, exact), q-Hahn (q^delta -> 0, numeric
 *        decay harness) and classical Racah (q -> 1, floating harness).
 */

#include <vector>

#include "qrk/dual_qhahn.hpp"
#include "qrk/krall_racah.hpp"
#include "qrk/qhahn.hpp"
#include "qrk/racah_classical.hpp"
#include "qrk/report.hpp"

namespace qrk {

/// beta -> 0 is a removable limit: exact substitution beta = 0 with
/// alpha q = q^{-N} held fixed must reproduce the dual q-Hahn family and
/// its Krall modification exactly.
VerificationReport limit_beta_to_zero_check(const DualQHahnParams& dual, const MassConfigQ& mc,
                                            int nmax);

/// q^delta -> 0: the q-Racah family at (alpha = nu, beta = mu,
/// gamma q = q^{-N}, delta = eps) is evaluated exactly per epsilon and
/// compared against the q-Hahn targets (values, boundary values with
/// C_n = 1, norms, kernels, Krall evaluations). Relative deviations must
/// decrease strictly along the epsilon sequence and end below
/// `final_threshold`.
VerificationReport limit_qdelta_to_zero_check(const QHahnParams& target, const MassConfigQ& mc,
                                              int nmax, const std::vector<Rational>& epsilons,
                                              double final_threshold);

/// q -> 1 along q = 1 - 2^{-k}: floating comparison of
/// R_n^q(x_q(s))/(1-q)^{2n} (and its Krall modification) against the
/// classical monic Racah(-Krall) values; deviations must decrease.
/// Also checks the classical Krall family against a floating
/// Gram-Schmidt oracle to `oracle_tol`.
VerificationReport limit_q_to_one_check(const RacahClassicalParams& target, double A, double B,
                                        int nmax, const std::vector<int>& ks, double oracle_tol);

}  // namespace qrk
