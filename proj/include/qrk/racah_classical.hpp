#pragma once

/**
 * @file racah_classical.hpp
 * @brief Classical monic Racah polynomials on the quadratic lattice
 *        lambda(x) = x(x + gamma + delta + 1), evaluated in floating point.
 *        Used only by the q -> 1 limit harness.
 */

#include <memory>
#include <vector>

#include "qrk/family.hpp"

namespace qrk {

struct RacahClassicalParams {
  double alpha = 0, beta = 0, gamma = 0, delta = 0;
  int N = 0;
};

/// lambda(x) = x(x + gamma + delta + 1).
double classical_lattice(const RacahClassicalParams& p, long x);

/// Monic classical Racah via the 4F3 with prefactor
/// (alpha+1)_n (beta+delta+1)_n (gamma+1)_n / (alpha+beta+n+1)_n.
double classical_racah_eval(const RacahClassicalParams& p, int n, long x);

/// Probability point masses of the Racah orthogonality measure.
std::vector<double> classical_racah_masses(const RacahClassicalParams& p);

std::shared_ptr<const Family<double>> make_classical_racah_family(const RacahClassicalParams& p);

}  // namespace qrk
