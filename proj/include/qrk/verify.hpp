#pragma once

/**
 * @file verify.hpp
 * @brief Exact identity verification suites. Each suite maps onto the
 *        invariants of one part of the library; `verify_suite` dispatches
 *        by name (orthogonality, kernels, reps, ttrr, sode, limits,
 *        oracle, all).
 */

#include "qrk/config.hpp"
#include "qrk/krall_racah.hpp"
#include "qrk/report.hpp"

namespace qrk {

VerificationReport verify_orthogonality(const RacahParams& p, const MassConfigQ& mc, int nmax);
VerificationReport verify_kernels(const RacahParams& p, const MassConfigQ& mc, int nmax);
VerificationReport verify_reps(const RacahParams& p, const MassConfigQ& mc, int nmax);
VerificationReport verify_ttrr(const RacahParams& p, const MassConfigQ& mc, int nmax);
VerificationReport verify_sode(const RacahParams& p, int nmax);
VerificationReport verify_oracle(const RacahParams& p, const MassConfigQ& mc, int nmax);

/// Limit-family checks; uses the config's dual/qhahn/classical blocks
/// (suites for absent blocks are skipped with a note).
VerificationReport verify_limits(const Config& cfg, int nmax);

/// Dispatch by suite name; "all" concatenates every suite.
VerificationReport verify_suite(const std::string& name, const Config& cfg, int nmax);

}  // namespace qrk
