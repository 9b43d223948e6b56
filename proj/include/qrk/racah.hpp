#pragma once

/**
 * @file racah.hpp
 * @brief The standard monic q-Racah family on x(s) = q^{-s} + delta*gamma*q^{s+1}.
 *
 * RacahCore<K> carries the parameter tuple and the family data that are
 * rational in q alone (evaluation, norms, recurrence coefficients, weights,
 * boundary values). It is instantiated with K = Rational for all exact work
 * and with K = double inside the q -> 1 limit harness.
 *
 * RacahParams adds the exact lattice (via v = q^{1/2}), admissibility
 * validation, and everything involving half-integer powers of q:
 * the difference-equation data, the structure-relation rows, and the
 * Theta/Xi shift identity.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrk/lattice.hpp"
#include "qrk/qseries.hpp"

namespace qrk {

enum class Truncation { AlphaQ, BetaDeltaQ, GammaQ };

std::string to_string(Truncation t);

namespace detail {
template <class K>
K kpow(const K& x, long e);
template <>
inline Rational kpow<Rational>(const Rational& x, long e) { return qrk::pow(x, e); }
template <>
inline double kpow<double>(const double& x, long e) { return std::pow(x, static_cast<double>(e)); }
}  // namespace detail

template <class K>
struct RacahCore {
  K q, alpha, beta, gamma, delta;
  int N = 0;
  Truncation trunc = Truncation::GammaQ;

  K dg() const { return delta * gamma; }

  K x(long s) const { return detail::kpow(q, -s) + dg() * detail::kpow(q, s + 1); }

  /// Monic R_n at the lattice point s (any integer s), per the defining
  /// 4phi3 with prefactor (alpha q, beta delta q, gamma q;q)_n / (alpha beta q^{n+1};q)_n.
  K eval_hyper(int n, long s) const {
    K pref_den = qpochhammer(alpha * beta * detail::kpow(q, n + 1), q, n);
    if (detail::scalar_is_zero(pref_den))
      throw std::domain_error("eval_hyper: (alpha beta q^{n+1};q)_n = 0 (inadmissible parameters)");
    K pref = qpochhammer({alpha * q, beta * delta * q, gamma * q}, q, n) / pref_den;
    HyperSpec<K> h{{detail::kpow(q, -n), alpha * beta * detail::kpow(q, n + 1), detail::kpow(q, -s),
                    dg() * detail::kpow(q, s + 1)},
                   {alpha * q, beta * delta * q, gamma * q},
                   q,
                   q,
                   n + 1};
    return pref * basic_hyper_terminating(h);
  }

  /// Squared norm d_n^2, closed form.
  K d2(int n) const {
    K ab = alpha * beta;
    K lead = (K(1) - ab * q) * detail::kpow(dg() * q, n) / (K(1) - ab * detail::kpow(q, 2 * n + 1));
    K num = qpochhammer({alpha * q, beta * delta * q, gamma * q, q, q * ab / gamma, alpha / delta * q, beta * q}, q, n);
    K den = qpochhammer(ab * q, q, n);
    K d = qpochhammer(ab * detail::kpow(q, n + 1), q, n);
    return lead * num / (den * d * d);
  }

  /// Monic TTRR coefficient beta_n; the n = 0 case drops the
  /// second fraction, whose (1 - q^n) numerator vanishes.
  K beta_n(int n) const {
    K ab = alpha * beta;
    K t1 = (K(1) - alpha * detail::kpow(q, n + 1)) * (K(1) - ab * detail::kpow(q, n + 1)) *
           (K(1) - beta * delta * detail::kpow(q, n + 1)) * (K(1) - gamma * detail::kpow(q, n + 1)) /
           ((K(1) - ab * detail::kpow(q, 2 * n + 1)) * (K(1) - ab * detail::kpow(q, 2 * n + 2)));
    K t2(0);
    if (n >= 1) {
      t2 = q * (K(1) - detail::kpow(q, n)) * (K(1) - beta * detail::kpow(q, n)) *
           (gamma - ab * detail::kpow(q, n)) * (delta - alpha * detail::kpow(q, n)) /
           ((K(1) - ab * detail::kpow(q, 2 * n)) * (K(1) - ab * detail::kpow(q, 2 * n + 1)));
    }
    return K(1) + dg() * q - t1 - t2;
  }

  /// Monic TTRR coefficient gamma_n (product form, equal to d_n^2/d_{n-1}^2);
  /// gamma_0 = 0.
  K gamma_n(int n) const {
    if (n == 0) return K(0);
    K ab = alpha * beta;
    K f1 = (K(1) - alpha * detail::kpow(q, n)) * (K(1) - ab * detail::kpow(q, n)) *
           (K(1) - beta * delta * detail::kpow(q, n)) * (K(1) - gamma * detail::kpow(q, n)) /
           ((K(1) - ab * detail::kpow(q, 2 * n - 1)) * (K(1) - ab * detail::kpow(q, 2 * n)));
    K f2 = q * (K(1) - detail::kpow(q, n)) * (K(1) - beta * detail::kpow(q, n)) *
           (gamma - ab * detail::kpow(q, n)) * (delta - alpha * detail::kpow(q, n)) /
           ((K(1) - ab * detail::kpow(q, 2 * n)) * (K(1) - ab * detail::kpow(q, 2 * n + 1)));
    return f1 * f2;
  }

  /// R_n via the monic recurrence R_{k+1} = (x - beta_k) R_k - gamma_k R_{k-1}.
  K eval_ttrr(int n, const K& xval) const {
    K rm(0), r0(1);
    for (int k = 0; k < n; ++k) {
      K r1 = (xval - beta_n(k)) * r0 - (k > 0 ? gamma_n(k) * rm : K(0));
      rm = r0;
      r0 = r1;
    }
    return r0;
  }

  K boundary0(int n) const {
    K den = qpochhammer(alpha * beta * detail::kpow(q, n + 1), q, n);
    return qpochhammer({alpha * q, beta * delta * q, gamma * q}, q, n) / den;
  }

  K boundaryN(int n) const {
    K qmN = detail::kpow(q, -N);
    switch (trunc) {
      case Truncation::AlphaQ:
        return detail::kpow(dg() * detail::kpow(q, N + 1), n) *
               qpochhammer({qmN, beta / gamma * qmN, qmN / delta}, q, n) /
               qpochhammer(beta * detail::kpow(q, n - N), q, n);
      case Truncation::GammaQ:
        return detail::kpow(delta, n) * qpochhammer({qmN, beta * q, alpha * q / delta}, q, n) /
               qpochhammer(alpha * beta * detail::kpow(q, n + 1), q, n);
      case Truncation::BetaDeltaQ:
        return detail::kpow(gamma / beta, n) *
               qpochhammer({qmN, beta * q, alpha * qmN / (delta * gamma)}, q, n) /
               qpochhammer(alpha * beta * detail::kpow(q, n + 1), q, n);
    }
    throw std::logic_error("boundaryN: bad truncation");
  }

  /// rho_hat(s): the s-dependent part of the weight.
  K rho_hat(long s) const {
    if (detail::scalar_is_zero(alpha) || detail::scalar_is_zero(beta))
      throw std::domain_error("rho_hat: needs alpha*beta != 0");
    K num = qpochhammer({dg() * q, alpha * q, beta * delta * q, gamma * q}, q, static_cast<int>(s));
    K den = qpochhammer({q, dg() * q / alpha, gamma * q / beta, delta * q}, q, static_cast<int>(s));
    if (detail::scalar_is_zero(den)) throw std::domain_error("rho_hat: zero denominator Pochhammer");
    return detail::kpow(alpha * beta, -s) * num / den;
  }

  /// Probability-normalized point masses m(s) = rho(s) * Delta x(s-1/2),
  /// s = 0..N. The (q^{-1/2} - q^{1/2}) factor cancels in the
  /// normalization, so the masses are rational in q alone.
  std::vector<K> normalized_masses() const {
    std::vector<K> raw(N + 1);
    K total(0);
    for (int s = 0; s <= N; ++s) {
      raw[s] = rho_hat(s) * detail::kpow(q, -s) * (K(1) - dg() * detail::kpow(q, 2 * s + 1));
      total += raw[s];
    }
    if (detail::scalar_is_zero(total)) throw std::domain_error("normalized_masses: zero total mass");
    for (auto& m : raw) m /= total;
    return raw;
  }
};

/// Which difference-equation convention a residual is evaluated under.
enum class SodeConvention {
  TauForward,   ///< sigma * D[grad R / grad x] + tau * (Delta R / Delta x) + lambda R
  TauSymmetric  ///< sigma * D[grad R / grad x] + (tau/2) * (Delta R/Delta x + grad R/grad x) + lambda R
};

/// Validated exact q-Racah parameter set (rational scalars, lattice via v).
class RacahParams {
 public:
  /// `free` supplies the non-truncated parameters: for GammaQ {alpha, beta,
  /// delta}; for AlphaQ {beta, gamma, delta} (alpha derived); for BetaDeltaQ
  /// {alpha, gamma, delta} (beta = q^{-N-1}/delta derived).
  struct Free {
    std::optional<Rational> alpha, beta, gamma, delta;
  };
  RacahParams(const Rational& v, int N, Truncation trunc, const Free& free);

  const QBase& base() const { return lat_.base(); }
  const Lattice& lattice() const { return lat_; }
  const RacahCore<Rational>& core() const { return core_; }
  const Rational& q() const { return core_.q; }
  const Rational& v() const { return lat_.base().v; }
  const Rational& alpha() const { return core_.alpha; }
  const Rational& beta() const { return core_.beta; }
  const Rational& gamma() const { return core_.gamma; }
  const Rational& delta() const { return core_.delta; }
  Rational dg() const { return core_.dg(); }
  int N() const { return core_.N; }
  Truncation truncation() const { return core_.trunc; }

  Rational x(long s) const { return lat_.xi(s); }
  Rational eval_hyper(int n, long s) const { return core_.eval_hyper(n, s); }
  Rational eval_ttrr(int n, const Rational& xval) const { return core_.eval_ttrr(n, xval); }
  Rational d2(int n) const { return core_.d2(n); }
  Rational beta_n(int n) const { return core_.beta_n(n); }
  Rational gamma_n(int n) const { return core_.gamma_n(n); }
  Rational boundary0(int n) const { return core_.boundary0(n); }
  Rational boundaryN(int n) const { return core_.boundaryN(n); }

  /// Normalized weight: weight(s) = C * rho_hat(s) with
  /// sum_s weight(s) * Delta x(s-1/2) = 1 exactly. Errors if the total
  /// raw mass is not positive.
  Rational weight(long s) const;
  /// The exact normalization constant C.
  Rational weight_normalization() const;
  /// Exact closed form of C via the terminating very-well-poised 6phi5
  /// summation (GammaQ truncation only).
  Rational weight_normalization_closed_form() const;
  /// Relative discrepancy between exact C and the floating evaluation of
  /// the infinite-product form of the prefactor (which carries a
  /// 1/(1 - gamma delta q) factor; see the verification report).
  double weight_prefactor_check() const;

  // Difference-equation data (exact; these carry q^{1/2}).
  Rational sigma_s(long s) const;
  Rational Phi_s(long s) const;
  Rational tau_s(long s) const;
  Rational lambda_n(int n) const;
  // Structure-relation rows.
  Rational tau_n_s(int n, long s) const;
  Rational alpha_bar(int n) const;
  Rational alpha_hat(int n) const { return alpha_bar(n); }
  Rational beta_bar(int n, long s) const;
  Rational beta_hat(int n, long s) const;

  /// Residual of sigma * Delta/Delta x(s-1/2)[grad R_n/grad x] + tau-term + lambda_n R_n
  /// at interior s under the chosen convention.
  Rational sode_residual(int n, long s, SodeConvention conv) const;
  /// Evaluates both conventions over the interior grid; returns the one
  /// with identically zero residual, with a count of zero residuals each.
  struct SodeProbe {
    bool forward_zero = false;
    bool symmetric_zero = false;
    bool phi_relation_zero = false;  // Phi(s) - sigma(s) - tau(s) Dx(s-1/2) == 0
  };
  SodeProbe sode_probe(int nmax) const;

  /// Theta(s,n) and Xi(s,n) of the shift identity
  /// R_{n-1}(s) = Theta(s,n) R_n(s) + Xi(s,n) R_n(s+1).
  Rational theta(long s, int n) const;
  Rational xi(long s, int n) const;

 private:
  RacahCore<Rational> core_;
  Lattice lat_;
};

}  // namespace qrk
