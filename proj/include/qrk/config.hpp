#pragma once

/**
 * @file config.hpp
 * @brief JSON parameter-file loading. Rational values travel as
 *        lowest-terms "p/q" strings so exactness survives the wire.
 */

#include <optional>
#include <string>

#include "qrk/dual_qhahn.hpp"
#include "qrk/krall.hpp"
#include "qrk/qhahn.hpp"
#include "qrk/racah.hpp"
#include "qrk/racah_classical.hpp"

namespace qrk {

/// Thrown for malformed or inadmissible configuration; the message names
/// the offending field or violated invariant.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DualBlock {
  Rational gamma, delta;
  std::optional<int> N;
};

struct QHahnBlock {
  Rational v, mu, nu;
  std::optional<int> N;
};

struct ClassicalBlock {
  double alpha = 0, beta = 0, delta = 0;  // gamma = -N-1 fixed by truncation
  std::optional<int> N;
};

struct Config {
  Rational v;
  int N = 0;
  Truncation truncation = Truncation::GammaQ;
  std::optional<Rational> alpha, beta, gamma, delta;
  Rational A, B;

  std::optional<DualBlock> dual;
  std::optional<QHahnBlock> qhahn;
  std::optional<ClassicalBlock> classical;

  RacahParams make_racah() const;
  MassConfig<Rational> masses() const { return {A, B}; }
  DualQHahnParams make_dual() const;
  QHahnParams make_qhahn() const;
  RacahClassicalParams make_classical() const;

  /// One-line deterministic echo for reports.
  std::string echo() const;
};

Config load_config(const std::string& path);
Config parse_config(const std::string& json_text);

}  // namespace qrk
