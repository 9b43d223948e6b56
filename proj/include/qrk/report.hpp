#pragma once

/**
 * @file report.hpp
 * @brief Structured pass/fail results of the identity verification suites.
 */

#include <optional>
#include <string>
#include <vector>

namespace qrk {

enum class CheckStatus { ExactPass, NumericPass, Fail, NotApplicable };

struct CheckRecord {
  std::string id;          // identity being checked
  std::string grid;        // grid the check ran over
  CheckStatus status = CheckStatus::NotApplicable;
  std::optional<double> max_deviation;  // for numeric checks
  std::string note;
};

struct VerificationReport {
  std::string suite;
  std::string params_echo;
  std::vector<CheckRecord> checks;

  bool passed() const;
  void add_exact(const std::string& id, const std::string& grid, bool ok, std::string note = "");
  void add_numeric(const std::string& id, const std::string& grid, bool ok, double dev,
                   std::string note = "");
  void merge(const VerificationReport& other);

  /// One line per check plus a trailing suite line; deterministic.
  std::string to_text() const;
  std::string to_json() const;
};

}  // namespace qrk
