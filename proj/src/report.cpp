#include "qrk/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace qrk {

namespace {
const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::ExactPass: return "exact-pass";
    case CheckStatus::NumericPass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::NotApplicable: return "n/a";
  }
  return "?";
}

std::string format_dev(double d) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", d);
  return buf;
}
}  // namespace

bool VerificationReport::passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::Fail) return false;
  return true;
}

void VerificationReport::add_exact(const std::string& id, const std::string& grid, bool ok,
                                   std::string note) {
  checks.push_back({id, grid, ok ? CheckStatus::ExactPass : CheckStatus::Fail, std::nullopt,
                    std::move(note)});
}

void VerificationReport::add_numeric(const std::string& id, const std::string& grid, bool ok,
                                     double dev, std::string note) {
  checks.push_back({id, grid, ok ? CheckStatus::NumericPass : CheckStatus::Fail, dev,
                    std::move(note)});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks) checks.push_back(c);
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "suite: " << suite << "\n";
  os << "params: " << params_echo << "\n";
  for (const auto& c : checks) {
    os << "  [" << status_name(c.status) << "] " << c.id << " (" << c.grid << ")";
    if (c.max_deviation) os << " max_dev=" << format_dev(*c.max_deviation);
    if (!c.note.empty()) os << " -- " << c.note;
    os << "\n";
  }
  os << (passed() ? "RESULT: pass" : "RESULT: FAIL") << " (" << checks.size() << " checks)\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = params_echo;
  j["overall"] = passed() ? "pass" : "fail";
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["grid"] = c.grid;
    jc["status"] = status_name(c.status);
    if (c.max_deviation) jc["max_deviation"] = format_dev(*c.max_deviation);
    if (!c.note.empty()) jc["note"] = c.note;
    j["checks"].push_back(jc);
  }
  return j.dump(2);
}

}  // namespace qrk
