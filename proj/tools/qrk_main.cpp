// Command-line interface: evaluation, tabulation, verification suites and
// oracle export for the q-Racah-Krall library.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrk/config.hpp"
#include "qrk/oracle.hpp"
#include "qrk/verify.hpp"

namespace {

using namespace qrk;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfigError = 2;

std::string fmt_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

struct FamilyHandle {
  std::shared_ptr<const Family<Rational>> fam;
  bool krall = false;
  MassConfigQ mc;

  Rational value(int n, long s) const {
    return krall ? eval_krall(*fam, mc, n, s) : fam->eval(n, s);
  }
  Rational norm2(int n) const {
    return krall ? boundary_modified(*fam, mc, n).d2_mod : fam->d2(n);
  }
};

FamilyHandle make_family(const Config& cfg, const std::string& name) {
  FamilyHandle h;
  h.mc = cfg.masses();
  if (name == "qracah" || name == "qracah-krall") {
    h.fam = make_racah_family(cfg.make_racah());
  } else if (name == "dual-qhahn" || name == "dual-qhahn-krall") {
    h.fam = make_dual_qhahn_family(cfg.make_dual());
  } else if (name == "qhahn" || name == "qhahn-krall") {
    h.fam = make_qhahn_family(cfg.make_qhahn());
  } else {
    throw ConfigError("unknown family '" + name +
                      "' (expected qracah[-krall]|dual-qhahn[-krall]|qhahn[-krall])");
  }
  h.krall = name.ends_with("-krall");
  return h;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

int cmd_eval(const Config& cfg, const std::string& family, int n, long s) {
  FamilyHandle h = make_family(cfg, family);
  if (s < 0 || s > h.fam->N()) {
    std::cerr << "error: s out of lattice range 0.." << h.fam->N() << "\n";
    return kExitConfigError;
  }
  if (n < 0 || n > h.fam->N()) {
    std::cerr << "error: n out of degree range 0.." << h.fam->N() << "\n";
    return kExitConfigError;
  }
  Rational v = h.value(n, s);
  std::cout << v.str() << "\n" << fmt_double(v.to_double()) << "\n";
  return kExitPass;
}

int cmd_table(const Config& cfg, const std::string& family, int nmax, const std::string& format,
              const std::string& out_path) {
  FamilyHandle h = make_family(cfg, family);
  const int N = h.fam->N();
  if (nmax < 0 || nmax > N) nmax = N;
  struct Row {
    std::string kind;
    long a, b;
    bool has_b;
    Rational value;
  };
  std::vector<Row> rows;
  for (int n = 0; n <= nmax; ++n)
    for (long s = 0; s <= N; ++s) rows.push_back({"R", n, s, true, h.value(n, s)});
  for (long s = 0; s <= N; ++s) rows.push_back({"mass", s, 0, false, h.fam->mass(s)});
  for (int n = 0; n <= nmax; ++n) rows.push_back({"d2", n, 0, false, h.norm2(n)});
  if (!h.krall) {
    // base TTRR coefficients from the oracle-equivalent norm/recurrence data
    for (int n = 0; n <= nmax; ++n) {
      Rational num(0), den(0);
      for (long s = 0; s <= N; ++s) {
        Rational pv = h.fam->eval(n, s);
        Rational w = h.fam->mass(s);
        num += h.fam->x(s) * pv * pv * w;
        den += pv * pv * w;
      }
      rows.push_back({"beta", n, 0, false, num / den});
      if (n >= 1) rows.push_back({"gamma", n, 0, false, h.fam->d2(n) / h.fam->d2(n - 1)});
    }
  } else {
    for (int n = 0; n + 1 <= nmax; ++n) {
      // base beta_n, gamma_n recovered from norms/projections of the base family
      Rational num(0), den(0);
      for (long s = 0; s <= N; ++s) {
        Rational pv = h.fam->eval(n, s);
        Rational w = h.fam->mass(s);
        num += h.fam->x(s) * pv * pv * w;
        den += pv * pv * w;
      }
      Rational beta_base = num / den;
      Rational gamma_base = n >= 1 ? h.fam->d2(n) / h.fam->d2(n - 1) : Rational(0);
      TTRRmod<Rational> t = ttrr_modified(*h.fam, h.mc, beta_base, gamma_base, n);
      rows.push_back({"beta", n, 0, false, t.beta_mod});
      if (n >= 1) rows.push_back({"gamma", n, 0, false, t.gamma_mod});
    }
  }
  std::ostringstream os;
  if (format == "csv") {
    os << "kind,n,s,value\n";
    for (const auto& r : rows) {
      os << r.kind << "," << r.a << ",";
      if (r.has_b) os << r.b;
      os << "," << r.value.str() << "\n";
    }
  } else if (format == "json") {
    os << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      os << "  {\"kind\":\"" << r.kind << "\",\"n\":" << r.a;
      if (r.has_b) os << ",\"s\":" << r.b;
      os << ",\"value\":\"" << r.value.str() << "\"}";
      os << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "]\n";
  } else {
    throw ConfigError("unknown format '" + format + "' (expected csv|json)");
  }
  emit(os.str(), out_path);
  return kExitPass;
}

int cmd_verify(const Config& cfg, const std::string& suite, int nmax, bool json,
               const std::string& out_path) {
  VerificationReport rep = verify_suite(suite, cfg, nmax);
  emit(json ? rep.to_json() + "\n" : rep.to_text(), out_path);
  return rep.passed() ? kExitPass : kExitVerifyFail;
}

int cmd_oracle(const Config& cfg, int nmax, const std::string& measure, const std::string& format,
               const std::string& out_path) {
  RacahParams p = cfg.make_racah();
  const int N = p.N();
  if (nmax < 0 || nmax > N) nmax = N;
  DiscreteMeasure<Rational> mu;
  std::vector<Rational> masses = p.core().normalized_masses();
  for (long s = 0; s <= N; ++s) {
    mu.nodes.push_back(p.x(s));
    mu.weights.push_back(masses[static_cast<size_t>(s)]);
  }
  if (measure == "modified") {
    if (!cfg.A.is_zero()) mu.masses.push_back({0, cfg.A});
    if (!cfg.B.is_zero()) mu.masses.push_back({N, cfg.B});
  } else if (measure != "base") {
    throw ConfigError("unknown measure '" + measure + "' (expected base|modified)");
  }
  OracleTable<Rational> t = gram_schmidt_monic(mu, nmax);
  std::ostringstream os;
  if (format == "csv") {
    os << "kind,n,k,value\n";
    for (int n = 0; n <= nmax; ++n)
      for (size_t k = 0; k < t.coeffs[n].size(); ++k)
        os << "coeff," << n << "," << k << "," << t.coeffs[n][k].str() << "\n";
    for (int n = 0; n <= nmax; ++n) os << "norm," << n << ",," << t.norms[n].str() << "\n";
    for (int n = 0; n <= nmax; ++n) os << "beta," << n << ",," << t.betas[n].str() << "\n";
    for (int n = 1; n <= nmax; ++n) os << "gamma," << n << ",," << t.gammas[n].str() << "\n";
  } else if (format == "json") {
    os << "{\n  \"polynomials\": [\n";
    for (int n = 0; n <= nmax; ++n) {
      os << "    {\"n\":" << n << ",\"coeffs\":[";
      for (size_t k = 0; k < t.coeffs[n].size(); ++k)
        os << "\"" << t.coeffs[n][k].str() << "\"" << (k + 1 < t.coeffs[n].size() ? "," : "");
      os << "],\"norm\":\"" << t.norms[n].str() << "\",\"beta\":\"" << t.betas[n].str()
         << "\",\"gamma\":\"" << t.gammas[n].str() << "\"}" << (n < nmax ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
  } else {
    throw ConfigError("unknown format '" + format + "' (expected csv|json)");
  }
  emit(os.str(), out_path);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-Racah / Krall-type orthogonal polynomial toolkit"};
  app.require_subcommand(1);

  std::string config_path, family = "qracah", format = "csv", out_path, suite = "all";
  std::string measure = "modified";
  int n = 0, nmax = -1;
  long s = 0;
  bool json = false;

  auto* eval = app.add_subcommand("eval", "evaluate R_n at a lattice point");
  eval->add_option("--config", config_path, "JSON parameter file")->required();
  eval->add_option("--family", family, "family name");
  eval->add_option("--n", n, "degree")->required();
  eval->add_option("--s", s, "lattice index")->required();

  auto* table = app.add_subcommand("table", "tabulate values, weights, norms, TTRR coefficients");
  table->add_option("--config", config_path)->required();
  table->add_option("--family", family);
  table->add_option("--nmax", nmax);
  table->add_option("--format", format, "csv|json");
  table->add_option("--out", out_path);

  auto* verify = app.add_subcommand("verify", "run an identity verification suite");
  verify->add_option("suite", suite, "orthogonality|kernels|reps|ttrr|sode|limits|oracle|all");
  verify->add_option("--config", config_path)->required();
  verify->add_option("--nmax", nmax);
  verify->add_flag("--json", json, "emit JSON instead of text");
  verify->add_option("--out", out_path);

  auto* oracle = app.add_subcommand("oracle", "export the Gram-Schmidt oracle coefficient table");
  oracle->add_option("--config", config_path)->required();
  oracle->add_option("--nmax", nmax);
  oracle->add_option("--measure", measure, "base|modified");
  oracle->add_option("--format", format, "csv|json");
  oracle->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitConfigError;
  }

  try {
    Config cfg = load_config(config_path);
    if (eval->parsed()) return cmd_eval(cfg, family, n, s);
    if (table->parsed()) return cmd_table(cfg, family, nmax, format, out_path);
    if (verify->parsed()) return cmd_verify(cfg, suite, nmax, json, out_path);
    if (oracle->parsed()) return cmd_oracle(cfg, nmax, measure, format, out_path);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  return kExitConfigError;
}
