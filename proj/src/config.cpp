#include "qrk/config.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qrk {

namespace {
using nlohmann::json;

Rational get_rational(const json& j, const std::string& field) {
  if (!j.contains(field)) throw ConfigError("config: missing field '" + field + "'");
  const auto& v = j.at(field);
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
  } catch (const std::exception& e) {
    throw ConfigError("config: field '" + field + "': " + e.what());
  }
  throw ConfigError("config: field '" + field + "' must be a \"p/q\" string or integer");
}

std::optional<Rational> get_rational_opt(const json& j, const std::string& field) {
  if (!j.contains(field)) return std::nullopt;
  return get_rational(j, field);
}

int get_int(const json& j, const std::string& field) {
  if (!j.contains(field) || !j.at(field).is_number_integer())
    throw ConfigError("config: missing or non-integer field '" + field + "'");
  return j.at(field).get<int>();
}
}  // namespace

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: malformed JSON: ") + e.what());
  }
  Config c;
  c.v = get_rational(j, "v");
  c.N = get_int(j, "N");
  std::string tr = j.value("truncation", std::string("gamma"));
  if (tr == "gamma") c.truncation = Truncation::GammaQ;
  else if (tr == "alpha") c.truncation = Truncation::AlphaQ;
  else if (tr == "betadelta") c.truncation = Truncation::BetaDeltaQ;
  else throw ConfigError("config: field 'truncation' must be one of alpha|betadelta|gamma");
  c.alpha = get_rational_opt(j, "alpha");
  c.beta = get_rational_opt(j, "beta");
  c.gamma = get_rational_opt(j, "gamma");
  c.delta = get_rational_opt(j, "delta");
  switch (c.truncation) {
    case Truncation::GammaQ:
      if (c.gamma) throw ConfigError("config: 'gamma' is derived under truncation 'gamma'; remove it");
      if (!c.alpha || !c.beta || !c.delta)
        throw ConfigError("config: truncation 'gamma' needs fields alpha, beta, delta");
      break;
    case Truncation::AlphaQ:
      if (c.alpha) throw ConfigError("config: 'alpha' is derived under truncation 'alpha'; remove it");
      if (!c.beta || !c.gamma || !c.delta)
        throw ConfigError("config: truncation 'alpha' needs fields beta, gamma, delta");
      break;
    case Truncation::BetaDeltaQ:
      if (c.beta) throw ConfigError("config: 'beta' is derived under truncation 'betadelta'; remove it");
      if (!c.alpha || !c.gamma || !c.delta)
        throw ConfigError("config: truncation 'betadelta' needs fields alpha, gamma, delta");
      break;
  }
  c.A = j.contains("A") ? get_rational(j, "A") : Rational(0);
  c.B = j.contains("B") ? get_rational(j, "B") : Rational(0);
  if (j.contains("dual")) {
    const auto& d = j.at("dual");
    DualBlock b{get_rational(d, "gamma"), get_rational(d, "delta"), std::nullopt};
    if (d.contains("N")) b.N = get_int(d, "N");
    c.dual = b;
  }
  if (j.contains("qhahn")) {
    const auto& d = j.at("qhahn");
    QHahnBlock b{get_rational(d, "v"), get_rational(d, "mu"), get_rational(d, "nu"), std::nullopt};
    if (d.contains("N")) b.N = get_int(d, "N");
    c.qhahn = b;
  }
  if (j.contains("classical")) {
    const auto& d = j.at("classical");
    ClassicalBlock b;
    b.alpha = d.value("alpha", 0.0);
    b.beta = d.value("beta", 0.0);
    b.delta = d.value("delta", 0.0);
    if (d.contains("N")) b.N = get_int(d, "N");
    c.classical = b;
  }
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

RacahParams Config::make_racah() const {
  RacahParams::Free f{alpha, beta, gamma, delta};
  try {
    return RacahParams(v, N, truncation, f);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config: inadmissible q-Racah parameters: ") + e.what());
  }
}

DualQHahnParams Config::make_dual() const {
  if (!dual) throw ConfigError("config: missing 'dual' block");
  return DualQHahnParams(v, dual->gamma, dual->delta, dual->N.value_or(N));
}

QHahnParams Config::make_qhahn() const {
  if (!qhahn) throw ConfigError("config: missing 'qhahn' block");
  return QHahnParams(qhahn->v, qhahn->mu, qhahn->nu, qhahn->N.value_or(N));
}

RacahClassicalParams Config::make_classical() const {
  if (!classical) throw ConfigError("config: missing 'classical' block");
  RacahClassicalParams p;
  int Nc = classical->N.value_or(N);
  p.alpha = classical->alpha;
  p.beta = classical->beta;
  p.delta = classical->delta;
  p.gamma = -Nc - 1.0;
  p.N = Nc;
  return p;
}

std::string Config::echo() const {
  std::ostringstream os;
  os << "v=" << v.str() << " N=" << N << " truncation=" << to_string(truncation);
  auto field = [&](const char* name, const std::optional<Rational>& r) {
    if (r) os << " " << name << "=" << r->str();
  };
  field("alpha", alpha);
  field("beta", beta);
  field("gamma", gamma);
  field("delta", delta);
  os << " A=" << A.str() << " B=" << B.str();
  return os.str();
}

}  // namespace qrk
