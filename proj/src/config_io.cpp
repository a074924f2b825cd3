#include "abex/config_io.hpp"

#include <array>
#include <fstream>
#include <set>
#include <sstream>

namespace abex {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorCode::ConfigError, "config field '" + field + "': " + why);
}

void allow_keys(const json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) bad(where, "must be an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!ok.count(it.key())) bad(where.empty() ? it.key() : where + "." + it.key(), "unknown key");
  }
}

double get_number(const json& j, const std::string& key, const std::string& where, double fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number()) bad(where + "." + key, "must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) bad(where + "." + key, "must be finite");
  return x;
}

int get_sign(const json& j, const std::string& key, const std::string& where, int fallback) {
  if (!j.contains(key)) return fallback;
  const auto& v = j.at(key);
  if (!v.is_number_integer() || (v.get<int>() != 1 && v.get<int>() != -1)) bad(where + key, "must be +1 or -1");
  return v.get<int>();
}

struct ShapeInfo {
  RadialShape shape;
  const char* name;
  std::vector<const char*> coeffs;
};

const std::array<ShapeInfo, 11>& shapes() {
  static const std::array<ShapeInfo, 11> table{{
      {RadialShape::Zero, "Zero", {}},
      {RadialShape::InverseR, "InverseR", {"alpha"}},
      {RadialShape::InverseR2, "InverseR2", {"beta"}},
      {RadialShape::InverseRPlusInverseR2, "InverseR_plus_InverseR2", {"alpha", "beta"}},
      {RadialShape::Linear, "Linear", {"gamma"}},
      {RadialShape::Quadratic, "Quadratic", {"gamma"}},
      {RadialShape::R2PlusInverseR2, "R2_plus_InverseR2", {"alpha", "beta"}},
      {RadialShape::SchrodingerA0, "SchrodingerA_f0", {"alpha", "beta", "delta", "lambda"}},
      {RadialShape::SchrodingerA1, "SchrodingerA_f1", {"beta", "lambda"}},
      {RadialShape::SchrodingerB0, "SchrodingerB_f0", {"alpha", "beta", "delta", "lambda"}},
      {RadialShape::SchrodingerB1, "SchrodingerB_f1", {"delta", "lambda"}},
  }};
  return table;
}

const std::array<std::pair<ScalarKind, const char*>, 11> kScalarNames{{
    {ScalarKind::Zero, "Zero"},
    {ScalarKind::Constant, "Constant"},
    {ScalarKind::Linear, "Linear"},
    {ScalarKind::Inverse, "Inverse"},
    {ScalarKind::Exp, "Exp"},
    {ScalarKind::Tan, "Tan"},
    {ScalarKind::Tanh, "Tanh"},
    {ScalarKind::Coth, "Coth"},
    {ScalarKind::SqrtAbs, "SqrtAbs"},
    {ScalarKind::Gaussian, "Gaussian"},
    {ScalarKind::Tabulated, "Tabulated"},
}};

const std::array<std::pair<AxialArgument, const char*>, 4> kArgNames{{
    {AxialArgument::Z, "z"},
    {AxialArgument::Time, "x0"},
    {AxialArgument::Lightfront, "lightfront"},
    {AxialArgument::BoostInvariant, "boost"},
}};

RadialProfile parse_radial(const json& j, const std::string& where, double mass) {
  const std::string name = j.at("shape").get<std::string>();
  for (const auto& info : shapes()) {
    if (name != info.name) continue;
    allow_keys(j, where, {"shape", "coeffs"});
    RadialProfile p;
    p.shape = info.shape;
    p.mass = mass;
    if (j.contains("coeffs")) {
      const json& c = j.at("coeffs");
      if (!c.is_object()) bad(where + ".coeffs", "must be an object");
      for (auto it = c.begin(); it != c.end(); ++it) {
        bool known = false;
        for (const char* k : info.coeffs) known = known || it.key() == k;
        if (!known) bad(where + ".coeffs." + it.key(), "not a coefficient of shape " + name);
      }
      const std::string cw = where + ".coeffs";
      p.alpha = get_number(c, "alpha", cw, 0.0);
      p.beta = get_number(c, "beta", cw, 0.0);
      p.gamma = get_number(c, "gamma", cw, 0.0);
      p.delta = get_number(c, "delta", cw, 0.0);
      p.lambda = get_number(c, "lambda", cw, 0.0);
    }
    return p;
  }
  bad(where + ".shape", "unknown radial shape '" + name + "'");
}

AxialProfile parse_axial(const json& j, const std::string& where) {
  allow_keys(j, where, {"shape", "argument", "profile", "coeffs", "table"});
  AxialProfile a;
  if (!j.contains("argument") || !j.at("argument").is_string()) bad(where + ".argument", "missing");
  const std::string arg = j.at("argument").get<std::string>();
  bool found = false;
  for (auto [v, n] : kArgNames) {
    if (arg == n) {
      a.argument = v;
      found = true;
    }
  }
  if (!found) bad(where + ".argument", "expected z, x0, lightfront or boost");
  if (!j.contains("profile") || !j.at("profile").is_string()) bad(where + ".profile", "missing");
  const std::string prof = j.at("profile").get<std::string>();
  std::optional<ScalarKind> kind;
  for (auto [v, n] : kScalarNames) {
    if (prof == n) kind = v;
  }
  if (!kind) bad(where + ".profile", "unknown profile '" + prof + "'");
  if (*kind == ScalarKind::Tabulated) {
    if (!j.contains("table")) bad(where + ".table", "required for Tabulated");
    const json& t = j.at("table");
    allow_keys(t, where + ".table", {"x", "y"});
    try {
      a.f = ScalarProfile::tabulated(t.at("x").get<std::vector<double>>(), t.at("y").get<std::vector<double>>());
    } catch (const json::exception&) {
      bad(where + ".table", "x and y must be numeric arrays");
    } catch (const Error& e) {
      bad(where + ".table", e.what());
    }
    return a;
  }
  double alpha = 0.0, beta = 0.0;
  if (j.contains("coeffs")) {
    const json& c = j.at("coeffs");
    allow_keys(c, where + ".coeffs", {"alpha", "beta"});
    alpha = get_number(c, "alpha", where + ".coeffs", 0.0);
    beta = get_number(c, "beta", where + ".coeffs", 0.0);
  }
  a.f = ScalarProfile(*kind, alpha, beta);
  return a;
}

Potential parse_potential(const json& j, const std::string& where, double mass) {
  if (!j.is_object() || !j.contains("shape") || !j.at("shape").is_string()) bad(where + ".shape", "missing");
  const std::string shape = j.at("shape").get<std::string>();
  if (shape == "Axial") return parse_axial(j, where);
  if (shape == "Polar") {
    allow_keys(j, where, {"shape", "coeffs"});
    PolarProfile p;
    if (j.contains("coeffs")) {
      allow_keys(j.at("coeffs"), where + ".coeffs", {"alpha", "beta"});
      p.alpha = get_number(j.at("coeffs"), "alpha", where + ".coeffs", 0.0);
      p.beta = get_number(j.at("coeffs"), "beta", where + ".coeffs", 0.0);
    }
    return p;
  }
  return parse_radial(j, where, mass);
}

std::vector<int> int_list(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "must be an array of integers");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) bad(where, "must be an array of integers");
    out.push_back(v.get<int>());
  }
  if (out.empty()) bad(where, "must not be empty");
  return out;
}

json potential_json(const Potential& p) {
  if (const auto* r = std::get_if<RadialProfile>(&p)) {
    json j{{"shape", shape_name(r->shape)}};
    json c = json::object();
    for (const auto& info : shapes()) {
      if (info.shape != r->shape) continue;
      for (const std::string k : info.coeffs) {
        c[k] = k == "alpha" ? r->alpha : k == "beta" ? r->beta : k == "gamma" ? r->gamma : k == "delta" ? r->delta
                                                                                                         : r->lambda;
      }
    }
    if (!c.empty()) j["coeffs"] = c;
    return j;
  }
  if (const auto* a = std::get_if<AxialProfile>(&p)) {
    json j{{"shape", "Axial"}};
    for (auto [v, n] : kArgNames) {
      if (v == a->argument) j["argument"] = n;
    }
    for (auto [v, n] : kScalarNames) {
      if (v == a->f.kind()) j["profile"] = n;
    }
    if (a->f.kind() == ScalarKind::Tabulated) {
      j["table"] = {{"x", a->f.table_x()}, {"y", a->f.table_y()}};
    } else {
      j["coeffs"] = {{"alpha", a->f.alpha()}, {"beta", a->f.beta()}};
    }
    return j;
  }
  const auto& pol = std::get<PolarProfile>(p);
  return {{"shape", "Polar"}, {"coeffs", {{"alpha", pol.alpha}, {"beta", pol.beta}}}};
}

}  // namespace

std::string_view shape_name(RadialShape s) {
  for (const auto& info : shapes()) {
    if (info.shape == s) return info.name;
  }
  return "?";
}

RunConfig parse_config(const json& j) {
  allow_keys(j, "", {"flux_quanta", "charge_sign", "case_tag", "epsilon", "f0", "f1", "f2", "particle", "sweep"});
  RunConfig cfg;
  try {
    if (!j.contains("flux_quanta")) bad("flux_quanta", "missing");
    const double flux = get_number(j, "flux_quanta", "", 0.0);
    const int sign = get_sign(j, "charge_sign", "", -1);
    cfg.field.flux = decompose_flux(flux, sign);

    if (!j.contains("case_tag") || !j.at("case_tag").is_string()) bad("case_tag", "missing");
    const auto tag = case_tag_from_string(j.at("case_tag").get<std::string>());
    if (!tag) bad("case_tag", "unknown tag '" + j.at("case_tag").get<std::string>() + "'");
    cfg.field.case_tag = *tag;
    cfg.field.epsilon = get_sign(j, "epsilon", "", 1);

    if (j.contains("particle")) {
      const json& p = j.at("particle");
      allow_keys(p, "particle", {"equation", "mass", "k3", "zeta", "nu", "s", "lambda_ev", "kperp2"});
      if (p.contains("equation")) {
        const std::string e = p.at("equation").get<std::string>();
        if (e == "Dirac") {
          cfg.particle.equation = Equation::Dirac;
        } else if (e == "KleinGordon") {
          cfg.particle.equation = Equation::KleinGordon;
        } else if (e == "Schrodinger") {
          cfg.particle.equation = Equation::Schrodinger;
        } else {
          bad("particle.equation", "expected Dirac, KleinGordon or Schrodinger");
        }
      }
      cfg.particle.mass = get_number(p, "mass", "particle", 1.0);
      if (!(cfg.particle.mass > 0.0)) bad("particle.mass", "must be positive");
      cfg.particle.k3 = get_number(p, "k3", "particle", 0.0);
      cfg.particle.zeta = get_sign(p, "zeta", "particle.", 1);
      cfg.particle.nu = get_sign(p, "nu", "particle.", 1);
      if (p.contains("s")) {
        if (!p.at("s").is_number_integer() || p.at("s").get<int>() < 0 || p.at("s").get<int>() > 2) {
          bad("particle.s", "must be 0, 1 or 2");
        }
        cfg.particle.s = p.at("s").get<int>();
      }
      cfg.particle.lambda_ev = get_number(p, "lambda_ev", "particle", 1.0);
      cfg.particle.kperp2 = get_number(p, "kperp2", "particle", 0.0);
    }
    if (cfg.field.case_tag == CaseTag::SchrodingerA || cfg.field.case_tag == CaseTag::SchrodingerB) {
      cfg.particle.equation = Equation::Schrodinger;
    }

    const double m = cfg.particle.mass;
    for (const char* key : {"f0", "f1"}) {
      if (!j.contains(key)) continue;
      Potential pot = parse_potential(j.at(key), key, m);
      (std::string(key) == "f0" ? cfg.field.f0 : cfg.field.f1) = pot;
    }
    if (j.contains("f2")) {
      Potential f2 = parse_potential(j.at("f2"), "f2", m);
      if (!std::holds_alternative<RadialProfile>(f2)) bad("f2", "must be a radial profile");
      cfg.field.f2 = std::get<RadialProfile>(f2);
    }

    if (j.contains("sweep")) {
      const json& s = j.at("sweep");
      allow_keys(s, "sweep", {"n", "l"});
      if (s.contains("n")) cfg.sweep.n = int_list(s.at("n"), "sweep.n");
      if (s.contains("l")) cfg.sweep.l = int_list(s.at("l"), "sweep.l");
      for (int n : cfg.sweep.n) {
        if (n < 0) bad("sweep.n", "quantum numbers n must be non-negative");
      }
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, std::string("config type error: ") + e.what());
  }
  cfg.field = validate_config(cfg.field);
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ConfigError, "cannot open config '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigError, "config '" + path + "' is not valid JSON: " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& cfg) {
  json j;
  j["flux_quanta"] = cfg.field.flux.flux_quanta;
  j["charge_sign"] = cfg.field.flux.charge_sign;
  j["case_tag"] = to_string(cfg.field.case_tag);
  j["epsilon"] = cfg.field.epsilon;
  j["f0"] = potential_json(cfg.field.f0);
  j["f1"] = potential_json(cfg.field.f1);
  j["f2"] = potential_json(cfg.field.f2);
  const auto& p = cfg.particle;
  j["particle"] = {{"equation", to_string(p.equation)}, {"mass", p.mass}, {"k3", p.k3},
                   {"zeta", p.zeta},  {"nu", p.nu},   {"s", p.s},   {"lambda_ev", p.lambda_ev},
                   {"kperp2", p.kperp2}};
  j["sweep"] = {{"n", cfg.sweep.n}, {"l", cfg.sweep.l}};
  return j;
}

}  // namespace abex
