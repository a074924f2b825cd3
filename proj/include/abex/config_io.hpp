#pragma once

// JSON run configuration: the field block plus particle / sweep extensions.
//
// {
//   "flux_quanta": 2.5, "charge_sign": -1, "case_tag": "I.2", "epsilon": 1,
//   "f0": {"shape": "Zero"},
//   "f1": {"shape": "InverseR", "coeffs": {"alpha": 0.3}},
//   "f2": {"shape": "Linear", "coeffs": {"gamma": 1.0}},
//   "particle": {"equation": "KleinGordon", "mass": 1.0, "k3": 0.0, "zeta": 1, "s": 2},
//   "sweep": {"n": [0, 1, 2, 3], "l": [1]}
// }
//
// Axial potentials: {"shape": "Axial", "argument": "z|x0|lightfront|boost",
// "profile": "Tanh", "coeffs": {"alpha": .., "beta": ..}} or "profile":
// "Tabulated" with "table": {"x": [..], "y": [..]}. Polar: {"shape": "Polar",
// "coeffs": {"alpha": .., "beta": ..}}. Unknown keys are errors.

#include <string>
#include <vector>

#include <json.hpp>

#include "abex/fields.hpp"
#include "abex/spectra.hpp"

namespace abex {

struct ParticleSpec {
  Equation equation = Equation::KleinGordon;
  double mass = 1.0;
  double k3 = 0.0;
  int zeta = 1;
  int nu = 1;
  int s = 2;               // active component for subcase I.3 / Case II Dirac
  double lambda_ev = 1.0;  // lightfront / boost eigenvalue
  double kperp2 = 0.0;     // Case II axial solutions
};

struct SweepSpec {
  std::vector<int> n{0};
  std::vector<int> l{1};
};

struct RunConfig {
  FieldConfig field;
  ParticleSpec particle;
  SweepSpec sweep;
};

/// Parse and validate; errors are ConfigError (bad JSON / keys / values) or
/// the validation codes of validate_config. Messages name the field.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);

/// Round-trip form, used for the parameter echo in output headers.
nlohmann::json to_json(const RunConfig& cfg);

std::string_view shape_name(RadialShape s);

}  // namespace abex
