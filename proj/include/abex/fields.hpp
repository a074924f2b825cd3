#pragma once

// Aharonov-Bohm flux bookkeeping and the additional-field families.
// Potentials are stored in natural units, already scaled by e/(c hbar).

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/math/interpolators/makima.hpp>

#include "abex/errors.hpp"

namespace abex {

struct FluxDecomposition {
  double flux_quanta = 0.0;
  int charge_sign = -1;
  long l0 = 0;
  double mu = 0.0;

  bool nontrivial() const { return mu != 0.0; }
};

/// Split the flux (in units of the Dirac flux quantum) into l0 + mu with
/// -charge_sign * (l0 + mu) = flux_quanta and 0 <= mu < 1.
FluxDecomposition decompose_flux(double flux_quanta, int charge_sign);

// ---- radial profiles f(r) -------------------------------------------------

enum class RadialShape {
  Zero,
  InverseR,               // alpha / r
  InverseR2,              // beta / r^2
  InverseRPlusInverseR2,  // alpha / r + beta / r^2
  Linear,                 // gamma r
  Quadratic,              // gamma r^2
  R2PlusInverseR2,        // alpha r^2 + beta / r^2
  SchrodingerA0,          // alpha/r + delta/r^2 + (2 lambda/r^3)(beta - m lambda/r)
  SchrodingerA1,          // beta/r - 2 m lambda/r^2
  SchrodingerB0,          // alpha r^2 + beta/r^2 - 2m(lambda^2/r^4 + delta^2 r^4)
  SchrodingerB1,          // -2m(lambda/r^2 + delta r^2)
};

struct RadialProfile {
  RadialShape shape = RadialShape::Zero;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double lambda = 0.0;
  double mass = 1.0;  // only the mass-coupled Schrodinger shapes use it

  double value(double r) const;
  double derivative(double r) const;
};

// ---- profiles of a single variable, used for the axial (z, x0) fields ------

enum class ScalarKind {
  Zero,
  Constant,   // alpha
  Linear,     // alpha x
  Inverse,    // alpha / x
  Exp,        // alpha exp(beta x)
  Tan,        // alpha tan(beta x)
  Tanh,       // alpha tanh(beta x)
  Coth,       // alpha coth(beta x)
  SqrtAbs,    // alpha sqrt|x|
  Gaussian,   // alpha exp(-beta x^2)
  Tabulated,  // makima spline through (x, y), no extrapolation
};

class ScalarProfile {
 public:
  ScalarProfile() = default;
  ScalarProfile(ScalarKind kind, double alpha, double beta = 0.0);
  static ScalarProfile tabulated(std::vector<double> x, std::vector<double> y);

  ScalarKind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const std::vector<double>& table_x() const { return tx_; }
  const std::vector<double>& table_y() const { return ty_; }

  double value(double x) const;
  double derivative(double x) const;

 private:
  using Spline = boost::math::interpolators::makima<std::vector<double>>;
  void check_table_range(double x) const;

  ScalarKind kind_ = ScalarKind::Zero;
  double alpha_ = 0.0;
  double beta_ = 0.0;
  std::vector<double> tx_, ty_;
  std::shared_ptr<const Spline> spline_;
};

enum class AxialArgument {
  Z,               // f0 = f(z)
  Time,            // f1 = f(x0)
  Lightfront,      // f0 = f1 = f(xi)/2, xi = x0 - z
  BoostInvariant,  // f0 = -z f(xib)/xib, f1 = x0 f(xib)/xib, xib = x0^2 - z^2
};

struct AxialProfile {
  AxialArgument argument = AxialArgument::Z;
  ScalarProfile f;
};

/// f1(cos theta) = alpha cos theta + beta (spherical coordinates).
struct PolarProfile {
  double alpha = 0.0;
  double beta = 0.0;
};

enum class PotentialRole { F0, F1 };

using Potential = std::variant<RadialProfile, AxialProfile, PolarProfile>;

enum class CaseTag { I1, I2, I3, II, SchrodingerA, SchrodingerB, Spherical };

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view s);

struct FieldConfig {
  FluxDecomposition flux;
  Potential f0 = RadialProfile{};
  Potential f1 = RadialProfile{};
  RadialProfile f2;
  CaseTag case_tag = CaseTag::I1;
  int epsilon = 1;  // subcase I.3: f1 = epsilon f0
};

struct FieldValues {
  double E_r = 0.0, E_phi = 0.0, E_z = 0.0;
  double H_r = 0.0, H_phi = 0.0, H_z = 0.0;
};

/// Value of an axial potential in its role (f0 or f1) at (z, x0).
double axial_potential(const AxialProfile& p, PotentialRole role, double z, double x0);
/// Partial derivatives (d/dz, d/dx0) of an axial potential.
std::pair<double, double> axial_potential_gradient(const AxialProfile& p, PotentialRole role,
                                                   double z, double x0);

/// Cylindrical-coordinate E and H of the additional field. The AB line field
/// at r = 0 is not part of this (it enters only through l0 and mu).
FieldValues eval_cyl_fields(const FieldConfig& config, double r, double z, double x0);

/// Spherical-coordinate radial E and H for f0(r) and f1(cos theta).
FieldValues eval_sph_fields(const FieldConfig& config, double r, double theta);

/// Check that (case_tag, f0, f1, f2) is one of the exactly solvable patterns.
/// Returns the config with epsilon normalized to +-1.
FieldConfig validate_config(const FieldConfig& config);

}  // namespace abex
