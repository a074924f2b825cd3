#pragma once

// Closed form vs. oracle for a configured state, and the residual checks of
// every assembled solution. Shared by `abex verify` and the acceptance test.

#include <optional>
#include <string>
#include <vector>

#include "abex/config_io.hpp"
#include "abex/oracle.hpp"
#include "abex/wavefunctions.hpp"

namespace abex {

struct VerifyOptions {
  double tol_residual = 1e-6;
  double tol_eigen = 1e-6;
  bool residuals = true;
  double perturb_formula = 0.0;  // test hook: closed form scaled by (1 + x)
};

/// A closed-form bound state of the configured field.
struct ClosedFormState {
  int l = 0;
  int n = 0;
  StateParams q;
  SpectralResult spec;          // for Case II, k0 holds k_perp^2
  std::vector<double> roots;    // every root reported (subcase I.3 may have several)
  RadialIndexSet idx;           // the component checked against the oracle
  std::string eigen_name;       // "k0" or "kperp2"
};

ClosedFormState closed_form_state(const RunConfig& cfg, int l, int n);

/// Oracle value of the same eigenparameter (k0 or k_perp^2) nearest to `near`.
double oracle_eigen(const RunConfig& cfg, const ClosedFormState& st, double near);

struct ResidualCheck {
  std::string name;
  double residual = 0.0;
  double perturbed = 0.0;  // after a 1% multiplicative perturbation
  double tol = 1e-6;
  bool pass() const { return residual < tol && perturbed >= 1e3 * residual; }
};

struct StateCheck {
  int n = 0;
  int l = 0;
  double closed_form = 0.0;
  double oracle = 0.0;
  double eigen_rel = 0.0;
  double norm = 0.0;
  std::vector<ResidualCheck> residuals;
  std::string note;
};

StateCheck check_state(const RunConfig& cfg, int l, int n, const VerifyOptions& opt);

/// Residual checks of the assembled radial solution of a state.
std::vector<ResidualCheck> residual_checks(const RunConfig& cfg, const ClosedFormState& st, double tol);

// ---- axial (z, x0) solutions --------------------------------------------

ResidualCheck lightfront_check(const LightfrontState& s, const ScalarProfile& f, double tol = 1e-6);
ResidualCheck boost_check(BoostVariant variant, int nu, double lambda_ev, double alpha, double m, double kperp2,
                          double tol = 1e-6);
/// Radial-free check of the reduced boost ODE on xib in [0.5, 5].
ResidualCheck boost_ode_check(BoostVariant variant, int nu, double lambda_ev, double alpha, double m,
                              double kperp2, double tol = 1e-6);
ResidualCheck time_phase_check(const ScalarProfile& f, double k3, double kperp2, double m, double tol = 1e-8);
ResidualCheck gauge_check(const AxialProfile& f0, const AxialProfile& f1, double kperp2, double m,
                          double tol = 1e-8);

/// Axial checks implied by a Case II configuration (may be empty).
std::vector<ResidualCheck> axial_checks(const RunConfig& cfg, double tol);

/// Sampled components of the assembled radial solution (A = 1, B = 0):
/// v for Klein-Gordon and Case II, the four reduced spinor entries for the
/// Dirac subcases I.1-I.3, psi for Schrodinger.
std::vector<Complex> state_components(const RunConfig& cfg, const ClosedFormState& st, double r);

/// Grid of n_points radii with x = x(r) geometric in [x_lo, x_hi].
std::vector<double> radial_grid(const RadialIndexSet& idx, double x_lo = 0.2, double x_hi = 20.0,
                                int n_points = 40);

}  // namespace abex
