#pragma once

// Closed-form bound-state spectra and the per-subcase Laguerre indices.

#include <optional>
#include <string_view>
#include <vector>

#include "abex/errors.hpp"
#include "abex/special_fn.hpp"

namespace abex {

enum class Equation { Dirac, KleinGordon, Schrodinger };

std::string_view to_string(Equation e);

struct QuantumNumbers {
  int l = 0;
  int n = 0;
  double k3 = 0.0;
  int zeta = 1;
  int nu = 1;
  Equation equation = Equation::KleinGordon;
};

/// Field and particle parameters shared by the index formulas and spinors.
struct StateParams {
  int l = 0;
  long l0 = 0;
  double mu = 0.5;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double lambda = 0.0;
  double m = 1.0;
  double k3 = 0.0;
  int zeta = 1;
  int epsilon = 1;

  double L() const { return l + mu; }
};

enum class RadialCase { Case1, Case2, Case3a, Case3b, CaseII, SchrodingerA, SchrodingerB };

/// How x depends on r.
enum class XMap {
  TwoRE,      // x = 2 r E
  R2E0,       // x = r^2 E0
  TwoRSqrtE,  // x = 2 r sqrt(E)   (x_scale holds sqrt(E))
  SqrtBR2,    // x = sqrt(b) r^2   (x_scale holds sqrt(b))
};

struct RadialIndexSet {
  int s = 0;
  double p = 0.0;
  double n = 0.0;
  double x_scale = 0.0;
  XMap x_of_r = XMap::TwoRE;

  double x(double r) const;
  double dx_dr(double r) const;
};

/// Laguerre indices (p_s, n_s) and the x(r) map at energy k0. For CaseII the
/// argument `k0` is k_perp^2; for the Schrodinger cases it is the
/// non-relativistic energy.
RadialIndexSet radial_indices(RadialCase rc, int s, const StateParams& params, double k0);

struct SpectralResult {
  double k0 = 0.0;            // primary (positive-energy) root
  double k0_squared = 0.0;
  std::vector<double> alternate_roots;  // other roots, e.g. -|k0|
  double scale_E = 0.0;       // E, E0, sqrt(E) or sqrt(b) of the subcase
  std::vector<RadialIndexSet> indices;  // per active component s
  double tau = 0.0;
  bool boundary_case = false;     // square-root discriminant exactly zero
  bool index_consistent = true;   // n_s integers matching the requested n
  std::optional<int> required_zeta;  // Dirac n = 0: only this zeta is a solution
};

/// Subcase I.1 (f0 = alpha/r, f2 = gamma r). Dirac or Klein-Gordon.
SpectralResult energy_case1(const QuantumNumbers& qn, double mu, double alpha, double gamma, double m);

/// Subcase I.2 (f1 = alpha/r, f2 = gamma r); tau = 1 Dirac, 0 Klein-Gordon.
SpectralResult energy_case2(const QuantumNumbers& qn, double mu, double alpha, double gamma, double m,
                            int tau);

enum class Case3Variant { A, B };

struct Case3Window {
  double lo = 0.0;
  double hi = 0.0;
  int points = 2000;
};

/// Subcase I.3: all real roots of n_s(k0) = target_n, primary root first.
SpectralResult energy_case3(const QuantumNumbers& qn, double mu, Case3Variant variant, double alpha,
                            double beta, double gamma, int epsilon, double m, int s, int target_n,
                            std::optional<Case3Window> window = std::nullopt);

/// Default k0 scan window for subcase I.3.
Case3Window case3_default_window(Case3Variant variant, double alpha, double beta, double gamma,
                                 double m, double k3, double L, int target_n);

struct KPerpResult {
  double kperp2 = 0.0;
  double tau = 0.0;
  int n0 = 0;
  int n2 = 0;
  std::optional<int> n1;  // Dirac only
};

/// Case II with f2 = gamma r: quantized k_perp^2; tau = 0 (Klein-Gordon) or 1/2 (Dirac).
KPerpResult kperp_caseII(const QuantumNumbers& qn, double mu, double gamma, double tau);

SpectralResult energy_schrodinger_a(const QuantumNumbers& qn, double mu, double alpha, double beta,
                                    double gamma, double delta, double lambda_c, double m);
SpectralResult energy_schrodinger_b(const QuantumNumbers& qn, double mu, double alpha, double beta,
                                    double gamma, double delta, double lambda_c, double m);

/// Snap an index to the nearest integer when within tol (removes roundoff
/// that would otherwise switch on the exponentially growing Kummer tail).
double snap_index(double n, double tol = 1e-9);

}  // namespace abex
