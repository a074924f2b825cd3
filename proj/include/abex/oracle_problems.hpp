#pragma once

// Radial eigenproblems assembled straight from the field profiles, for the
// oracle. Each builder writes the equation in the form v'' + v'/r + U v = 0
// (or Y' = M Y for the first-order Dirac pairs); nothing is taken from the
// closed-form index formulas.

#include "abex/fields.hpp"
#include "abex/oracle.hpp"

namespace abex::oracle {

struct FieldParams {
  double L = 0.5;  // l + mu
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  double lambda = 0.0;
  double m = 1.0;
  double k3 = 0.0;
  int zeta = 1;
  int epsilon = 1;
};

struct Window {
  double lo = 0.0;
  double hi = 0.0;
};

/// Spin offsets of the squared equations: tau_s = s(2-s), delta_s = s(5-3s)/2.
double spin_tau(int s);
double spin_delta(int s);

/// Klein-Gordon, f0 = alpha/r, f2 = gamma r; eigenparameter k0 (non-monotone).
RadialProblem kg_case1_problem(const FieldParams& p, Window k0_window);
/// Klein-Gordon, f1 = alpha/r, f2 = gamma r; eigenparameter k0^2.
RadialProblem kg_case2_problem(const FieldParams& p, Window k0sq_window);
/// Squared Dirac equation with f1 = epsilon f0 and component s in {1, 2}.
/// Variant a: f = alpha/r + beta/r^2, f2 = gamma r; variant b: f = alpha r^2 +
/// beta/r^2, f2 = gamma r^2. Eigenparameter k0 (non-monotone).
RadialProblem case3_problem(const FieldParams& p, bool variant_b, int s, Window k0_window);
/// Case II radial equation with f2 = gamma r (or a general profile),
/// s = 0 for Klein-Gordon, 1 or 2 for the Dirac components; eigenparameter k_perp^2.
RadialProblem caseII_problem(const FieldParams& p, int s, Window kperp2_window);
RadialProblem caseII_problem(const RadialProfile& f2, double L, int s, Window kperp2_window, double r_scale);
/// Schrodinger, generic radial f0, f1, f2; eigenparameter k0.
RadialProblem schrodinger_problem(const RadialProfile& f0, const RadialProfile& f1, const RadialProfile& f2,
                                  double L, double m, double k3, Window k0_window, double r_scale);

/// First-order Dirac pair, f0 = alpha/r, f2 = gamma r (phi1, phi2).
Eigen::Matrix2d dirac_case1_matrix(const FieldParams& p, double k0, double r);
/// First-order Dirac pair, f1 = alpha/r, f2 = gamma r (phi1bar, phi2bar).
Eigen::Matrix2d dirac_case2_matrix(const FieldParams& p, double k0, double r);

FirstOrderProblem dirac_case1_problem(const FieldParams& p, Window k0_window);
FirstOrderProblem dirac_case2_problem(const FieldParams& p, Window k0_window);

}  // namespace abex::oracle
