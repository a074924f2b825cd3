#pragma once

// Independent numerical checks: a Sturm-count finite-difference eigen solver
// for radial equations v'' + v'/r + U v = 0, a first-order shooting solver for
// the coupled Dirac radial pairs, finite-difference residuals and
// normalization quadrature. Nothing here evaluates Kummer or Laguerre
// functions.

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "abex/errors.hpp"

namespace abex::oracle {

using Complex = std::complex<double>;

struct RadialProblem {
  /// U(r; lambda) with the eigenparameter lambda.
  std::function<double(double r, double lambda)> U;
  /// True when U is affine and increasing in lambda (node count monotone).
  bool monotone = true;
  /// Eigenparameter search window.
  double lambda_lo = 0.0;
  double lambda_hi = 0.0;
  /// Origin exponent nu(lambda) = sqrt(-lim r^2 U); extracted from U if empty.
  std::function<double(double lambda)> nu;
  /// Typical length of the bound states (sets the first grid guess).
  double r_scale = 1.0;
  /// Fixed outer radius; chosen from the WKB decay when empty.
  std::optional<double> r_max;
  /// Scan resolution for non-monotone problems.
  int scan_points = 600;
  /// Refine (and gate convergence on) this node label only; all when empty.
  std::optional<int> target;
  /// With a target: keep only the transition of that label nearest this.
  std::optional<double> target_near;
};

struct Eigenvalue {
  double value = 0.0;
  int nodes = 0;           // node label of the state
  double richardson = 0.0; // |R(h/2) - R(h/4)| / |R|
};

struct OracleReport {
  std::vector<Eigenvalue> eigenvalues;  // ascending
  double residual_max = 0.0;
  double norm = 0.0;
  int grid_points = 0;
  double r_max = 0.0;

  std::vector<double> values() const;
  /// Eigenvalue with the given node label closest to `near`.
  std::optional<Eigenvalue> find(int nodes, double near) const;
};

/// The `count` lowest eigenvalues (node labels 0..count-1) of a monotone
/// problem, or every eigenvalue in the window for a non-monotone one (count
/// is then an upper bound on the node labels kept).
OracleReport solve_radial_eigen(const RadialProblem& problem, int count);

/// Discrete eigenvalue count below lambda on a fixed grid (exposed for tests).
int sturm_count(const RadialProblem& problem, double lambda, double r_max, int n_points);

// ---- first-order pairs ----------------------------------------------------

/// Y' = M(r; k) Y for Y = (phi1, phi2).
struct FirstOrderProblem {
  std::function<Eigen::Matrix2d(double r, double k)> M;
  double k_lo = 0.0;
  double k_hi = 0.0;
  int scan_points = 400;
  double r_scale = 1.0;
  /// Explicit ascending scan nodes; replaces the uniform scan when non-empty
  /// (levels crowding toward a continuum edge need a graded scan).
  std::vector<double> scan_nodes;
};

/// All roots of the normalized matching Wronskian in (k_lo, k_hi).
OracleReport solve_first_order_eigen(const FirstOrderProblem& problem);

// ---- residuals ------------------------------------------------------------

using RadialFn = std::function<Complex(double r)>;

/// max |v'' + v'/r + U v| / max(max |U v|, floor) over the grid, 5-point
/// central differences with h = rel_step * r.
double residual_second_order(const std::function<double(double)>& U, const RadialFn& v,
                             const std::vector<double>& grid, double rel_step = 1e-3,
                             double floor = 1e-300);

using PairFn = std::function<std::pair<Complex, Complex>(double r)>;

/// max |Y' - M Y| / max(|Y'|, |M Y|) for the pair Y = (phi1, phi2).
double residual_first_order_pair(const std::function<Eigen::Matrix2d(double)>& M, const PairFn& pair,
                                 const std::vector<double>& grid, double rel_step = 1e-3);

using SpinorFn = std::function<Eigen::Vector4cd(double r)>;

struct DiracRadialOperator {
  std::function<double(double)> f0, f1, f2;
  double L = 0.0;  // l + mu
  double m = 1.0;
  double k0 = 0.0;
  double k3 = 0.0;
};

/// Residual of rho3 pi0 + i rho2 Sigma3 pi3 + rho2 Sigma2 (d/dr + 1/2r)
///   + i rho2 Sigma1 (f2 - L + 1/2)/r - m applied to Phi(r).
double residual_dirac_operator(const DiracRadialOperator& op, const SpinorFn& phi,
                               const std::vector<double>& grid, double rel_step = 1e-3);

using Field2D = std::function<double(double z, double x0)>;
using Wave2D = std::function<Complex(double z, double x0)>;

/// Residual of {pi0^2 - m^2 - pi3^2 - kperp2 + i nu (dz f0 - d0 f1)} w with
/// pi0 = i d0 - f0, pi3 = i dz - f1, on the given (z, x0) points.
double residual_w_equation(const Field2D& f0, const Field2D& f1, int nu, double m, double kperp2,
                           const Wave2D& w, const std::vector<std::pair<double, double>>& points,
                           double step = 1e-3);

/// int_0^inf |v|^2 r dr with a tail estimate; throws Divergent.
double normalize(const RadialFn& v, double r_scale = 1.0);

/// 5-point central difference helpers.
template <typename F>
auto d1(const F& f, double x, double h) {
  return (f(x - 2 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h);
}
template <typename F>
auto d2(const F& f, double x, double h) {
  return (-f(x - 2 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2 * h)) / (12.0 * h * h);
}

}  // namespace abex::oracle
