#include "abex/oracle_problems.hpp"

#include <cmath>

namespace abex::oracle {

namespace {
double sq(double x) { return x * x; }
}  // namespace

double spin_tau(int s) { return s * (2.0 - s); }
double spin_delta(int s) { return s * (5.0 - 3.0 * s) / 2.0; }

RadialProblem kg_case1_problem(const FieldParams& p, Window w) {
  RadialProblem pb;
  pb.U = [p](double r, double k0) {
    return sq(k0 - p.alpha / r) - sq(p.gamma * r - p.L) / sq(r) - sq(p.k3) - sq(p.m);
  };
  pb.monotone = false;
  pb.lambda_lo = w.lo;
  pb.lambda_hi = w.hi;
  pb.nu = [p](double) { return std::sqrt(std::max(0.0, sq(p.L) - sq(p.alpha))); };
  pb.r_scale = 1.0 / std::sqrt(sq(p.m) + sq(p.k3) + sq(p.gamma));
  return pb;
}

RadialProblem kg_case2_problem(const FieldParams& p, Window w) {
  RadialProblem pb;
  pb.U = [p](double r, double k0sq) {
    return k0sq - sq(p.m) - sq(p.k3 - p.alpha / r) - sq(p.gamma * r - p.L) / sq(r);
  };
  pb.lambda_lo = w.lo;
  pb.lambda_hi = w.hi;
  pb.nu = [p](double) { return std::sqrt(sq(p.L) + sq(p.alpha)); };
  pb.r_scale = 1.0 / std::sqrt(sq(p.m) + sq(p.k3) + sq(p.gamma));
  return pb;
}

RadialProblem case3_problem(const FieldParams& p, bool variant_b, int s, Window w) {
  const RadialProfile f = variant_b ? RadialProfile{RadialShape::R2PlusInverseR2, p.alpha, p.beta}
                                    : RadialProfile{RadialShape::InverseRPlusInverseR2, p.alpha, p.beta};
  const RadialProfile f2 = variant_b ? RadialProfile{RadialShape::Quadratic, 0, 0, p.gamma}
                                     : RadialProfile{RadialShape::Linear, 0, 0, p.gamma};
  const double tau = spin_tau(s), del = spin_delta(s);
  RadialProblem pb;
  pb.U = [=](double r, double k0) {
    const double kap = k0 - p.epsilon * p.k3;
    return sq(k0) - sq(p.k3) - sq(p.m) - 2.0 * kap * f.value(r) - sq(f2.value(r) - p.L + tau) / sq(r) +
           del * f2.derivative(r) / r;
  };
  pb.monotone = false;
  pb.lambda_lo = w.lo;
  pb.lambda_hi = w.hi;
  // r^2 U -> -(L - tau)^2 - 2 kappa beta at the origin
  pb.nu = [=](double k0) {
    return std::sqrt(std::max(0.0, sq(p.L - tau) + 2.0 * (k0 - p.epsilon * p.k3) * p.beta));
  };
  pb.r_scale = variant_b ? 1.0 / std::sqrt(std::abs(p.gamma) + 1e-3)
                         : 1.0 / std::sqrt(sq(p.m) + sq(p.k3) + sq(p.gamma));
  pb.scan_points = 800;
  return pb;
}

RadialProblem caseII_problem(const RadialProfile& f2, double L, int s, Window w, double r_scale) {
  const double tau = spin_tau(s), del = spin_delta(s);
  RadialProblem pb;
  pb.U = [=](double r, double kp2) {
    return kp2 - sq(f2.value(r) - L + tau) / sq(r) + del * f2.derivative(r) / r;
  };
  pb.lambda_lo = w.lo;
  pb.lambda_hi = w.hi;
  pb.r_scale = r_scale;
  return pb;
}

RadialProblem caseII_problem(const FieldParams& p, int s, Window w) {
  const RadialProfile f2{RadialShape::Linear, 0, 0, p.gamma};
  RadialProblem pb = caseII_problem(f2, p.L, s, w, 1.0 / std::abs(p.gamma));
  const double tau = spin_tau(s);
  pb.nu = [=](double) { return std::abs(p.L - tau); };
  return pb;
}

RadialProblem schrodinger_problem(const RadialProfile& f0, const RadialProfile& f1, const RadialProfile& f2,
                                  double L, double m, double k3, Window w, double r_scale) {
  RadialProblem pb;
  pb.U = [=](double r, double k0) {
    return 2.0 * m * (k0 - f0.value(r)) - sq(f2.value(r) - L) / sq(r) - sq(k3 - f1.value(r));
  };
  pb.lambda_lo = w.lo;
  pb.lambda_hi = w.hi;
  pb.r_scale = r_scale;
  return pb;
}

Eigen::Matrix2d dirac_case1_matrix(const FieldParams& p, double k0, double r) {
  const double f = p.alpha / r, f2 = p.gamma * r;
  const double lam1 = std::sqrt(sq(p.m) + sq(p.k3));
  Eigen::Matrix2d M;
  M << -(f2 - p.L + 1.0) / r, k0 - f + p.zeta * lam1,
       -(k0 - f - p.zeta * lam1), (f2 - p.L) / r;
  return M;
}

Eigen::Matrix2d dirac_case2_matrix(const FieldParams& p, double k0, double r) {
  const double f = p.alpha / r, f2 = p.gamma * r;
  const double lam2 = std::sqrt(std::max(0.0, sq(k0) - sq(p.m)));
  Eigen::Matrix2d M;
  M << -(f2 - p.L + 1.0) / r, -(p.zeta * lam2 - p.k3 + f),
       p.zeta * lam2 + p.k3 - f, (f2 - p.L) / r;
  return M;
}

FirstOrderProblem dirac_case1_problem(const FieldParams& p, Window w) {
  FirstOrderProblem pb;
  pb.M = [p](double r, double k0) { return dirac_case1_matrix(p, k0, r); };
  pb.k_lo = w.lo;
  pb.k_hi = w.hi;
  pb.r_scale = 1.0 / std::sqrt(sq(p.m) + sq(p.k3) + sq(p.gamma));
  return pb;
}

FirstOrderProblem dirac_case2_problem(const FieldParams& p, Window w) {
  FirstOrderProblem pb;
  pb.M = [p](double r, double k0) { return dirac_case2_matrix(p, k0, r); };
  pb.k_lo = w.lo;
  pb.k_hi = w.hi;
  pb.r_scale = 1.0 / std::sqrt(sq(p.m) + sq(p.k3) + sq(p.gamma));
  return pb;
}

}  // namespace abex::oracle
