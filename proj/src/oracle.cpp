#include "abex/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <Eigen/Eigenvalues>
#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>

#include "abex/dirac_matrices.hpp"

namespace abex::oracle {

namespace {

constexpr double kWkbDecay = 18.0;       // int sqrt(-U) dr past the turning point
constexpr double kRichardsonTol = 1e-6;  // relative agreement of two extrapolants
constexpr int kBaseGrid = 4000;
constexpr int kMaxGrid = 128000;

double origin_exponent(const RadialProblem& pb, double lam) {
  if (pb.nu) return pb.nu(lam);
  const double r1 = 1e-3 * pb.r_scale;
  double c[3];
  for (int k = 0; k < 3; ++k) {
    const double r = (k + 1) * r1;
    c[k] = r * r * pb.U(r, lam);
  }
  const double c0 = 3.0 * c[0] - 3.0 * c[1] + c[2];
  const double mag = std::max({std::abs(c[0]), std::abs(c[1]), std::abs(c[2]), 1.0});
  if (c0 > 1e-7 * mag) {
    throw Error(ErrorCode::DomainError, "radial problem has an attractive 1/r^2 core; no regular solution");
  }
  return std::abs(c0) < 1e-7 * mag ? 0.0 : std::sqrt(-c0);
}

// Symmetric tridiagonal (diag, off) of the weighted operator
// -(w g')' - w (U + nu^2/r^2) g with v = r^nu g, w = r^(2 nu + 1), on the
// nodes r_i = i h, i = 0..N-1, Dirichlet at r_N. Returns the negative pivot
// count of its LDL^T factorization.
struct WeightCache {
  double e = -1.0, h = 0.0;
  int N = 0;
  std::vector<double> node, half;  // w(i h), w((i + 1/2) h)
};

const WeightCache& weights(double e, double h, int N) {
  thread_local WeightCache c;
  if (c.e != e || c.h != h || c.N != N) {
    c.e = e;
    c.h = h;
    c.N = N;
    c.node.resize(N);
    c.half.resize(N);
    for (int i = 0; i < N; ++i) {
      c.node[i] = std::pow(i * h, e);
      c.half[i] = std::pow((i + 0.5) * h, e);
    }
  }
  return c;
}

// lim r Ut(r) as r -> 0 when Ut ~ c/r there; 0 when no stable limit exists.
template <typename F>
double coulomb_coefficient(const F& Ut, double scale) {
  auto g = [&](double r) { return r * Ut(r); };
  const double r1 = 1e-4 * scale;
  const double e1 = 2.0 * g(r1) - g(2.0 * r1);  // c + O(r^2)
  const double e2 = 2.0 * g(0.5 * r1) - g(r1);
  if (!std::isfinite(e1) || !std::isfinite(e2)) return 0.0;
  return std::abs(e1 - e2) <= 1e-6 * std::max(1.0, std::abs(e2)) ? e2 : 0.0;
}

int count_negative(const RadialProblem& pb, double lam, double r_max, int N) {
  const double nu = origin_exponent(pb, lam);
  const double e = 2.0 * nu + 1.0;
  const double h = r_max / N;
  const WeightCache& w = weights(e, h, N);
  auto Ut = [&](double r) { return pb.U(r, lam) + nu * nu / (r * r); };
  // Coulomb part c/r of Ut: w c / r ~ r^(2 nu) is integrated exactly per
  // cell, otherwise the midpoint rule converges only as h^(2 nu + 1)
  const double c = coulomb_coefficient(Ut, pb.r_scale);

  // first half-cell: r = H t^(1/e) makes the integrand smooth in t
  const double H = 0.5 * h;
  const double m0 = boost::math::quadrature::gauss<double, 20>::integrate(
      [&](double t) {
        if (t <= 0.0) return 0.0;
        const double te = std::pow(t, 1.0 / e);
        return std::pow(H, e + 1.0) / e * te * Ut(H * te);
      },
      0.0, 1.0);

  int negatives = 0;
  double d = w.half[0] / h - m0;
  double off = -w.half[0] / h;
  const double tiny = std::numeric_limits<double>::min();
  if (d < 0.0) ++negatives;
  for (int i = 1; i < N; ++i) {
    const double r = i * h;
    const double mass = w.node[i] * (Ut(r) - c / r) * h + c * (w.half[i] - w.half[i - 1]) / e;
    const double diag = (w.half[i - 1] + w.half[i]) / h - mass;
    if (d == 0.0) d = tiny;
    d = diag - off * off / d;
    off = -w.half[i] / h;
    if (d < 0.0) ++negatives;
  }
  return negatives;
}

double bisect_transition(const RadialProblem& pb, double lo, double hi, int c_lo, double r_max, int N) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_negative(pb, mid, r_max, N) == c_lo) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// Outer radius where the WKB decay past the last allowed point reaches kWkbDecay.
double wkb_radius(const RadialProblem& pb, double lam) {
  const double s = pb.r_scale;
  double r = 0.01 * s;
  double action = 0.0;
  bool seen_allowed = false;
  while (r < 1e5 * s) {
    const double dr = 0.01 * s * std::max(1.0, r / s);
    const double u = pb.U(r + 0.5 * dr, lam);
    if (u > 0.0) {
      action = 0.0;
      seen_allowed = true;
    } else if (seen_allowed || r > s) {
      action += std::sqrt(-u) * dr;
    }
    r += dr;
    if (action >= kWkbDecay) return r;
  }
  throw Error(ErrorCode::NoBoundStateFound, "no exponential decay within 1e5 length scales");
}

struct Transition {
  double value;
  int nodes;
  double bracket;  // half width used to re-locate on finer grids
};

std::vector<Transition> transitions_on_grid(const RadialProblem& pb, int count, double r_max, int N) {
  std::vector<Transition> out;
  if (pb.monotone) {
    const int c_lo = count_negative(pb, pb.lambda_lo, r_max, N);
    const int c_hi = count_negative(pb, pb.lambda_hi, r_max, N);
    for (int k = c_lo; k < std::min(c_hi, count); ++k) {
      double lo = pb.lambda_lo, hi = pb.lambda_hi;
      for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        if (count_negative(pb, mid, r_max, N) <= k) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
      out.push_back({0.5 * (lo + hi), k, 0.0});
    }
    return out;
  }
  const int M = std::max(pb.scan_points, 10);
  const double step = (pb.lambda_hi - pb.lambda_lo) / M;
  std::vector<int> counts(M + 1);
  for (int j = 0; j <= M; ++j) counts[j] = count_negative(pb, pb.lambda_lo + j * step, r_max, N);
  for (int j = 0; j < M; ++j) {
    if (counts[j] == counts[j + 1]) continue;
    // split until each sub-bracket holds a single unit step
    std::vector<std::array<double, 2>> stack{{pb.lambda_lo + j * step, pb.lambda_lo + (j + 1) * step}};
    while (!stack.empty()) {
      auto [a, b] = stack.back();
      stack.pop_back();
      const int ca = count_negative(pb, a, r_max, N);
      const int cb = count_negative(pb, b, r_max, N);
      if (ca == cb) continue;
      if (std::abs(ca - cb) == 1 || b - a < 1e-13 * std::max(1.0, std::abs(a))) {
        const double x = bisect_transition(pb, a, b, ca, r_max, N);
        const int label = std::min(ca, cb);
        if (label < count) out.push_back({x, label, step});
        continue;
      }
      const double mid = 0.5 * (a + b);
      stack.push_back({a, mid});
      stack.push_back({mid, b});
    }
  }
  std::sort(out.begin(), out.end(), [](const Transition& x, const Transition& y) { return x.value < y.value; });
  return out;
}

// Re-locate a coarse transition on a finer grid.
double refine_transition(const RadialProblem& pb, const Transition& t, double r_max, int N) {
  if (pb.monotone) {
    double lo = pb.lambda_lo, hi = pb.lambda_hi;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (count_negative(pb, mid, r_max, N) <= t.nodes) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return 0.5 * (lo + hi);
  }
  double half = t.bracket;
  for (int grow = 0; grow < 40; ++grow, half *= 2.0) {
    const double a = std::max(pb.lambda_lo, t.value - half);
    const double b = std::min(pb.lambda_hi, t.value + half);
    if (grow > 6 && a == pb.lambda_lo && b == pb.lambda_hi) break;
    const int ca = count_negative(pb, a, r_max, N);
    const int cb = count_negative(pb, b, r_max, N);
    if (std::abs(ca - cb) == 1 && std::min(ca, cb) == t.nodes) {
      return bisect_transition(pb, a, b, ca, r_max, N);
    }
  }
  throw Error(ErrorCode::GridTooCoarse, "eigenvalue transition lost under grid refinement");
}

}  // namespace

std::vector<double> OracleReport::values() const {
  std::vector<double> v;
  for (const auto& e : eigenvalues) v.push_back(e.value);
  return v;
}

std::optional<Eigenvalue> OracleReport::find(int nodes, double near) const {
  std::optional<Eigenvalue> best;
  for (const auto& e : eigenvalues) {
    if (nodes >= 0 && e.nodes != nodes) continue;
    if (!best || std::abs(e.value - near) < std::abs(best->value - near)) best = e;
  }
  return best;
}

int sturm_count(const RadialProblem& problem, double lambda, double r_max, int n_points) {
  return count_negative(problem, lambda, r_max, n_points);
}

OracleReport solve_radial_eigen(const RadialProblem& pb, int count) {
  if (!pb.U || !(pb.lambda_hi > pb.lambda_lo)) {
    throw Error(ErrorCode::ConfigError, "radial problem needs U and an ordered window");
  }
  // outer radius: grow until every located state has decayed
  double r_max = pb.r_max.value_or(20.0 * pb.r_scale);
  if (!pb.r_max) {
    // start with a box that holds states at either end of the window
    for (double lam : {pb.lambda_lo, pb.lambda_hi}) {
      try {
        r_max = std::max(r_max, wkb_radius(pb, lam));
      } catch (const Error&) {
      }
    }
  }
  auto grid_for = [&](double R) {
    return std::clamp(static_cast<int>(std::ceil(200.0 * R / pb.r_scale)), kBaseGrid, kMaxGrid / 4);
  };
  // locate on a cheap grid; the refinement below re-brackets each transition
  auto scan_grid = [&](double R) {
    return pb.monotone ? grid_for(R) : std::clamp(static_cast<int>(std::ceil(40.0 * R / pb.r_scale)), 800, 8000);
  };
  std::vector<Transition> coarse;
  for (int pass = 0; pass < 10; ++pass) {
    coarse = transitions_on_grid(pb, count, r_max, scan_grid(r_max));
    if (pb.r_max || coarse.empty()) break;
    double need = 0.0;
    for (const auto& t : coarse) need = std::max(need, wkb_radius(pb, t.value));
    if (need <= r_max) break;
    // a too-small box pushes states up towards the edge, where the WKB
    // radius explodes; grow in bounded steps and re-locate
    r_max = std::min(1.1 * need, 4.0 * r_max);
  }
  if (coarse.empty()) throw Error(ErrorCode::NoBoundStateFound, "no eigenvalue in the search window");

  if (pb.target) {
    std::erase_if(coarse, [&](const Transition& t) { return t.nodes != *pb.target; });
    if (pb.target_near && coarse.size() > 1) {
      const auto best = std::min_element(coarse.begin(), coarse.end(), [&](const Transition& a, const Transition& b) {
        return std::abs(a.value - *pb.target_near) < std::abs(b.value - *pb.target_near);
      });
      coarse = {*best};
    }
    if (coarse.empty()) throw Error(ErrorCode::NoBoundStateFound, "no eigenvalue with the requested node count");
  }

  OracleReport rep;
  rep.r_max = r_max;
  int N = grid_for(r_max);
  const double lambda_floor = 1e-3 * std::max(std::abs(pb.lambda_lo), std::abs(pb.lambda_hi));
  for (;;) {
    bool ok = true;
    std::vector<Eigenvalue> found;
    for (const auto& t : coarse) {
      const double l1 = refine_transition(pb, t, r_max, N);
      const double l2 = refine_transition(pb, t, r_max, 2 * N);
      const double l3 = refine_transition(pb, t, r_max, 4 * N);
      const double r12 = (4.0 * l2 - l1) / 3.0;
      const double r23 = (4.0 * l3 - l2) / 3.0;
      // relative, with a floor for levels at zero (e.g. the s = 1 zero mode)
      const double spread = std::abs(r23 - r12) / std::max(std::abs(r23), lambda_floor);
      if (spread > kRichardsonTol) ok = false;
      found.push_back({r23, t.nodes, spread});
    }
    rep.grid_points = 4 * N;
    rep.eigenvalues = found;
    if (ok) break;
    if (4 * N >= kMaxGrid) {
      throw Error(ErrorCode::GridTooCoarse, "Richardson extrapolants disagree beyond 1e-6");
    }
    N *= 2;
  }
  std::sort(rep.eigenvalues.begin(), rep.eigenvalues.end(),
            [](const Eigenvalue& a, const Eigenvalue& b) { return a.value < b.value; });
  return rep;
}

// ---- first-order shooting --------------------------------------------------

namespace {

using State = std::array<double, 2>;

Eigen::Vector2d integrate_pair(const std::function<Eigen::Matrix2d(double)>& M, Eigen::Vector2d y0, double r0,
                               double r1, bool log_variable) {
  namespace ode = boost::numeric::odeint;
  State y{y0(0), y0(1)};
  auto rhs = [&](const State& x, State& dx, double t) {
    const double r = log_variable ? std::exp(t) : t;
    const Eigen::Matrix2d m = M(r) * (log_variable ? r : 1.0);
    dx[0] = m(0, 0) * x[0] + m(0, 1) * x[1];
    dx[1] = m(1, 0) * x[0] + m(1, 1) * x[1];
  };
  const double t0 = log_variable ? std::log(r0) : r0;
  const double t1 = log_variable ? std::log(r1) : r1;
  const double dt = (t1 - t0) * 1e-4;
  ode::integrate_adaptive(ode::make_controlled(1e-13, 1e-13, ode::runge_kutta_dopri5<State>()), rhs, y, t0, t1,
                          dt);
  return {y[0], y[1]};
}

// Normalized matching Wronskian; NaN outside the bound-state region.
double matching_wronskian(const FirstOrderProblem& pb, double k) {
  const double s = pb.r_scale;
  auto Mk = [&](double r) { return pb.M(r, k); };

  const double r_tiny = 1e-9 * s;
  const Eigen::Matrix2d M0 = r_tiny * Mk(r_tiny);
  Eigen::EigenSolver<Eigen::Matrix2d> es0(M0);
  const auto ev0 = es0.eigenvalues();
  if (std::abs(ev0(0).imag()) > 1e-9 || std::abs(ev0(1).imag()) > 1e-9) return std::nan("");
  const int i0 = ev0(0).real() > ev0(1).real() ? 0 : 1;
  Eigen::Vector2d v0 = es0.eigenvectors().col(i0).real();
  if (v0(0) < 0.0 || (v0(0) == 0.0 && v0(1) < 0.0)) v0 = -v0;

  const double r_far = 1e6 * s;
  Eigen::EigenSolver<Eigen::Matrix2d> esf(Mk(r_far));
  const auto evf = esf.eigenvalues();
  if (std::abs(evf(0).imag()) > 1e-12 * std::abs(evf(0))) return std::nan("");
  const int idec = evf(0).real() < evf(1).real() ? 0 : 1;
  const double kappa = -evf(idec).real();
  if (!(kappa > 0.0)) return std::nan("");

  const double r_match = s;
  const double r_max = 10.0 * s + 40.0 / kappa;
  Eigen::EigenSolver<Eigen::Matrix2d> esm(Mk(r_max));
  const auto evm = esm.eigenvalues();
  const int im = evm(0).real() < evm(1).real() ? 0 : 1;
  Eigen::Vector2d vinf = esm.eigenvectors().col(im).real();
  if (vinf(0) < 0.0 || (vinf(0) == 0.0 && vinf(1) < 0.0)) vinf = -vinf;

  const Eigen::Vector2d yo = integrate_pair(Mk, v0.normalized(), 1e-6 * s, r_match, true);
  const Eigen::Vector2d yi = integrate_pair(Mk, vinf.normalized(), r_max, r_match, false);
  return (yo(0) * yi(1) - yo(1) * yi(0)) / (yo.norm() * yi.norm());
}

}  // namespace

OracleReport solve_first_order_eigen(const FirstOrderProblem& pb) {
  if (!pb.M || !(pb.k_hi > pb.k_lo)) throw Error(ErrorCode::ConfigError, "first-order problem needs M and a window");
  OracleReport rep;
  std::vector<double> nodes = pb.scan_nodes;
  if (nodes.empty()) {
    const int M = std::max(pb.scan_points, 10);
    for (int j = 0; j <= M; ++j) nodes.push_back(pb.k_lo + (pb.k_hi - pb.k_lo) * j / M);
  }
  double k_prev = nodes[0];
  double w_prev = matching_wronskian(pb, k_prev);
  for (size_t j = 1; j < nodes.size(); ++j) {
    const double k = nodes[j];
    const double w = matching_wronskian(pb, k);
    if (std::isfinite(w) && std::isfinite(w_prev) && (w == 0.0 || w * w_prev < 0.0)) {
      double root = k;
      if (w != 0.0) {
        std::uintmax_t iters = 200;
        auto tol = [](double a, double b) { return std::abs(a - b) <= 4e-15 * std::max(1.0, std::abs(a)); };
        auto [a, b] = boost::math::tools::toms748_solve([&](double x) { return matching_wronskian(pb, x); }, k_prev,
                                                        k, w_prev, w, tol, iters);
        root = 0.5 * (a + b);
      }
      // a sign flip of the eigenvector convention is not a root
      if (std::abs(matching_wronskian(pb, root)) < 1e-7) rep.eigenvalues.push_back({root, -1, 0.0});
    }
    k_prev = k;
    w_prev = w;
  }
  if (rep.eigenvalues.empty()) throw Error(ErrorCode::NoBoundStateFound, "no matching root in the window");
  return rep;
}

// ---- residuals --------------------------------------------------------------

double residual_second_order(const std::function<double(double)>& U, const RadialFn& v,
                             const std::vector<double>& grid, double rel_step, double floor) {
  double num = 0.0, den = 0.0;
  for (double r : grid) {
    const double h = rel_step * r;
    const Complex vr = v(r);
    const Complex res = d2(v, r, h) + d1(v, r, h) / r + U(r) * vr;
    num = std::max(num, std::abs(res));
    den = std::max(den, std::abs(U(r) * vr));
  }
  return num / std::max(den, floor);
}

double residual_first_order_pair(const std::function<Eigen::Matrix2d(double)>& M, const PairFn& pair,
                                 const std::vector<double>& grid, double rel_step) {
  double num = 0.0, den = 0.0;
  for (double r : grid) {
    const double h = rel_step * r;
    auto c1 = [&](double x) { return pair(x).first; };
    auto c2 = [&](double x) { return pair(x).second; };
    const auto [y1, y2] = pair(r);
    const Eigen::Matrix2d m = M(r);
    const Complex dy1 = d1(c1, r, h), dy2 = d1(c2, r, h);
    const Complex my1 = m(0, 0) * y1 + m(0, 1) * y2;
    const Complex my2 = m(1, 0) * y1 + m(1, 1) * y2;
    num = std::max({num, std::abs(dy1 - my1), std::abs(dy2 - my2)});
    den = std::max({den, std::abs(dy1), std::abs(dy2), std::abs(my1), std::abs(my2)});
  }
  return den > 0.0 ? num / den : 0.0;
}

double residual_dirac_operator(const DiracRadialOperator& op, const SpinorFn& phi,
                               const std::vector<double>& grid, double rel_step) {
  using namespace abex::dirac;
  const Complex i(0.0, 1.0);
  const Mat4 r3 = rho(3), r2s3 = rho(2) * Sigma(3), r2s2 = rho(2) * Sigma(2), r2s1 = rho(2) * Sigma(1);
  double num = 0.0, den = 0.0;
  for (double r : grid) {
    const double h = rel_step * r;
    const double pi0 = op.k0 - op.f0(r);
    const double pi3 = op.k3 - op.f1(r);
    const double g = (op.f2(r) - op.L + 0.5) / r;
    const Mat4 A = r3 * pi0 + i * r2s3 * pi3 + r2s2 / (2.0 * r) + i * r2s1 * g - op.m * Mat4::Identity();
    const Eigen::Vector4cd p = phi(r);
    Eigen::Vector4cd dp = Eigen::Vector4cd::Zero();
    for (int c = 0; c < 4; ++c) dp(c) = d1([&](double x) { return phi(x)(c); }, r, h);
    const Eigen::Vector4cd ap = A * p;
    const Eigen::Vector4cd kp = r2s2 * dp;
    num = std::max(num, (ap + kp).cwiseAbs().maxCoeff());
    den = std::max({den, ap.cwiseAbs().maxCoeff(), kp.cwiseAbs().maxCoeff()});
  }
  return den > 0.0 ? num / den : 0.0;
}

double residual_w_equation(const Field2D& f0, const Field2D& f1, int nu, double m, double kperp2, const Wave2D& w,
                           const std::vector<std::pair<double, double>>& points, double step) {
  const Complex i(0.0, 1.0);
  double num = 0.0, den = 0.0;
  for (auto [z, x0] : points) {
    const double h = step * std::max(1.0, std::max(std::abs(z), std::abs(x0)));
    auto wz = [&](double zz) { return w(zz, x0); };
    auto wt = [&](double tt) { return w(z, tt); };
    const Complex w0 = w(z, x0);
    const Complex w_t = d1(wt, x0, h), w_tt = d2(wt, x0, h);
    const Complex w_z = d1(wz, z, h), w_zz = d2(wz, z, h);
    const double F0 = f0(z, x0), F1 = f1(z, x0);
    const double d0f0 = d1([&](double t) { return f0(z, t); }, x0, h);
    const double dzf1 = d1([&](double zz) { return f1(zz, x0); }, z, h);
    const double dzf0 = d1([&](double zz) { return f0(zz, x0); }, z, h);
    const double d0f1 = d1([&](double t) { return f1(z, t); }, x0, h);
    // pi0^2 w and pi3^2 w, pi0 = i d0 - f0, pi3 = i dz - f1
    const Complex p0 = -w_tt - i * d0f0 * w0 - 2.0 * i * F0 * w_t + F0 * F0 * w0;
    const Complex p3 = -w_zz - i * dzf1 * w0 - 2.0 * i * F1 * w_z + F1 * F1 * w0;
    const Complex spin = i * static_cast<double>(nu) * (dzf0 - d0f1) * w0;
    const Complex res = p0 - m * m * w0 - p3 - kperp2 * w0 + spin;
    num = std::max(num, std::abs(res));
    den = std::max({den, std::abs(p0), std::abs(p3), std::abs(m * m * w0), std::abs(spin)});
  }
  return den > 0.0 ? num / den : 0.0;
}

double normalize(const RadialFn& v, double r_scale) {
  auto dens = [&](double r) { return std::norm(v(r)) * r; };
  auto piece = [&](double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(dens, a, b, 5, 1e-12);
  };
  double total = piece(0.5 * r_scale, r_scale);
  // toward the origin: halve until pieces are negligible
  auto march = [&](bool inward) {
    double a = inward ? 0.25 * r_scale : r_scale, b = inward ? 0.5 * r_scale : 2.0 * r_scale;
    double prev = std::numeric_limits<double>::infinity();
    int flat = 0;
    for (int k = 0; k < 400; ++k) {
      const double p = piece(a, b);
      if (!std::isfinite(p)) throw Error(ErrorCode::Divergent, "non-finite density");
      total += p;
      if (p <= 1e-17 * total) return;
      flat = (p >= 0.999 * prev) ? flat + 1 : 0;
      if (flat >= 5) throw Error(ErrorCode::Divergent, inward ? "density not integrable at r = 0"
                                                              : "density not integrable at infinity");
      prev = p;
      if (inward) {
        b = a;
        a *= 0.5;
      } else {
        a = b;
        b = inward ? b : b + std::max(r_scale, 0.5 * b);
      }
    }
    throw Error(ErrorCode::Divergent, "normalization integral failed to settle");
  };
  march(true);
  march(false);
  return total;
}

}  // namespace abex::oracle
