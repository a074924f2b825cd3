#include "abex/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace abex {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sq(double x) { return x * x; }

int tau_s(int s) { return s * (2 - s); }
double delta_s(int s) { return 0.5 * s * (5 - 3 * s); }

void check_component(RadialCase rc, int s) {
  const bool scalar_only = rc == RadialCase::SchrodingerA || rc == RadialCase::SchrodingerB;
  if (s < 0 || s > 2 || (scalar_only && s != 0)) {
    throw Error(ErrorCode::DomainError, "component index s out of range for this case");
  }
}

double checked_sqrt(double v, ErrorCode code, const char* what) {
  if (!(v >= 0.0)) {
    std::ostringstream os;
    os << what << " is negative (" << v << ")";
    throw Error(code, os.str());
  }
  return std::sqrt(v);
}

// Unsnapped (p, n, scale, map); throws on imaginary scale or negative discriminant.
RadialIndexSet raw_indices(RadialCase rc, int s, const StateParams& q, double k0) {
  check_component(rc, s);
  const double L = q.L();
  RadialIndexSet out;
  out.s = s;
  switch (rc) {
    case RadialCase::Case1:
    case RadialCase::Case2: {
      const double E2 = sq(q.m) + sq(q.k3) + sq(q.gamma) - sq(k0);
      if (!(E2 > 0.0)) throw Error(ErrorCode::ScaleImaginary, "E^2 = m^2+k3^2+gamma^2-k0^2 <= 0");
      const double E = std::sqrt(E2);
      const double t = L - 0.25 * s * (3 - s);
      const bool c1 = rc == RadialCase::Case1;
      const double disc = c1 ? sq(t) - sq(q.alpha) : sq(t) + sq(q.alpha);
      const double root = checked_sqrt(disc, ErrorCode::DiscriminantNegative, "(l+mu-t)^2 - alpha^2");
      const double B = (q.gamma * t + (c1 ? -k0 : q.k3) * q.alpha) / E;
      out.n = B + 0.25 * (3 * s + 1) * (s - 2) - root;
      out.p = B + 0.25 * (2 - 3 * s) * (s - 1) + root;
      out.x_scale = E;
      out.x_of_r = XMap::TwoRE;
      break;
    }
    case RadialCase::Case3a: {
      const double E2 = sq(q.m) + sq(q.k3) + sq(q.gamma) - sq(k0);
      if (!(E2 > 0.0)) throw Error(ErrorCode::ScaleImaginary, "E^2 = m^2+k3^2+gamma^2-k0^2 <= 0");
      const double E = std::sqrt(E2);
      const double kap = k0 - q.epsilon * q.k3;
      const double b = q.gamma * (L - tau_s(s) + 0.5 * delta_s(s)) - q.alpha * kap;
      const double a = checked_sqrt(sq(L - tau_s(s)) + 2.0 * q.beta * kap,
                                    ErrorCode::DiscriminantNegative, "a_s^2");
      out.p = b / E - 0.5 + a;
      out.n = b / E - 0.5 - a;
      out.x_scale = E;
      out.x_of_r = XMap::TwoRE;
      break;
    }
    case RadialCase::Case3b: {
      const double kap = k0 - q.epsilon * q.k3;
      const double E02 = sq(q.gamma) + 2.0 * q.alpha * kap;
      if (!(E02 > 0.0)) throw Error(ErrorCode::ScaleImaginary, "E0^2 = gamma^2+2 alpha(k0-eps k3) <= 0");
      const double E0 = std::sqrt(E02);
      const double bt = 2.0 * q.gamma * (L - tau_s(s) + delta_s(s)) + sq(k0) - sq(q.k3) - sq(q.m);
      const double a = checked_sqrt(sq(L - tau_s(s)) + 2.0 * q.beta * kap,
                                    ErrorCode::DiscriminantNegative, "a_s^2");
      out.p = bt / (4.0 * E0) - 0.5 + 0.5 * a;
      out.n = bt / (4.0 * E0) - 0.5 - 0.5 * a;
      out.x_scale = E0;
      out.x_of_r = XMap::R2E0;
      break;
    }
    case RadialCase::CaseII: {
      const double kperp2 = k0;
      const double K2 = sq(q.gamma) - kperp2;
      if (!(K2 > 0.0)) throw Error(ErrorCode::ScaleImaginary, "gamma^2 - k_perp^2 <= 0");
      const double K = std::sqrt(K2);
      const double c = q.gamma / K * (L + 0.25 * s * (s - 3)) - 0.5;
      const double a = std::abs(L - tau_s(s));
      out.p = c + a;
      out.n = c - a;
      out.x_scale = K;
      out.x_of_r = XMap::TwoRE;
      break;
    }
    case RadialCase::SchrodingerA: {
      const double a = sq(L) + sq(q.beta) + 2.0 * q.m * q.delta + 4.0 * q.m * q.lambda * q.k3;
      const double ra = checked_sqrt(a, ErrorCode::DiscriminantNegative, "a");
      const double b = q.gamma * L + q.beta * q.k3 - q.alpha * q.m;
      const double E = sq(q.gamma) + sq(q.k3) - 2.0 * q.m * k0;
      if (!(E > 0.0)) throw Error(ErrorCode::ScaleImaginary, "E = gamma^2+k3^2-2 m k0 <= 0");
      const double rE = std::sqrt(E);
      out.p = b / rE - 0.5 + ra;
      out.n = b / rE - 0.5 - ra;
      out.x_scale = rE;
      out.x_of_r = XMap::TwoRSqrtE;
      break;
    }
    case RadialCase::SchrodingerB: {
      const double a = sq(L) + 2.0 * q.beta * q.m + 4.0 * q.m * q.lambda * q.k3;
      const double ra = checked_sqrt(a, ErrorCode::DiscriminantNegative, "a");
      const double b = sq(q.gamma) + 2.0 * q.alpha * q.m + 4.0 * q.m * q.delta * q.k3;
      if (!(b > 0.0)) throw Error(ErrorCode::ScaleImaginary, "b = gamma^2+2 alpha m+4 m delta k3 <= 0");
      const double rb = std::sqrt(b);
      const double E = 2.0 * q.m * k0 + 2.0 * q.gamma * L - sq(q.k3) - 8.0 * q.delta * q.lambda * sq(q.m);
      out.p = E / (4.0 * rb) - 0.5 + 0.5 * ra;
      out.n = E / (4.0 * rb) - 0.5 - 0.5 * ra;
      out.x_scale = rb;
      out.x_of_r = XMap::SqrtBR2;
      break;
    }
  }
  return out;
}

bool near_integer(double n, int target, double tol = 1e-8) {
  return std::abs(n - target) <= tol * std::max(1.0, std::abs(n));
}

}  // namespace

std::string_view to_string(Equation e) {
  switch (e) {
    case Equation::Dirac: return "Dirac";
    case Equation::KleinGordon: return "KleinGordon";
    case Equation::Schrodinger: return "Schrodinger";
  }
  return "?";
}

double RadialIndexSet::x(double r) const {
  switch (x_of_r) {
    case XMap::TwoRE:
    case XMap::TwoRSqrtE: return 2.0 * r * x_scale;
    case XMap::R2E0:
    case XMap::SqrtBR2: return r * r * x_scale;
  }
  return kNaN;
}

double RadialIndexSet::dx_dr(double r) const {
  switch (x_of_r) {
    case XMap::TwoRE:
    case XMap::TwoRSqrtE: return 2.0 * x_scale;
    case XMap::R2E0:
    case XMap::SqrtBR2: return 2.0 * r * x_scale;
  }
  return kNaN;
}

double snap_index(double n, double tol) {
  const double r = std::round(n);
  return std::abs(n - r) <= tol * std::max(1.0, std::abs(r)) ? r : n;
}

RadialIndexSet radial_indices(RadialCase rc, int s, const StateParams& params, double k0) {
  RadialIndexSet idx = raw_indices(rc, s, params, k0);
  const double snapped = snap_index(idx.n);
  idx.p += snapped - idx.n;
  idx.n = snapped;
  return idx;
}

// ---------------------------------------------------------------------------

namespace {

StateParams params_from(const QuantumNumbers& qn, double mu) {
  StateParams q;
  q.l = qn.l;
  q.mu = mu;
  q.k3 = qn.k3;
  q.zeta = qn.zeta;
  return q;
}

void fill_indices(SpectralResult& res, RadialCase rc, const StateParams& q, double k0,
                  const std::vector<std::pair<int, int>>& targets) {
  res.index_consistent = true;
  for (const auto& [s, target] : targets) {
    try {
      auto idx = radial_indices(rc, s, q, k0);
      if (!near_integer(idx.n, target)) res.index_consistent = false;
      res.indices.push_back(idx);
    } catch (const Error&) {
      res.index_consistent = false;
    }
  }
}

}  // namespace

SpectralResult energy_case1(const QuantumNumbers& qn, double mu, double alpha, double gamma, double m) {
  if (qn.n < 0) throw Error(ErrorCode::DomainError, "n must be >= 0");
  const bool dirac = qn.equation == Equation::Dirac;
  if (!dirac && qn.equation != Equation::KleinGordon) {
    throw Error(ErrorCode::DomainError, "subcase I.1 needs Dirac or KleinGordon");
  }
  const double L = qn.l + mu;
  const double Lt = dirac ? L - 0.5 : L;
  const double disc = sq(Lt) - sq(alpha);
  if (disc < 0.0) {
    throw Error(ErrorCode::SubcriticalCharge, "(l+mu-tau)^2 < alpha^2: supercritical charge");
  }
  const double root = std::sqrt(disc);
  const double N = qn.n + (dirac ? 0.0 : 0.5) + root;
  const double den = sq(N) + sq(alpha);
  const double edge2 = sq(m) + sq(qn.k3) + sq(gamma);
  const double rad = den * edge2 - sq(gamma * Lt);
  if (rad < 0.0) throw Error(ErrorCode::NoBoundState, "negative radicand in the energy formula");
  SpectralResult res;
  res.k0 = (alpha * gamma * Lt + N * std::sqrt(rad)) / den;
  res.alternate_roots.push_back((alpha * gamma * Lt - N * std::sqrt(rad)) / den);
  res.k0_squared = sq(res.k0);
  const double E2 = edge2 - res.k0_squared;
  if (!(E2 > 0.0)) throw Error(ErrorCode::NoBoundState, "E^2 <= 0 at the quantized energy");
  res.scale_E = std::sqrt(E2);
  res.tau = dirac ? 1.0 : 0.0;
  res.boundary_case = disc == 0.0;

  StateParams q = params_from(qn, mu);
  q.alpha = alpha;
  q.gamma = gamma;
  q.m = m;
  if (dirac) {
    fill_indices(res, RadialCase::Case1, q, res.k0, {{1, qn.n - 1}, {2, qn.n}});
    if (qn.n == 0) {
      const double lam1 = std::sqrt(sq(m) + sq(qn.k3));
      auto omega = [&](int z) { return gamma * alpha - res.k0 * Lt + z * lam1 * root; };
      res.required_zeta = std::abs(omega(1)) <= std::abs(omega(-1)) ? 1 : -1;
    }
  } else {
    fill_indices(res, RadialCase::Case1, q, res.k0, {{0, qn.n}});
  }
  return res;
}

SpectralResult energy_case2(const QuantumNumbers& qn, double mu, double alpha, double gamma, double m,
                            int tau) {
  if (qn.n < 0) throw Error(ErrorCode::DomainError, "n must be >= 0");
  if (tau != 0 && tau != 1) throw Error(ErrorCode::DomainError, "tau must be 0 or 1");
  const double L = qn.l + mu;
  const double Lt = L - 0.5 * tau;
  const double root = std::sqrt(sq(Lt) + sq(alpha));
  const double den = qn.n + 0.5 * (1 - tau) + root;
  const double num = gamma * Lt + qn.k3 * alpha;
  const double k02 = sq(m) + sq(qn.k3) + sq(gamma) - sq(num / den);
  if (k02 < 0.0) throw Error(ErrorCode::NoBoundState, "k0^2 < 0");
  SpectralResult res;
  res.k0_squared = k02;
  res.k0 = std::sqrt(k02);
  res.alternate_roots.push_back(-res.k0);
  res.scale_E = std::abs(num) / den;
  res.tau = tau;
  res.boundary_case = root == 0.0;

  StateParams q = params_from(qn, mu);
  q.alpha = alpha;
  q.gamma = gamma;
  q.m = m;
  if (tau == 1) {
    fill_indices(res, RadialCase::Case2, q, res.k0, {{1, qn.n - 1}, {2, qn.n}});
    if (qn.n == 0 && res.k0 >= m) {
      const double lam2 = std::sqrt(k02 - sq(m));
      auto omega = [&](int z) { return lam2 * root + z * (qn.k3 * Lt - gamma * alpha); };
      res.required_zeta = std::abs(omega(1)) <= std::abs(omega(-1)) ? 1 : -1;
    }
  } else {
    fill_indices(res, RadialCase::Case2, q, res.k0, {{0, qn.n}});
  }
  return res;
}

// ---------------------------------------------------------------------------

namespace {

struct Case3Fn {
  RadialCase rc;
  StateParams q;
  int s;
  int target;

  double operator()(double k0) const {
    try {
      return raw_indices(rc, s, q, k0).n - target;
    } catch (const Error&) {
      return kNaN;
    }
  }
};

}  // namespace

Case3Window case3_default_window(Case3Variant variant, double alpha, double beta, double gamma,
                                 double m, double k3, double L, int target_n) {
  const double edge = std::sqrt(sq(m) + sq(k3) + sq(gamma));
  if (variant == Case3Variant::A) return {-edge + 1e-6, edge - 1e-6, 2000};
  StateParams q;
  q.l = 0;
  q.mu = L;
  q.alpha = alpha;
  q.beta = beta;
  q.gamma = gamma;
  q.m = m;
  q.k3 = k3;
  double K = 1.0 + edge + std::abs(alpha) + std::abs(beta);
  for (int i = 0; i < 40; ++i) {
    bool done = true;
    for (double k : {K, -K}) {
      for (int s = 0; s <= 2; ++s) {
        for (int eps : {1, -1}) {
          q.epsilon = eps;
          const double v = Case3Fn{RadialCase::Case3b, q, s, target_n}(k);
          if (std::isfinite(v) && v < 1.5) done = false;
        }
      }
    }
    if (done) break;
    K *= 1.5;
  }
  return {-K, K, 4000};
}

SpectralResult energy_case3(const QuantumNumbers& qn, double mu, Case3Variant variant, double alpha,
                            double beta, double gamma, int epsilon, double m, int s, int target_n,
                            std::optional<Case3Window> window) {
  if (target_n < 0) throw Error(ErrorCode::DomainError, "target n must be >= 0");
  if (epsilon != 1 && epsilon != -1) throw Error(ErrorCode::DomainError, "epsilon must be +-1");
  StateParams q = params_from(qn, mu);
  q.alpha = alpha;
  q.beta = beta;
  q.gamma = gamma;
  q.m = m;
  q.epsilon = epsilon;
  const RadialCase rc = variant == Case3Variant::A ? RadialCase::Case3a : RadialCase::Case3b;
  const Case3Window w =
      window ? *window : case3_default_window(variant, alpha, beta, gamma, m, qn.k3, q.L(), target_n);
  const Case3Fn g{rc, q, s, target_n};

  std::vector<double> roots;
  bool discriminant_hit = false;
  double prev_k = w.lo;
  double prev_v = g(prev_k);
  for (int i = 1; i <= w.points; ++i) {
    const double k = w.lo + (w.hi - w.lo) * i / w.points;
    const double v = g(k);
    if (std::isfinite(prev_v) && std::isfinite(v) && (prev_v == 0.0 || prev_v * v < 0.0)) {
      double a = prev_k, b = k, fa = prev_v;
      if (fa == 0.0) {
        b = a;
      } else {
        for (int it = 0; it < 200 && b - a > 4.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, std::abs(a)); ++it) {
          const double c = 0.5 * (a + b);
          const double fc = g(c);
          if (!std::isfinite(fc)) {
            discriminant_hit = true;
            break;
          }
          if ((fc < 0.0) == (fa < 0.0)) {
            a = c;
            fa = fc;
          } else {
            b = c;
          }
        }
      }
      const double root = 0.5 * (a + b);
      const double check = g(root);
      if (std::isfinite(check) && std::abs(check) <= 1e-10) {
        if (roots.empty() || std::abs(roots.back() - root) > 1e-9) roots.push_back(root);
      }
    }
    prev_k = k;
    prev_v = v;
  }
  if (roots.empty()) {
    if (discriminant_hit) throw Error(ErrorCode::DiscriminantNegative, "a_s^2 < 0 at candidate root");
    throw Error(ErrorCode::NoRootInBracket, "no root of n_s(k0) = n in the scan window");
  }
  // positive-energy branch first: largest root is primary
  std::sort(roots.begin(), roots.end(), std::greater<>());
  SpectralResult res;
  res.k0 = roots.front();
  res.k0_squared = sq(res.k0);
  res.alternate_roots.assign(roots.begin() + 1, roots.end());
  res.tau = tau_s(s);
  auto idx = radial_indices(rc, s, q, res.k0);
  res.scale_E = idx.x_scale;
  res.indices.push_back(idx);
  res.index_consistent = near_integer(idx.n, target_n);
  return res;
}

// ---------------------------------------------------------------------------

KPerpResult kperp_caseII(const QuantumNumbers& qn, double mu, double gamma, double tau) {
  if (qn.n < 0) throw Error(ErrorCode::DomainError, "n must be >= 0");
  if (tau != 0.0 && tau != 0.5) throw Error(ErrorCode::DomainError, "tau must be 0 or 1/2");
  const double L = qn.l + mu;
  if (gamma * (L - tau) < 0.0) {
    throw Error(ErrorCode::ConditionViolated, "gamma (l+mu-tau) < 0: no square-integrable states");
  }
  KPerpResult out;
  out.tau = tau;
  out.kperp2 = sq(gamma) * (1.0 - sq(L - tau) / sq(qn.n + 0.5 + std::abs(L)));
  out.n0 = qn.n;
  out.n2 = qn.n;
  if (tau == 0.5) {
    if (qn.l == 0) {
      throw Error(ErrorCode::UndefinedShift, "n1 shift l/|l| undefined for l = 0");
    }
    out.n1 = qn.n + (qn.l > 0 ? 1 : -1);
  }
  return out;
}

SpectralResult energy_schrodinger_a(const QuantumNumbers& qn, double mu, double alpha, double beta,
                                    double gamma, double delta, double lambda_c, double m) {
  if (qn.n < 0) throw Error(ErrorCode::DomainError, "n must be >= 0");
  const double L = qn.l + mu;
  const double a = sq(L) + sq(beta) + 2.0 * m * delta + 4.0 * m * lambda_c * qn.k3;
  if (a < 0.0) throw Error(ErrorCode::NegativeA, "a < 0");
  const double b = gamma * L + beta * qn.k3 - alpha * m;
  const double den = 2.0 * qn.n + 1.0 + 2.0 * std::sqrt(a);
  SpectralResult res;
  res.k0 = (sq(gamma) + sq(qn.k3) - 4.0 * sq(b) / sq(den)) / (2.0 * m);
  res.k0_squared = sq(res.k0);
  res.scale_E = 2.0 * std::abs(b) / den;  // sqrt(E)
  StateParams q = params_from(qn, mu);
  q.alpha = alpha;
  q.beta = beta;
  q.gamma = gamma;
  q.delta = delta;
  q.lambda = lambda_c;
  q.m = m;
  if (b > 0.0) {
    fill_indices(res, RadialCase::SchrodingerA, q, res.k0, {{0, qn.n}});
  } else {
    res.index_consistent = false;
  }
  return res;
}

SpectralResult energy_schrodinger_b(const QuantumNumbers& qn, double mu, double alpha, double beta,
                                    double gamma, double delta, double lambda_c, double m) {
  if (qn.n < 0) throw Error(ErrorCode::DomainError, "n must be >= 0");
  const double L = qn.l + mu;
  const double a = sq(L) + 2.0 * beta * m + 4.0 * m * lambda_c * qn.k3;
  if (a < 0.0) throw Error(ErrorCode::NegativeA, "a < 0");
  const double b = sq(gamma) + 2.0 * alpha * m + 4.0 * m * delta * qn.k3;
  if (!(b > 0.0)) throw Error(ErrorCode::NonpositiveB, "b <= 0");
  SpectralResult res;
  res.k0 = (2.0 * std::sqrt(b) * (2.0 * qn.n + 1.0 + std::sqrt(a)) + sq(qn.k3) - 2.0 * gamma * L +
            8.0 * delta * lambda_c * sq(m)) /
           (2.0 * m);
  res.k0_squared = sq(res.k0);
  res.scale_E = std::sqrt(b);
  StateParams q = params_from(qn, mu);
  q.alpha = alpha;
  q.beta = beta;
  q.gamma = gamma;
  q.delta = delta;
  q.lambda = lambda_c;
  q.m = m;
  fill_indices(res, RadialCase::SchrodingerB, q, res.k0, {{0, qn.n}});
  return res;
}

}  // namespace abex
