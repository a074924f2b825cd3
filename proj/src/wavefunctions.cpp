#include "abex/wavefunctions.hpp"

#include <cmath>
#include <numbers>

#include "abex/quadrature.hpp"

namespace abex {

namespace {

constexpr Complex kI{0.0, 1.0};

double sq(double x) { return x * x; }
using Vec2 = Eigen::Vector2d;

Complex csqrt(double v) { return std::sqrt(Complex(v, 0.0)); }

void check_r(double r) {
  if (!(r > 0.0)) throw Error(ErrorCode::DomainError, "radial samples need r > 0");
}

}  // namespace

double phase_Q(int l, long l0, double k0, double k3, double phi, double z, double x0, bool with_k0,
               bool with_k3) {
  double q = static_cast<double>(l - l0) * phi;
  if (with_k0) q -= k0 * x0;
  if (with_k3) q -= k3 * z;
  return q;
}

Complex radial_v(const RadialIndexSet& idx, Complex A, Complex B, double r) {
  check_r(r);
  const Complex x = idx.x(r);
  Complex v = 0.0;
  if (A != 0.0) v += A * laguerre_i(idx.p, idx.n, x);
  if (B != 0.0) v += B * laguerre_i(idx.n, idx.p, x);
  return v;
}

Complex radial_v_derivative(const RadialIndexSet& idx, Complex A, Complex B, double r) {
  check_r(r);
  const Complex x = idx.x(r);
  Complex d = 0.0;
  if (A != 0.0) d += A * laguerre_i_derivative(idx.p, idx.n, x);
  if (B != 0.0) d += B * laguerre_i_derivative(idx.n, idx.p, x);
  return d * idx.dx_dr(r);
}

SpinorCoefficients spinor_coefficients_case1(double m, double k3, int zeta) {
  SpinorCoefficients c;
  c.zeta = zeta;
  c.lambda1 = std::sqrt(m * m + k3 * k3);
  c.a = c.lambda1 + m + k3 + zeta * (c.lambda1 + m - k3);
  c.b = c.lambda1 + m - k3 - zeta * (c.lambda1 + m + k3);
  return c;
}

namespace {

// Radial pair Y = (phi1, phi2) = c1 e_- v1 + c2 e_+ v2 of a system
// Y' = (C/r + K) Y whose 1/r matrix C has eigenvectors e_+- for the exponents
// -1/2 +- root. The closed forms fix only |c1 e_-| = norm1 and
// |c2 e_+| = norm2 through square roots; the relative phase follows from
// matching the two leading powers of r at the origin, separately for the
// I_{p,n} (A) and I_{n,p} (B) solutions.
std::pair<Complex, Complex> frobenius_pair(const Vec2& ep, const Vec2& em, const Eigen::Matrix2d& K, double root,
                                           double norm1, double norm2, const RadialIndexSet& i1,
                                           const RadialIndexSet& i2, Complex A, Complex B, double r) {
  const double det = ep(0) * em(1) - ep(1) * em(0);
  if (det == 0.0) throw Error(ErrorCode::PoleError, "degenerate exponents at the origin (root = 0)");
  auto coords = [&](const Vec2& e) {  // K e in the (ep, em) basis
    const Vec2 w = K * e;
    return Vec2((w(0) * em(1) - w(1) * em(0)) / det, (ep(0) * w(1) - ep(1) * w(0)) / det);
  };
  auto lead = [](double p, double n) {
    const auto parts = detail::laguerre_parts(Complex(p), Complex(n));
    return parts.vanishes ? Complex(0.0) : parts.prefactor;
  };
  const double twoE = 2.0 * i1.x_scale;
  Complex phi1 = 0.0, phi2 = 0.0;
  auto add = [&](Complex c1, Complex c2, Complex v1, Complex v2) {
    phi1 += c1 * em(0) * v1 + c2 * ep(0) * v2;
    phi2 += c1 * em(1) * v1 + c2 * ep(1) * v2;
  };
  if (A != 0.0) {
    // v2 ~ x^(root-1/2) leads, v1 enters one power higher
    const Complex C1 = lead(i1.p, i1.n), C2 = lead(i2.p, i2.n);
    const Complex c2 = norm2 / ep.norm();
    const Complex c1 = C1 == 0.0 ? Complex(0.0) : c2 * C2 * coords(ep)(1) / (C1 * twoE * (2.0 * root + 1.0));
    add(A * c1, A * c2, radial_v(i1, 1.0, 0.0, r), radial_v(i2, 1.0, 0.0, r));
  }
  if (B != 0.0) {
    // v1 ~ x^(-root-1/2) leads, v2 enters one power higher
    if (std::abs(1.0 - 2.0 * root) < 1e-12) {
      throw Error(ErrorCode::PoleError, "second solution degenerates at root = 1/2");
    }
    const Complex D1 = lead(i1.n, i1.p), D2 = lead(i2.n, i2.p);
    const Complex c1 = norm1 / em.norm();
    const Complex c2 = D2 == 0.0 ? Complex(0.0) : c1 * D1 * coords(em)(0) / (D2 * twoE * (1.0 - 2.0 * root));
    add(B * c1, B * c2, radial_v(i1, 0.0, 1.0, r), radial_v(i2, 0.0, 1.0, r));
  }
  return {phi1, phi2};
}

Vec2 larger(const Vec2& a, const Vec2& b) { return a.squaredNorm() >= b.squaredNorm() ? a : b; }

}  // namespace

std::pair<Complex, Complex> radial_pair_case1(const StateParams& q, double k0, Complex A, Complex B,
                                              double r) {
  const double Lh = q.L() - 0.5;
  const double disc = sq(Lh) - sq(q.alpha);
  if (disc < 0.0) throw Error(ErrorCode::DiscriminantNegative, "(l+mu-1/2)^2 < alpha^2");
  const double root = std::sqrt(disc);
  const double qm = Lh - root, qp = Lh + root;
  const double lam1 = std::sqrt(sq(q.m) + sq(q.k3));
  auto omega = [&](int z) { return q.gamma * q.alpha - k0 * Lh + z * lam1 * root; };
  const int z = q.zeta;
  // 1/r matrix [[L-1, -alpha], [alpha, -L]]
  const Vec2 ep = larger({q.alpha, qm}, {qp, q.alpha});
  const Vec2 em = larger({q.alpha, qp}, {qm, q.alpha});
  Eigen::Matrix2d K;
  K << -q.gamma, k0 + z * lam1, -(k0 - z * lam1), q.gamma;
  const double span = std::abs(qm) + std::abs(qp);
  return frobenius_pair(ep, em, K, root, std::sqrt(std::abs(omega(z)) * span),
                        std::sqrt(std::abs(omega(-z)) * span), radial_indices(RadialCase::Case1, 1, q, k0),
                        radial_indices(RadialCase::Case1, 2, q, k0), A, B, r);
}

std::pair<Complex, Complex> radial_pair_case2(const StateParams& q, double k0, Complex A, Complex B,
                                              double r) {
  if (k0 < q.m) throw Error(ErrorCode::SubluminalError, "subcase I.2 spinor needs k0 >= m");
  const double Lh = q.L() - 0.5;
  const double root = std::sqrt(sq(Lh) + sq(q.alpha));
  const double lam2 = std::sqrt(sq(k0) - sq(q.m));
  auto omega = [&](int z) { return lam2 * root + z * (q.k3 * Lh - q.gamma * q.alpha); };
  const int z = q.zeta;
  // 1/r matrix [[L-1, -alpha], [-alpha, -L]]
  const Vec2 ep = larger({q.alpha, Lh - root}, {Lh + root, -q.alpha});
  const Vec2 em = larger({q.alpha, Lh + root}, {Lh - root, -q.alpha});
  Eigen::Matrix2d K;
  K << -q.gamma, -(z * lam2 - q.k3), z * lam2 + q.k3, q.gamma;
  return frobenius_pair(ep, em, K, root, std::sqrt(std::abs(omega(z)) * 2.0 * root),
                        std::sqrt(std::abs(omega(-z)) * 2.0 * root), radial_indices(RadialCase::Case2, 1, q, k0),
                        radial_indices(RadialCase::Case2, 2, q, k0), A, B, r);
}

Eigen::Vector4cd reduced_spinor_case1(const StateParams& q, double k0, Complex A, Complex B, double r) {
  const auto c = spinor_coefficients_case1(q.m, q.k3, q.zeta);
  const auto [p1, p2] = radial_pair_case1(q, k0, A, B, r);
  return {c.a * p1, -c.b * p2, c.b * p1, -c.a * p2};
}

Eigen::Vector4cd reduced_spinor_case2(const StateParams& q, double k0, Complex A, Complex B, double r) {
  const auto [p1, p2] = radial_pair_case2(q, k0, A, B, r);
  const double up = std::sqrt(k0 + q.m);
  const double lo = q.zeta * std::sqrt(k0 - q.m);
  return {up * p1, up * p2, lo * p1, lo * p2};
}

Eigen::Vector4cd reduced_spinor_case3(const StateParams& q, Case3Variant variant, double k0, Complex c1,
                                      Complex c2, Complex A, Complex B, double r) {
  check_r(r);
  const RadialCase rc = variant == Case3Variant::A ? RadialCase::Case3a : RadialCase::Case3b;
  Complex v1 = 0.0, v2 = 0.0, d1 = 0.0, d2 = 0.0;
  if (c1 != 0.0) {
    const auto idx = radial_indices(rc, 1, q, k0);
    v1 = c1 * radial_v(idx, A, B, r);
    d1 = c1 * radial_v_derivative(idx, A, B, r);
  }
  if (c2 != 0.0) {
    const auto idx = radial_indices(rc, 2, q, k0);
    v2 = c2 * radial_v(idx, A, B, r);
    d2 = c2 * radial_v_derivative(idx, A, B, r);
  }
  const double f2 = variant == Case3Variant::A ? q.gamma * r : q.gamma * r * r;
  const double g = (f2 - q.L() + 0.5) / r;
  // Q W = (g w2 - w2' - w2/2r, g w1 + w1' + w1/2r)
  auto Qhat = [&](Complex w1, Complex w2, Complex dw1, Complex dw2) {
    return std::pair<Complex, Complex>{g * w2 - dw2 - w2 / (2.0 * r), g * w1 + dw1 + w1 / (2.0 * r)};
  };
  const double eps = q.epsilon;
  const double kap = k0 - eps * q.k3;
  const auto qs = Qhat(v1, -v2, d1, -d2);  // Q sigma3 V
  const auto qv = Qhat(v1, v2, d1, d2);
  Eigen::Vector4cd out;
  out(0) = (kap + q.m) * v1 - eps * qs.first;
  out(1) = (kap + q.m) * v2 - eps * qs.second;
  out(2) = eps * (kap - q.m) * v1 - qv.first;
  out(3) = -eps * (kap - q.m) * v2 - qv.second;
  return out;
}

SpinorSample dress_spinor(const Eigen::Vector4cd& reduced, int l, long l0, double k0, double k3, double r,
                          double phi, double z, double x0) {
  SpinorSample s;
  s.r = r;
  s.phi = phi;
  s.z = z;
  s.x0 = x0;
  const Complex eq = std::exp(kI * phase_Q(l, l0, k0, k3, phi, z, x0));
  const Complex ephi = std::exp(-kI * phi);
  s.psi(0) = eq * ephi * reduced(0);
  s.psi(1) = eq * kI * reduced(1);
  s.psi(2) = eq * ephi * reduced(2);
  s.psi(3) = eq * kI * reduced(3);
  return s;
}

SpinorSample spinor_case1(const StateParams& q, double k0, Complex A, Complex B, double r, double phi,
                          double z, double x0) {
  return dress_spinor(reduced_spinor_case1(q, k0, A, B, r), q.l, q.l0, k0, q.k3, r, phi, z, x0);
}

SpinorSample spinor_case2(const StateParams& q, double k0, Complex A, Complex B, double r, double phi,
                          double z, double x0) {
  return dress_spinor(reduced_spinor_case2(q, k0, A, B, r), q.l, q.l0, k0, q.k3, r, phi, z, x0);
}

SpinorSample bispinor_case3(const StateParams& q, Case3Variant variant, double k0, Complex c1, Complex c2,
                            Complex A, Complex B, double r, double phi, double z, double x0) {
  return dress_spinor(reduced_spinor_case3(q, variant, k0, c1, c2, A, B, r), q.l, q.l0, k0, q.k3, r, phi,
                      z, x0);
}

double psi_schrodinger(SchrodingerVariant variant, const StateParams& q, int n, double r) {
  check_r(r);
  QuantumNumbers qn;
  qn.l = q.l;
  qn.n = n;
  qn.k3 = q.k3;
  qn.equation = Equation::Schrodinger;
  if (variant == SchrodingerVariant::A) {
    const auto res = energy_schrodinger_a(qn, q.mu, q.alpha, q.beta, q.gamma, q.delta, q.lambda, q.m);
    if (!res.index_consistent) throw Error(ErrorCode::NoBoundState, "b <= 0: no bound state");
    const double L = q.L();
    const double ra = std::sqrt(sq(L) + sq(q.beta) + 2.0 * q.m * q.delta + 4.0 * q.m * q.lambda * q.k3);
    const double x = 2.0 * r * res.scale_E;
    return std::exp(-0.5 * x) * std::pow(x, ra) * laguerre_poly(n, 2.0 * ra, x);
  }
  const auto res = energy_schrodinger_b(qn, q.mu, q.alpha, q.beta, q.gamma, q.delta, q.lambda, q.m);
  const double L = q.L();
  const double ra = std::sqrt(sq(L) + 2.0 * q.beta * q.m + 4.0 * q.m * q.lambda * q.k3);
  const double x = res.scale_E * r * r;
  return std::exp(-0.5 * x) * std::pow(x, 0.5 * ra) * laguerre_poly(n, ra, x);
}

Complex lightfront_w(const LightfrontState& st, const ScalarProfile& f, double z, double x0) {
  if (st.nu < -1 || st.nu > 1) throw Error(ErrorCode::DomainError, "nu must be -1, 0 or 1");
  const double xi = x0 - z;
  const double tol = 1e-8 * std::max(1.0, std::abs(st.lambda_ev));
  const double lo = std::min(0.0, xi), hi = std::max(0.0, xi);
  constexpr int kProbe = 256;
  for (int i = 0; i <= kProbe; ++i) {
    const double t = lo + (hi - lo) * i / kProbe;
    if (std::abs(st.lambda_ev - f.value(t)) < tol) {
      throw Error(ErrorCode::TurningPoint, "lambda - f(xi) vanishes on the integration path");
    }
  }
  const double integral = integrate_adaptive([&](double t) { return 1.0 / (st.lambda_ev - f.value(t)); },
                                             0.0, xi);
  const double S = -0.5 * (st.lambda_ev * (x0 + z) + (sq(st.m) + st.kperp2) * integral);
  const Complex base = st.lambda_ev - f.value(xi);
  const Complex pref = std::pow(base, Complex(-0.5 * (1 + st.nu), 0.0));
  return pref * std::exp(kI * S);
}

Complex boost_w_reduced(int nu, double lambda_ev, BoostVariant variant, double alpha, double m,
                        double kperp2, double xib, Complex A, Complex B) {
  if (nu < -1 || nu > 1) throw Error(ErrorCode::DomainError, "nu must be -1, 0 or 1");
  const double M = sq(m) + kperp2;
  Complex x, p, n;
  if (variant == BoostVariant::A) {
    if (alpha == 0.0) throw Error(ErrorCode::DegenerateField, "alpha = 0: index p diverges");
    x = Complex(0.0, -alpha * xib);
    p = (kI * M - 2.0 * alpha * (1.0 + nu)) / (4.0 * alpha);
    n = p - kI * lambda_ev;
  } else {
    if (xib == 0.0) throw Error(ErrorCode::BranchPoint, "xib = 0");
    const double eps = xib > 0.0 ? 1.0 : -1.0;
    const double rad = sq(alpha) * std::abs(xib) + xib * M;
    if (rad == 0.0) throw Error(ErrorCode::BranchPoint, "alpha^2 |xib| + xib M = 0");
    const Complex d = csqrt(sq(alpha) + eps * M);
    if (d == 0.0) throw Error(ErrorCode::BranchPoint, "alpha^2 + eps M = 0");
    x = 2.0 * kI * csqrt(rad);
    p = alpha * (double(nu) + 2.0 * kI * lambda_ev) / (2.0 * d) - 0.5 + kI * lambda_ev;
    n = p - 2.0 * kI * lambda_ev;
  }
  Complex w = 0.0;
  if (A != 0.0) w += A * laguerre_i(p, n, x);
  if (B != 0.0) w += B * laguerre_i(n, p, x);
  return w;
}

Complex boost_w(int nu, double lambda_ev, BoostVariant variant, double alpha, double m, double kperp2,
                double z, double x0, Complex A, Complex B) {
  if (x0 + z == 0.0 || x0 - z == 0.0) {
    throw Error(ErrorCode::LightconeSingularity, "x0 +- z = 0");
  }
  const Complex ratio = (x0 - z) / (x0 + z);
  const Complex pref = std::pow(ratio, Complex(0.0, 0.5 * lambda_ev));
  return pref * boost_w_reduced(nu, lambda_ev, variant, alpha, m, kperp2, x0 * x0 - z * z, A, B);
}

double schrodinger_time_phase(const ScalarProfile& f, double k3, double kperp2, double m, double x0) {
  const double integral =
      integrate_adaptive([&](double t) { return sq(k3 - f.value(t)) / (2.0 * m); }, 0.0, x0);
  return kperp2 * x0 / (2.0 * m) + integral;
}

GaugeReduction gauge_reduce(Sampler2D f0, Sampler2D f1, double kperp2, double m, Sampler2D d0f1) {
  if (!d0f1) {
    d0f1 = [f1](double z, double x0) {
      const double h = 2e-3 * std::max(1.0, std::abs(x0));
      return (-f1(z, x0 + 2 * h) + 8 * f1(z, x0 + h) - 8 * f1(z, x0 - h) + f1(z, x0 - 2 * h)) / (12 * h);
    };
  }
  GaugeReduction g;
  g.V = [f0, d0f1](double z, double x0) {
    return f0(z, x0) - integrate_smooth([&](double t) { return d0f1(t, x0); }, 0.0, z);
  };
  g.phi = [f1, kperp2, m](double z, double x0) {
    return kperp2 * x0 / (2.0 * m) + integrate_smooth([&](double t) { return f1(t, x0); }, 0.0, z);
  };
  return g;
}

}  // namespace abex
