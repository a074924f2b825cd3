#pragma once

// Assembled closed-form solutions: phases, radial Laguerre factors, spinors,
// lightfront / boost-invariant factors and the non-relativistic time phase.

#include <functional>

#include <Eigen/Core>

#include "abex/fields.hpp"
#include "abex/special_fn.hpp"
#include "abex/spectra.hpp"

namespace abex {

struct SpinorSample {
  Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
  double r = 0.0, phi = 0.0, z = 0.0, x0 = 0.0;
};

struct SpinorCoefficients {
  double a = 0.0;
  double b = 0.0;
  int zeta = 1;
  double lambda1 = 0.0;
};

/// Q = (l - l0) phi - k0 x0 - k3 z; the k0 / k3 terms can be switched off
/// for solutions that are not eigenfunctions of i d0 / i dz.
double phase_Q(int l, long l0, double k0, double k3, double phi, double z, double x0,
               bool with_k0 = true, bool with_k3 = true);

/// v_s = A I_{p,n}(x) + B I_{n,p}(x) at x = x(r).
Complex radial_v(const RadialIndexSet& idx, Complex A, Complex B, double r);
/// d v_s / dr.
Complex radial_v_derivative(const RadialIndexSet& idx, Complex A, Complex B, double r);

SpinorCoefficients spinor_coefficients_case1(double m, double k3, int zeta);

/// Radial pair (phi1, phi2) of subcase I.1 solving the coupled first-order
/// system at energy k0. The second solution enters with -B on v2.
std::pair<Complex, Complex> radial_pair_case1(const StateParams& q, double k0, Complex A, Complex B,
                                              double r);
/// Radial pair (phi1bar, phi2bar) of subcase I.2 (v2 enters with flipped sign).
std::pair<Complex, Complex> radial_pair_case2(const StateParams& q, double k0, Complex A, Complex B,
                                              double r);

/// The reduced bispinor (psi1..psi4)(r) without the angular/phase factors.
Eigen::Vector4cd reduced_spinor_case1(const StateParams& q, double k0, Complex A, Complex B, double r);
Eigen::Vector4cd reduced_spinor_case2(const StateParams& q, double k0, Complex A, Complex B, double r);
/// Subcase I.3 bispinor; c1, c2 weight the v1 and v2 components (with
/// beta != 0 only one of them is quantized at a given k0).
Eigen::Vector4cd reduced_spinor_case3(const StateParams& q, Case3Variant variant, double k0, Complex c1,
                                      Complex c2, Complex A, Complex B, double r);

/// Full four-component solution with e^{iQ} and the (e^{-i phi}, i) factors.
SpinorSample dress_spinor(const Eigen::Vector4cd& reduced, int l, long l0, double k0, double k3,
                          double r, double phi, double z, double x0);

SpinorSample spinor_case1(const StateParams& q, double k0, Complex A, Complex B, double r, double phi,
                          double z, double x0);
SpinorSample spinor_case2(const StateParams& q, double k0, Complex A, Complex B, double r, double phi,
                          double z, double x0);
SpinorSample bispinor_case3(const StateParams& q, Case3Variant variant, double k0, Complex c1, Complex c2,
                            Complex A, Complex B, double r, double phi, double z, double x0);

enum class SchrodingerVariant { A, B };

/// Bound-state radial function A=1: exp(-x/2) x^{sqrt a} L_n^{2 sqrt a}(x) (a)
/// or exp(-x/2) x^{sqrt a / 2} L_n^{sqrt a}(x) (b).
double psi_schrodinger(SchrodingerVariant variant, const StateParams& q, int n, double r);

struct LightfrontState {
  double lambda_ev = 1.0;
  int nu = 1;
  double m = 1.0;
  double kperp2 = 0.0;
};

/// w_nu for f0 = f1 = f(xi)/2, xi = x0 - z; phase integral from xi = 0.
Complex lightfront_w(const LightfrontState& state, const ScalarProfile& f, double z, double x0);

enum class BoostVariant { A, B };  // f = alpha xib, f = alpha sqrt|xib|

/// w_nu(xib) alone (the reduced boost-invariant function).
Complex boost_w_reduced(int nu, double lambda_ev, BoostVariant variant, double alpha, double m,
                        double kperp2, double xib, Complex A = 1.0, Complex B = 0.0);
/// Full boost-invariant w_nu(z, x0) with the ((x0-z)/(x0+z))^{i lambda/2} prefactor.
Complex boost_w(int nu, double lambda_ev, BoostVariant variant, double alpha, double m, double kperp2,
                double z, double x0, Complex A = 1.0, Complex B = 0.0);

/// S(x0) = kperp2 x0/(2m) + int_0^x0 (k3 - f)^2/(2m); w_S = exp(-i S).
double schrodinger_time_phase(const ScalarProfile& f, double k3, double kperp2, double m, double x0);

using Sampler2D = std::function<double(double z, double x0)>;

struct GaugeReduction {
  Sampler2D V;    // f0 - int_0^z d0 f1 dz'
  Sampler2D phi;  // kperp2 x0/(2m) + int_0^z f1 dz'
};

/// Reduce the Case II Schrodinger equation to a 1-D time-dependent one.
/// d0f1 may be empty, in which case it is taken by central differences.
GaugeReduction gauge_reduce(Sampler2D f0, Sampler2D f1, double kperp2, double m, Sampler2D d0f1 = {});

}  // namespace abex
