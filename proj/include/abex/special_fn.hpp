#pragma once

// Gamma, confluent hypergeometric and Laguerre functions over real and complex
// arguments. Everything here is a pure function templated on the scalar type
// (double or std::complex<double>).

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <type_traits>

#include "abex/errors.hpp"

namespace abex {

using Complex = std::complex<double>;

/// Subscripts (p, n) of the Laguerre function I_{p,n}.
template <typename Scalar = double>
struct LaguerreIndices {
  Scalar p{};
  Scalar n{};
};

namespace detail {

template <typename T>
struct is_complex : std::false_type {};
template <typename T>
struct is_complex<std::complex<T>> : std::true_type {};

inline double real_part(double x) { return x; }
inline double real_part(const Complex& z) { return z.real(); }
inline double imag_part(double) { return 0.0; }
inline double imag_part(const Complex& z) { return z.imag(); }

template <typename Scalar>
bool is_nonpositive_integer(const Scalar& z) {
  const double re = real_part(z);
  return imag_part(z) == 0.0 && re <= 0.0 && re == std::floor(re);
}

/// sin(pi z) with exact argument reduction on the real part.
template <typename Scalar>
Scalar sin_pi(const Scalar& z) {
  const double shift = std::round(real_part(z));
  const Scalar reduced = z - shift;
  const double sign = std::fmod(std::abs(shift), 2.0) == 1.0 ? -1.0 : 1.0;
  return sign * std::sin(std::numbers::pi * reduced);
}

// Lanczos approximation, g = 7, nine terms.
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

template <typename Scalar>
Scalar lanczos_sum(const Scalar& zm1) {
  Scalar acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zm1 + static_cast<double>(i));
  return acc;
}

/// Neumaier-compensated accumulator; for complex values the real and
/// imaginary parts are compensated independently.
template <typename Scalar>
class CompensatedSum {
 public:
  void add(const Scalar& v) {
    if constexpr (is_complex<Scalar>::value) {
      add_real(re_, cre_, v.real());
      add_real(im_, cim_, v.imag());
    } else {
      add_real(re_, cre_, v);
    }
  }
  Scalar value() const {
    if constexpr (is_complex<Scalar>::value) {
      return Scalar(re_ + cre_, im_ + cim_);
    } else {
      return re_ + cre_;
    }
  }

 private:
  static void add_real(double& sum, double& comp, double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      comp += (sum - t) + v;
    } else {
      comp += (v - t) + sum;
    }
    sum = t;
  }
  double re_ = 0.0, cre_ = 0.0, im_ = 0.0, cim_ = 0.0;
};

template <typename Scalar>
struct SeriesResult {
  Scalar value{};
  double rel_error = 0.0;  // estimated relative error
};

/// Direct power series of M(a,b;x). Terminates exactly when a is a
/// non-positive integer.
template <typename Scalar>
SeriesResult<Scalar> kummer_series(const Scalar& a, const Scalar& b, const Scalar& x) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  CompensatedSum<Scalar> sum;
  Scalar term = 1.0;
  sum.add(term);
  double max_term = 1.0;
  const bool terminating = is_nonpositive_integer(a);
  const int n_terms = terminating ? static_cast<int>(-real_part(a)) : 0;
  int small_in_a_row = 0;
  int k = 0;
  const int k_max = terminating ? n_terms : 20000;
  for (; k < k_max; ++k) {
    term *= (a + static_cast<double>(k)) / (b + static_cast<double>(k)) * x /
            static_cast<double>(k + 1);
    sum.add(term);
    const double mag = std::abs(term);
    max_term = std::max(max_term, mag);
    if (terminating) continue;
    const double s = std::abs(sum.value());
    if (mag <= 0.25 * eps * s && static_cast<double>(k) > std::abs(x)) {
      if (++small_in_a_row >= 3) break;
    } else {
      small_in_a_row = 0;
    }
  }
  SeriesResult<Scalar> out;
  out.value = sum.value();
  const double s = std::abs(out.value);
  if (!terminating && k >= k_max) {
    out.rel_error = 1.0;
  } else if (s == 0.0) {
    out.rel_error = max_term == 0.0 ? 0.0 : 1.0;
  } else {
    out.rel_error = 4.0 * eps * max_term / s * std::sqrt(static_cast<double>(k + 1));
  }
  return out;
}

/// Terminating M(-n, b; x) by the contiguous relation in a,
///   (b + k) M_{k+1} = (2k + b - x) M_k - k M_{k-1},
/// which is the Laguerre recurrence and avoids the cancellation of the
/// alternating polynomial coefficients for large x. Needs Re b > 0.
template <typename Scalar>
SeriesResult<Scalar> kummer_terminating(int n, const Scalar& b, const Scalar& x) {
  Scalar prev = 1.0;
  Scalar cur = 1.0 - x / b;
  if (n == 0) return {prev, 0.0};
  for (int k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const Scalar next = ((2.0 * kk + b - x) * cur - kk * prev) / (b + kk);
    prev = cur;
    cur = next;
  }
  return {cur, 4.0 * std::numeric_limits<double>::epsilon() * (n + 1)};
}

/// Divergent asymptotic series sum_s (u)_s (v)_s / s! * w^s, truncated at the
/// smallest term. Returns the sum and the magnitude of the first omitted term.
template <typename Scalar>
SeriesResult<Scalar> asymptotic_tail(const Scalar& u, const Scalar& v, const Scalar& w) {
  CompensatedSum<Scalar> sum;
  Scalar term = 1.0;
  sum.add(term);
  double prev = 1.0;
  double last = 1.0;
  for (int s = 0; s < 200; ++s) {
    const Scalar next = term * (u + static_cast<double>(s)) * (v + static_cast<double>(s)) * w /
                        static_cast<double>(s + 1);
    const double mag = std::abs(next);
    if (mag > prev && s > 2) {
      last = prev;
      break;
    }
    term = next;
    sum.add(term);
    prev = mag;
    last = mag;
    if (mag == 0.0) break;
    if (mag < 1e-17 * std::abs(sum.value())) break;
  }
  return {sum.value(), last};
}

}  // namespace detail

/// Gamma function. Lanczos approximation with reflection for Re z < 1/2.
template <typename Scalar>
Scalar gamma_fn(const Scalar& z) {
  if (detail::is_nonpositive_integer(z)) {
    throw Error(ErrorCode::PoleError, "Gamma function pole at non-positive integer");
  }
  if (detail::real_part(z) < 0.5) {
    return std::numbers::pi / (detail::sin_pi(z) * gamma_fn<Scalar>(1.0 - z));
  }
  const Scalar zm1 = z - 1.0;
  const Scalar t = zm1 + detail::kLanczosG + 0.5;
  const Scalar log_part = (zm1 + 0.5) * std::log(t) - t;
  return std::sqrt(2.0 * std::numbers::pi) * std::exp(log_part) * detail::lanczos_sum(zm1);
}

/// log Gamma(z) up to an additive multiple of 2 pi i; exp() of the result is
/// Gamma(z). Used where Gamma itself would overflow.
template <typename Scalar>
Complex log_gamma(const Scalar& z) {
  using C = Complex;
  if (detail::is_nonpositive_integer(z)) {
    throw Error(ErrorCode::PoleError, "log Gamma pole at non-positive integer");
  }
  const C zc(z);
  if (zc.real() < 0.5) {
    return C(std::log(std::numbers::pi)) - std::log(C(detail::sin_pi(zc))) - log_gamma(C(1.0) - zc);
  }
  const C zm1 = zc - 1.0;
  const C t = zm1 + detail::kLanczosG + 0.5;
  return C(0.5 * std::log(2.0 * std::numbers::pi)) + (zm1 + 0.5) * std::log(t) - t +
         std::log(detail::lanczos_sum(zm1));
}

/// 1/Gamma(z); entire, zero at the non-positive integers.
template <typename Scalar>
Scalar rgamma(const Scalar& z) {
  if (detail::is_nonpositive_integer(z)) return Scalar(0.0);
  return Scalar(1.0) / gamma_fn(z);
}

/// Confluent hypergeometric function M(a,b;x) together with an estimate of its
/// relative error.
template <typename Scalar>
detail::SeriesResult<Scalar> kummer_with_error(const Scalar& a, const Scalar& b, const Scalar& x) {
  using detail::is_nonpositive_integer;
  if (is_nonpositive_integer(b)) {
    // M(-n, -n - k; x) would still be finite, but that case never arises from
    // the Laguerre functions and is treated as a pole.
    throw Error(ErrorCode::ParameterPole, "Kummer function with non-positive integer b");
  }
  if (x == Scalar(0.0) || a == Scalar(0.0)) return {Scalar(1.0), 0.0};
  if (a == b) return {std::exp(x), 0.0};
  if (is_nonpositive_integer(a)) {
    auto series = detail::kummer_series(a, b, x);
    if (series.rel_error <= 1e-14 || !(detail::real_part(b) > 0.0)) return series;
    return detail::kummer_terminating(static_cast<int>(-detail::real_part(a)), b, x);
  }

  if (detail::real_part(x) < 0.0) {
    // Kummer transformation keeps the series free of alternating terms.
    auto inner = kummer_with_error<Scalar>(b - a, b, -x);
    return {std::exp(x) * inner.value, inner.rel_error};
  }

  constexpr double kSeriesRadius = 30.0;
  auto series = detail::kummer_series(a, b, x);
  if (std::abs(x) <= kSeriesRadius && series.rel_error <= 1e-12) return series;

  // Large-|x| expansion for the Re x >= 0 half plane.
  const Complex ac(a), bc(b), xc(x);
  const double sign = xc.imag() >= 0.0 ? 1.0 : -1.0;
  const Complex i_pi_a = Complex(0.0, sign * std::numbers::pi) * ac;
  const auto s1 = detail::asymptotic_tail<Complex>(bc - ac, 1.0 - ac, 1.0 / xc);
  const auto s2 = detail::asymptotic_tail<Complex>(ac, ac - bc + 1.0, -1.0 / xc);
  const Complex g_b = gamma_fn(bc);
  const Complex t1 = g_b * rgamma(ac) * std::exp(xc + (ac - bc) * std::log(xc));
  const Complex t2 = g_b * rgamma(bc - ac) * std::exp(i_pi_a - ac * std::log(xc));
  const Complex asym = t1 * s1.value + t2 * s2.value;
  const double scale = std::max(std::abs(asym), std::numeric_limits<double>::min());
  const double asym_err = (std::abs(t1) * s1.rel_error + std::abs(t2) * s2.rel_error) / scale +
                          1e-15 * (std::abs(t1) + std::abs(t2)) / scale;
  if (asym_err < series.rel_error) {
    if constexpr (detail::is_complex<Scalar>::value) {
      return {asym, asym_err};
    } else {
      return {asym.real(), asym_err};
    }
  }
  return series;
}

/// Confluent hypergeometric function M(a,b;x) = 1F1(a;b;x).
template <typename Scalar>
Scalar kummer(const Scalar& a, const Scalar& b, const Scalar& x) {
  auto r = kummer_with_error(a, b, x);
  if (!(r.rel_error <= 1e-6) || !std::isfinite(std::abs(r.value))) {
    throw Error(ErrorCode::NoConvergence, "Kummer function evaluation did not converge");
  }
  return r.value;
}

/// d^k/dx^k M(a,b;x) = (a)_k/(b)_k M(a+k, b+k; x).
template <typename Scalar>
Scalar kummer_derivative(const Scalar& a, const Scalar& b, const Scalar& x, int order) {
  if (order < 1 || order > 2) {
    throw Error(ErrorCode::DomainError, "kummer_derivative supports order 1 or 2");
  }
  if (detail::is_nonpositive_integer(b)) {
    throw Error(ErrorCode::ParameterPole, "Kummer function with non-positive integer b");
  }
  Scalar factor = 1.0;
  for (int k = 0; k < order; ++k) {
    factor *= (a + static_cast<double>(k)) / (b + static_cast<double>(k));
  }
  if (factor == Scalar(0.0)) return Scalar(0.0);
  return factor * kummer<Scalar>(a + static_cast<double>(order), b + static_cast<double>(order), x);
}

namespace detail {

struct LaguerreParts {
  Complex prefactor;  // sqrt(G(1+p)/G(1+n)) / G(1+p-n), zero when 1/G(1+n) = 0
  Complex half_diff;  // (p-n)/2
  Complex a, b;       // Kummer parameters -n, p-n+1
  bool vanishes = false;
};

inline LaguerreParts laguerre_parts(const Complex& p, const Complex& n) {
  if (is_nonpositive_integer(1.0 + p)) {
    throw Error(ErrorCode::PoleError, "Laguerre function with 1+p a non-positive integer");
  }
  if (is_nonpositive_integer(1.0 + p - n)) {
    throw Error(ErrorCode::PoleError, "Laguerre function with 1+p-n a non-positive integer");
  }
  LaguerreParts parts;
  parts.half_diff = 0.5 * (p - n);
  parts.a = -n;
  parts.b = p - n + 1.0;
  if (is_nonpositive_integer(1.0 + n)) {
    parts.vanishes = true;
    return parts;
  }
  const double big = 150.0;
  if (std::abs(p) < big && std::abs(n) < big && std::abs(p - n) < big) {
    parts.prefactor = std::sqrt(gamma_fn(1.0 + p) / gamma_fn(1.0 + n)) * rgamma(1.0 + p - n);
  } else {
    const Complex log_ratio = log_gamma(1.0 + p) - log_gamma(1.0 + n);
    const Complex ratio = std::exp(log_ratio);
    parts.prefactor = std::sqrt(ratio) * std::exp(-log_gamma(1.0 + p - n));
  }
  return parts;
}

inline Complex x_power(const Complex& x, const Complex& exponent) {
  if (x == 0.0) {
    if (exponent == 0.0) return 1.0;
    if (exponent.real() > 0.0) return 0.0;
    throw Error(ErrorCode::DomainError, "Laguerre function is singular at x = 0");
  }
  return std::exp(exponent * std::log(x));
}

}  // namespace detail

/// Laguerre function
///   I_{p,n}(x) = sqrt(G(1+p)/G(1+n)) exp(-x/2) x^{(p-n)/2} M(-n, p-n+1; x) / G(1+p-n)
/// with the principal branch of x^{(p-n)/2}. Returns zero when 1+n is a
/// non-positive integer (the 1/G(1+n) factor vanishes).
inline Complex laguerre_i(const Complex& p, const Complex& n, const Complex& x) {
  const auto parts = detail::laguerre_parts(p, n);
  if (parts.vanishes) return 0.0;
  const Complex m = kummer<Complex>(parts.a, parts.b, x);
  return parts.prefactor * std::exp(-0.5 * x) * detail::x_power(x, parts.half_diff) * m;
}

inline Complex laguerre_i(double p, double n, const Complex& x) {
  return laguerre_i(Complex(p), Complex(n), x);
}

/// d/dx I_{p,n}(x).
inline Complex laguerre_i_derivative(const Complex& p, const Complex& n, const Complex& x) {
  const auto parts = detail::laguerre_parts(p, n);
  if (parts.vanishes) return 0.0;
  if (x == 0.0) {
    throw Error(ErrorCode::DomainError, "Laguerre function derivative evaluated at x = 0");
  }
  const Complex m = kummer<Complex>(parts.a, parts.b, x);
  const Complex dm = kummer_derivative<Complex>(parts.a, parts.b, x, 1);
  const Complex base = parts.prefactor * std::exp(-0.5 * x) * detail::x_power(x, parts.half_diff);
  return base * ((parts.half_diff / x - 0.5) * m + dm);
}

inline Complex laguerre_i_derivative(double p, double n, const Complex& x) {
  return laguerre_i_derivative(Complex(p), Complex(n), x);
}

/// Generalized Laguerre polynomial L_n^alpha(x) by the three-term recurrence.
inline double laguerre_poly(int n, double alpha, double x) {
  if (n < 0) throw Error(ErrorCode::DomainError, "Laguerre polynomial degree must be >= 0");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = 1.0 + alpha - x;
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 + alpha - x) * cur - (k + alpha) * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace abex
