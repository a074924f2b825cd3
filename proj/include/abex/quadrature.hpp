#pragma once

// Thin wrappers over Boost.Math quadrature with the tolerances used here.

#include <cmath>
#include <functional>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "abex/errors.hpp"

namespace abex {

/// Adaptive 31-point Gauss-Kronrod on [a, b] (either order), abs tol ~1e-12.
template <typename F>
double integrate_adaptive(F&& f, double a, double b) {
  if (a == b) return 0.0;
  const double sign = b < a ? -1.0 : 1.0;
  const double lo = std::min(a, b), hi = std::max(a, b);
  double err = 0.0;
  const double val = boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
      std::function<double(double)>(f), lo, hi, 20, 1e-14, &err);
  if (!std::isfinite(val) || err > 1e-12 * std::max(1.0, std::abs(val))) {
    throw Error(ErrorCode::NoConvergence, "adaptive quadrature missed its tolerance");
  }
  return sign * val;
}

/// Fixed composite 30-point Gauss-Legendre; smooth in the endpoints, which
/// keeps finite differences of the result clean.
template <typename F>
double integrate_smooth(F&& f, double a, double b) {
  if (a == b) return 0.0;
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a))));
  const double h = (b - a) / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    sum += boost::math::quadrature::gauss<double, 30>::integrate(f, lo, lo + h);
  }
  return sum;
}

}  // namespace abex
