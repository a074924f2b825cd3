#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abex/special_fn.hpp"

namespace {
#include "special_ref.inc"

double rel(double got, double want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }
}  // namespace

using namespace abex;

TEST_SUITE("special_fn") {
  TEST_CASE("gamma trivial values and mpmath references") {
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    for (const auto& r : kGammaRef) {
      INFO("z = " << r.z);
      CHECK(rel(gamma_fn(r.z), r.value) < 1e-12);
    }
  }

  TEST_CASE("gamma poles are errors") {
    CHECK_THROWS_AS(gamma_fn(0.0), Error);
    CHECK_THROWS_AS(gamma_fn(-3.0), Error);
    CHECK(rgamma(-3.0) == 0.0);
  }

  TEST_CASE("gamma recurrence on (0.1, 40)") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> z(0.1, 40.0);
    for (int i = 0; i < 200; ++i) {
      const double v = z(rng);
      CHECK(rel(gamma_fn(v + 1.0), v * gamma_fn(v)) < 1e-12);
    }
  }

  TEST_CASE("complex gamma agrees with the real branch and conjugation") {
    const Complex g = gamma_fn(Complex(2.5, 0.0));
    CHECK(std::abs(g - gamma_fn(2.5)) < 1e-13 * std::abs(g));
    const Complex a = gamma_fn(Complex(1.2, 0.7));
    const Complex b = gamma_fn(Complex(1.2, -0.7));
    CHECK(std::abs(a - std::conj(b)) < 1e-13 * std::abs(a));
    // |Gamma(i y)|^2 = pi / (y sinh(pi y))
    const double y = 1.3;
    const double want = std::numbers::pi / (y * std::sinh(std::numbers::pi * y));
    CHECK(rel(std::norm(gamma_fn(Complex(0.0, y))), want) < 1e-12);
  }

  TEST_CASE("kummer trivial identities") {
    CHECK(kummer(1.7, 2.3, 0.0) == 1.0);
    CHECK(kummer(0.0, 2.3, 5.0) == 1.0);
    CHECK(rel(kummer(1.4, 1.4, 3.3), std::exp(3.3)) < 1e-13);
    CHECK(rel(kummer(1.0, 2.0, 1.0), std::numbers::e - 1.0) < 1e-14);
    CHECK_THROWS_AS(kummer(1.0, -2.0, 1.0), Error);
  }

  TEST_CASE("kummer against mpmath") {
    for (const auto& r : kKummerRef) {
      INFO("a=" << r.a << " b=" << r.b << " x=" << r.x);
      CHECK(rel(kummer(r.a, r.b, r.x), r.value) < 1e-10);
    }
  }

  TEST_CASE("kummer terminating series equals the explicit sum") {
    for (int n = 0; n <= 20; ++n) {
      const double b = 1.3 + 0.1 * n, x = 0.37 * n + 0.5;
      double term = 1.0, sum = 1.0;
      for (int k = 0; k < n; ++k) {
        term *= (k - n) * x / ((b + k) * (k + 1));
        sum += term;
      }
      double scale = 0.0;
      term = 1.0;
      for (int k = 0; k <= n; ++k) {
        scale = std::max(scale, std::abs(term));
        term *= (k - n) * x / ((b + k) * (k + 1));
      }
      INFO("n=" << n);
      CHECK(std::abs(kummer(-double(n), b, x) - sum) < 1e-12 * scale);
    }
  }

  TEST_CASE("kummer derivative") {
    CHECK(kummer_derivative(0.0, 2.0, 1.5, 1) == 0.0);
    CHECK(rel(kummer_derivative(0.9, 0.9, 1.5, 1), std::exp(1.5)) < 1e-13);
    const double h = 1e-4;
    const double fd = (kummer(1.0, 2.0, 1.0 + h) - kummer(1.0, 2.0, 1.0 - h)) / (2 * h);
    CHECK(rel(kummer_derivative(1.0, 2.0, 1.0, 1), fd) < 1e-8);
    const double fd2 = (kummer_derivative(1.0, 2.0, 1.0 + h, 1) - kummer_derivative(1.0, 2.0, 1.0 - h, 1)) / (2 * h);
    CHECK(rel(kummer_derivative(1.0, 2.0, 1.0, 2), fd2) < 1e-8);
  }

  TEST_CASE("kummer with complex argument") {
    // M(a, a; z) = exp(z)
    const Complex z(1.2, -3.4);
    CHECK(std::abs(kummer(Complex(0.6), Complex(0.6), z) - std::exp(z)) < 1e-13 * std::abs(std::exp(z)));
    // Kummer transformation M(a,b;z) = e^z M(b-a,b;-z)
    const Complex a(0.3, 0.4), b(1.7, 0.0), w(2.0, 5.0);
    const Complex lhs = kummer(a, b, w), rhs = std::exp(w) * kummer(b - a, b, -w);
    CHECK(std::abs(lhs - rhs) < 1e-11 * std::abs(lhs));
  }

  TEST_CASE("laguerre function values") {
    for (double x : {0.3, 1.0, 2.5, 7.0}) {
      CHECK(std::abs(laguerre_i(0.0, 0.0, Complex(x)) - std::exp(-x / 2)) < 1e-15);
      const Complex want = std::exp(-x / 2) * std::pow(x, 1.5) / std::sqrt(6.0);
      CHECK(std::abs(laguerre_i(3.0, 0.0, Complex(x)) - want) < 1e-14);
    }
    CHECK(std::abs(laguerre_i(1.0, 1.0, Complex(0.0)) - 1.0) < 1e-15);
    for (const auto& r : kLaguerreRef) {
      INFO("p=" << r.p << " n=" << r.n << " x=" << r.x);
      CHECK(rel(laguerre_i(r.p, r.n, Complex(r.x)).real(), r.value) < 1e-10);
    }
  }

  TEST_CASE("laguerre function derivative") {
    for (double x : {0.4, 2.0, 9.0})
      CHECK(std::abs(laguerre_i_derivative(0.0, 0.0, Complex(x)) + std::exp(-x / 2) / 2) < 1e-15);
    const double h = 1e-5;
    for (auto [p, n, x] : {std::tuple{2.5, 1.0, 3.0}, {7.5, 2.0, 10.0}, {1.2, 0.0, 0.7}}) {
      const Complex fd = (laguerre_i(p, n, Complex(x + h)) - laguerre_i(p, n, Complex(x - h))) / (2 * h);
      const Complex d = laguerre_i_derivative(p, n, Complex(x));
      CHECK(std::abs(d - fd) < 1e-8 * std::abs(d));
    }
    // n = 0: d/dx [sqrt(G(1+p)) e^{-x/2} x^{p/2} / G(1+p)]
    const double p = 2.3, x = 1.7;
    const double c = std::sqrt(std::tgamma(1 + p)) / std::tgamma(1 + p);
    const double want = c * std::exp(-x / 2) * std::pow(x, p / 2) * (p / (2 * x) - 0.5);
    CHECK(rel(laguerre_i_derivative(p, 0.0, Complex(x)).real(), want) < 1e-13);
  }

  TEST_CASE("laguerre polynomials") {
    CHECK(laguerre_poly(0, 1.3, 2.0) == 1.0);
    CHECK(laguerre_poly(1, 1.3, 2.0) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(laguerre_poly(2, 0.0, 1.0) == doctest::Approx(-0.5).epsilon(1e-15));
  }
}
