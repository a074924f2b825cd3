#include <doctest.h>

#include <cmath>

#include "abex/oracle.hpp"
#include "abex/oracle_problems.hpp"

using namespace abex;
using namespace abex::oracle;

namespace {

// Two-dimensional oscillator: v'' + v'/r + (lambda - r^2 - L^2/r^2) v = 0,
// eigenvalues 2(2n + L + 1).
RadialProblem oscillator(double L) {
  RadialProblem pb;
  pb.U = [L](double r, double lam) { return lam - r * r - L * L / (r * r); };
  pb.lambda_lo = 0.0;
  pb.lambda_hi = 40.0;
  pb.nu = [L](double) { return L; };
  return pb;
}

}  // namespace

TEST_SUITE("oracle") {
  TEST_CASE("oscillator eigenvalues") {
    const auto rep = solve_radial_eigen(oscillator(1.5), 3);
    REQUIRE(rep.eigenvalues.size() == 3);
    CHECK(rep.eigenvalues[0].value == doctest::Approx(5.0).epsilon(1e-8));
    CHECK(rep.eigenvalues[1].value == doctest::Approx(9.0).epsilon(1e-8));
    CHECK(rep.eigenvalues[2].value == doctest::Approx(13.0).epsilon(1e-8));
    CHECK(rep.eigenvalues[2].nodes == 2);
    CHECK(rep.find(1, 9.0).has_value());
  }

  TEST_CASE("sturm count") {
    const auto pb = oscillator(0.5);  // levels 3, 7, 11
    CHECK(sturm_count(pb, 2.0, 8.0, 800) == 0);
    CHECK(sturm_count(pb, 8.0, 8.0, 800) == 2);
    CHECK(sturm_count(pb, 12.0, 8.0, 800) == 3);
  }

  TEST_CASE("Klein-Gordon subcase 2 problem, worked point") {
    FieldParams p;
    p.L = 1.5;
    p.gamma = 1.0;
    const auto rep = solve_radial_eigen(kg_case2_problem(p, {0.0, 2.0 * (1 - 1e-12)}), 2);
    REQUIRE(!rep.eigenvalues.empty());
    CHECK(rep.eigenvalues[0].value == doctest::Approx(1.4375).epsilon(1e-8));
  }

  TEST_CASE("case II problem, worked point") {
    FieldParams p;
    p.L = 1.5;
    p.gamma = 1.0;
    const auto rep = solve_radial_eigen(caseII_problem(p, 0, {-10.0, 1.0 - 1e-12}), 1);
    REQUIRE(!rep.eigenvalues.empty());
    CHECK(rep.eigenvalues[0].value == doctest::Approx(0.4375).epsilon(1e-8));
  }

  TEST_CASE("first-order Dirac shooting, subcase 1 at alpha = 0") {
    FieldParams p;
    p.L = 1.5;
    p.gamma = 1.0;
    const auto rep = solve_first_order_eigen(dirac_case1_problem(p, {0.5, std::sqrt(2.0) - 1e-4}));
    REQUIRE(rep.eigenvalues.size() >= 3);
    CHECK(rep.eigenvalues[0].value == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(rep.eigenvalues[1].value == doctest::Approx(std::sqrt(1.75)).epsilon(1e-8));
    CHECK(rep.eigenvalues[2].value == doctest::Approx(std::sqrt(17.0 / 9.0)).epsilon(1e-8));
  }

  TEST_CASE("second-order residual detects a wrong solution") {
    const double L = 1.5;
    auto U = [L](double r) { return 5.0 - r * r - L * L / (r * r); };
    auto v = [L](double r) { return Complex(std::pow(r, L) * std::exp(-r * r / 2)); };
    auto bad = [L](double r) { return Complex(std::pow(r, L) * std::exp(-r * r / 2.02)); };
    std::vector<double> grid;
    for (int i = 1; i <= 30; ++i) grid.push_back(0.1 * i);
    const double ok = residual_second_order(U, v, grid);
    CHECK(ok < 1e-8);
    CHECK(residual_second_order(U, bad, grid) > 1e3 * ok);
  }

  TEST_CASE("normalization integral") {
    // I_{3,0}(1.5 r): int e^{-x} x^3/6 r dr = 24 / (6 * 1.5^2)
    auto v = [](double r) {
      const double x = 1.5 * r;
      return Complex(std::exp(-x / 2) * std::pow(x, 1.5) / std::sqrt(6.0));
    };
    CHECK(normalize(v, 1.0 / 1.5) == doctest::Approx(24.0 / 13.5).epsilon(1e-9));
  }

  TEST_CASE("normalization of a non-decaying function diverges") {
    auto v = [](double r) { return Complex(1.0 / (1.0 + r)); };
    CHECK_THROWS_AS(normalize(v), Error);
  }
}
