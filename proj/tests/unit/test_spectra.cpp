#include <doctest.h>

#include <cmath>
#include <random>

#include "abex/spectra.hpp"

using namespace abex;

namespace {

QuantumNumbers qn(int l, int n, Equation eq = Equation::KleinGordon, double k3 = 0.0, int zeta = 1) {
  QuantumNumbers q;
  q.l = l;
  q.n = n;
  q.k3 = k3;
  q.zeta = zeta;
  q.equation = eq;
  return q;
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("subcase 1 worked values") {
    const auto kg = energy_case1(qn(1, 0), 0.5, 0.0, 1.0, 1.0);
    CHECK(kg.k0_squared == doctest::Approx(1.4375).epsilon(1e-14));
    CHECK(kg.k0 == doctest::Approx(1.1989578808281798).epsilon(1e-14));
    // Dirac at the same point: k0^2 = 2 - 1/4 for n = 1 (the shooting oracle
    // finds 1, 1.75, 1.8889, ... and nothing at 1.4375)
    const auto d = energy_case1(qn(1, 1, Equation::Dirac), 0.5, 0.0, 1.0, 1.0);
    CHECK(d.k0_squared == doctest::Approx(1.75).epsilon(1e-14));
    CHECK(energy_case1(qn(1, 0, Equation::Dirac), 0.5, 0.0, 1.0, 1.0).k0 == doctest::Approx(1.0).epsilon(1e-14));
  }

  TEST_CASE("subcase 1 boundary discriminant") {
    const auto r = energy_case1(qn(1, 0), 0.5, 1.5, 1.0, 1.0);
    CHECK(r.boundary_case);
    CHECK(std::isfinite(r.k0));
  }

  TEST_CASE("subcase 2 worked values") {
    CHECK(energy_case2(qn(1, 0), 0.5, 0.0, 1.0, 1.0, 0).k0_squared == doctest::Approx(1.4375).epsilon(1e-14));
    CHECK(energy_case2(qn(1, 1, Equation::Dirac), 0.5, 0.0, 1.0, 1.0, 1).k0_squared ==
          doctest::Approx(1.75).epsilon(1e-14));
    const auto free = energy_case2(qn(1, 2, Equation::KleinGordon, 0.4), 0.5, 0.0, 0.0, 1.3, 0);
    CHECK(free.k0_squared == doctest::Approx(1.3 * 1.3 + 0.16).epsilon(1e-14));
  }

  TEST_CASE("subcase 1 and subcase 2 agree at alpha = 0") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.05, 0.95), g(0.2, 3.0), m(0.3, 2.0), k(-1.0, 1.0);
    for (int i = 0; i < 100; ++i) {
      const double mu = u(rng), gamma = g(rng), mass = m(rng), k3 = k(rng);
      const int l = int(i % 7) - 3, n = i % 5;
      const auto a = energy_case1(qn(l, n, Equation::KleinGordon, k3), mu, 0.0, gamma, mass);
      const auto b = energy_case2(qn(l, n, Equation::KleinGordon, k3), mu, 0.0, gamma, mass, 0);
      CHECK(a.k0_squared == doctest::Approx(b.k0_squared).epsilon(1e-14));
    }
  }

  TEST_CASE("subcase 1 KG energies increase toward the continuum edge") {
    const double mu = 0.3, gamma = 1.2, m = 1.0, k3 = 0.5;
    const double edge = std::sqrt(m * m + k3 * k3 + gamma * gamma);
    double prev = 0.0;
    for (int n = 0; n < 40; ++n) {
      const double k0 = energy_case1(qn(2, n, Equation::KleinGordon, k3), mu, 0.0, gamma, m).k0;
      CHECK(k0 > prev);
      CHECK(k0 < edge);
      prev = k0;
    }
    CHECK(edge - prev < 1e-2);
  }

  TEST_CASE("index consistency at the returned energy") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.05, 0.95), a(0.0, 0.5);
    for (int i = 0; i < 50; ++i) {
      const int n = i % 4;
      const auto q = qn(1 + i % 3, n, Equation::KleinGordon, 0.2);
      const auto r = energy_case1(q, u(rng), a(rng), 1.1, 1.0);
      for (const auto& idx : r.indices) CHECK(std::abs(idx.n - n) < 1e-9);
    }
  }

  TEST_CASE("subcase 3 spectrum is invariant under epsilon flip at k3 = 0") {
    auto q = qn(1, 0, Equation::Dirac, 0.0);
    const auto a = energy_case3(q, 0.5, Case3Variant::A, 0.2, 0.3, 1.0, 1, 1.0, 2, 0);
    const auto b = energy_case3(q, 0.5, Case3Variant::A, 0.2, 0.3, 1.0, -1, 1.0, 2, 0);
    CHECK(a.k0 == doctest::Approx(b.k0).epsilon(1e-10));
  }

  TEST_CASE("case II") {
    CHECK(kperp_caseII(qn(1, 0), 0.5, 1.0, 0.0).kperp2 == doctest::Approx(0.4375).epsilon(1e-14));
    CHECK(kperp_caseII(qn(1, 0, Equation::Dirac), 0.5, 1.0, 0.5).kperp2 == doctest::Approx(0.75).epsilon(1e-14));
    CHECK(kperp_caseII(qn(1, 100000), 0.5, 1.3, 0.0).kperp2 == doctest::Approx(1.69).epsilon(1e-9));
  }

  TEST_CASE("Schrodinger a") {
    CHECK(energy_schrodinger_a(qn(0, 0), 0.5, 0, 0, 1.0, 0, 0, 1.0).k0 == doctest::Approx(0.375).epsilon(1e-14));
    // b = 0 when gamma L = alpha m: no binding term
    const double gamma = 1.2, L = 1.5, m = 0.8;
    const auto r = energy_schrodinger_a(qn(1, 2), 0.5, gamma * L / m, 0, gamma, 0, 0, m);
    CHECK(r.k0 == doctest::Approx(gamma * gamma / (2 * m)).epsilon(1e-13));
  }

  TEST_CASE("Schrodinger b") {
    for (int n = 0; n < 6; ++n)
      CHECK(energy_schrodinger_b(qn(0, n), 0.5, 0, 0, 1.0, 0, 0, 1.0).k0 == doctest::Approx(2 * n + 1).epsilon(1e-14));
    try {
      energy_schrodinger_b(qn(0, 0), 0.5, 0, 0, 0.0, 0, 0, 1.0);
      FAIL("expected NonpositiveB");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NonpositiveB);
    }
  }

  TEST_CASE("snap_index") {
    CHECK(snap_index(2.0 + 1e-11) == 2.0);
    CHECK(snap_index(2.1) == 2.1);
  }
}
