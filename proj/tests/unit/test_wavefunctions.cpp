#include <doctest.h>

#include <cmath>
#include <numbers>

#include "abex/wavefunctions.hpp"

using namespace abex;
using std::numbers::pi;

namespace {

StateParams worked_point() {
  StateParams q;
  q.l = 1;
  q.mu = 0.5;
  q.gamma = 1.0;
  q.m = 1.0;
  return q;
}

}  // namespace

TEST_SUITE("wavefunctions") {
  TEST_CASE("phase Q") {
    CHECK(phase_Q(2, 2, 0, 0, 1.3, 0.4, 0.7) == 0.0);
    CHECK(phase_Q(3, 1, 0, 0, pi, 0, 0) == doctest::Approx(2 * pi));
    CHECK(phase_Q(2, 1, 1.0, 0.5, pi / 2, 1.0, 2.0) == doctest::Approx(pi / 2 - 2.0 - 0.5));
  }

  TEST_CASE("radial indices of the worked subcase-1 state") {
    const auto idx = radial_indices(RadialCase::Case1, 0, worked_point(), std::sqrt(1.4375));
    CHECK(idx.p == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(std::abs(idx.n) < 1e-13);
    CHECK(idx.x_scale == doctest::Approx(0.75).epsilon(1e-13));
    CHECK(idx.x(1.0) == doctest::Approx(1.5).epsilon(1e-13));
  }

  TEST_CASE("radial indices of the worked case II state") {
    const auto idx = radial_indices(RadialCase::CaseII, 0, worked_point(), 0.4375);
    CHECK(idx.p == doctest::Approx(3.0).epsilon(1e-13));
    CHECK(std::abs(idx.n) < 1e-13);
  }

  TEST_CASE("subcase 3 variant b with beta = 0") {
    StateParams q = worked_point();
    q.alpha = 0.2;
    q.k3 = 0.1;
    for (int s : {1, 2}) {
      const auto idx = radial_indices(RadialCase::Case3b, s, q, 1.3);
      const double tau = s * (2 - s);
      CHECK(idx.p - idx.n == doctest::Approx(std::abs(q.L() - tau)).epsilon(1e-12));
    }
  }

  TEST_CASE("radial_v worked value and derivative") {
    const auto idx = radial_indices(RadialCase::Case1, 0, worked_point(), std::sqrt(1.4375));
    const Complex v = radial_v(idx, 1.0, 0.0, 1.0);
    CHECK(v.real() == doctest::Approx(std::exp(-0.75) * std::pow(1.5, 1.5) / std::sqrt(6.0)).epsilon(1e-13));
    const double h = 1e-5;
    const Complex fd = (radial_v(idx, 1.0, 0.0, 1.0 + h) - radial_v(idx, 1.0, 0.0, 1.0 - h)) / (2 * h);
    CHECK(std::abs(radial_v_derivative(idx, 1.0, 0.0, 1.0) - fd) < 1e-8);
  }

  TEST_CASE("second solution scales as x^{(n-p)/2} near the origin") {
    RadialIndexSet idx;
    idx.p = 1.7;
    idx.n = 0.4;
    idx.x_scale = 0.5;
    const double r1 = 1e-4, r2 = 2e-4;
    const double ratio = std::abs(radial_v(idx, 0.0, 1.0, r2) / radial_v(idx, 0.0, 1.0, r1));
    CHECK(ratio == doctest::Approx(std::pow(2.0, (idx.n - idx.p) / 2)).epsilon(1e-3));
  }

  TEST_CASE("bound states decay") {
    const auto idx = radial_indices(RadialCase::Case1, 0, worked_point(), std::sqrt(1.4375));
    CHECK(std::abs(radial_v(idx, 1.0, 0.0, 60.0)) < 1e-15);
  }

  TEST_CASE("subcase 3 zero weights give a zero spinor") {
    StateParams q = worked_point();
    q.alpha = 0.2;
    q.beta = 0.3;
    const auto psi = reduced_spinor_case3(q, Case3Variant::A, 1.1, 0.0, 0.0, 1.0, 0.0, 1.0);
    CHECK(psi.norm() == 0.0);
  }

  TEST_CASE("Schrodinger radial functions") {
    StateParams q = worked_point();
    q.l = 0;
    for (auto variant : {SchrodingerVariant::A, SchrodingerVariant::B}) {
      int sign_changes = 0;
      double prev = psi_schrodinger(variant, q, 2, 1e-3);
      for (int i = 1; i <= 4000; ++i) {
        const double cur = psi_schrodinger(variant, q, 2, 1e-3 + i * 5e-3);
        if (cur * prev < 0) ++sign_changes;
        prev = cur;
      }
      CHECK(sign_changes == 2);
      CHECK(psi_schrodinger(variant, q, 0, 1.0) > 0.0);
    }
    // proportional to the Laguerre function of the same state
    const double k0 = energy_schrodinger_a({0, 2}, 0.5, 0, 0, 1.0, 0, 0, 1.0).k0;
    const auto idx = radial_indices(RadialCase::SchrodingerA, 0, q, k0);
    const double c = psi_schrodinger(SchrodingerVariant::A, q, 2, 0.7) / radial_v(idx, 1.0, 0.0, 0.7).real();
    for (double r : {0.3, 1.1, 2.4, 4.0})
      CHECK(psi_schrodinger(SchrodingerVariant::A, q, 2, r) / radial_v(idx, 1.0, 0.0, r).real() ==
            doctest::Approx(c).epsilon(1e-9));
  }

  TEST_CASE("lightfront free and constant fields") {
    const LightfrontState st{1.3, 1, 1.0, 0.4};
    for (double c : {0.0, 0.35}) {
      const double lam = st.lambda_ev - c;
      for (auto [z, x0] : {std::pair{0.2, 0.9}, {-1.0, 0.5}}) {
        const double S = -0.5 * (st.lambda_ev * (x0 + z) + (1.0 + 0.4) * (x0 - z) / lam);
        const Complex want = std::pow(lam, -1.0) * std::exp(Complex(0, 1) * S);
        const Complex got = lightfront_w(st, ScalarProfile(ScalarKind::Constant, c), z, x0);
        CHECK(std::abs(got - want) < 1e-12);
      }
    }
  }

  TEST_CASE("boost variant a rejects alpha = 0") {
    CHECK_THROWS_AS(boost_w(1, 0.6, BoostVariant::A, 0.0, 1.0, 0.4, 0.2, 1.0), Error);
  }

  TEST_CASE("time phase trivial profiles") {
    const double k3 = 0.3, kp = 0.4375, m = 1.2, x0 = 2.5;
    CHECK(schrodinger_time_phase(ScalarProfile{}, k3, kp, m, x0) == doctest::Approx((kp + k3 * k3) * x0 / (2 * m)));
    CHECK(schrodinger_time_phase(ScalarProfile(ScalarKind::Constant, k3), k3, kp, m, x0) ==
          doctest::Approx(kp * x0 / (2 * m)));
  }

  TEST_CASE("gauge reduction trivial cases") {
    const double kp = 0.4375, m = 1.0;
    auto f0 = [](double z, double x0) { return std::exp(-z * z) * (1 + 0.1 * x0); };
    auto zero = [](double, double) { return 0.0; };
    auto g = gauge_reduce(f0, zero, kp, m);
    CHECK(g.V(0.7, 1.2) == doctest::Approx(f0(0.7, 1.2)));
    CHECK(g.phi(0.7, 1.2) == doctest::Approx(kp * 1.2 / (2 * m)));
    auto f1 = [](double, double x0) { return 0.5 * std::tanh(2 * x0); };
    auto h = gauge_reduce(zero, f1, kp, m);
    const double fp = 0.5 * 2 / std::pow(std::cosh(2 * 0.8), 2);
    CHECK(h.V(1.5, 0.8) == doctest::Approx(-1.5 * fp).epsilon(1e-7));
  }
}
