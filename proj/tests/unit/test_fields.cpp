#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "abex/fields.hpp"

using namespace abex;

namespace {

FieldConfig cyl(Potential f0, Potential f1, RadialProfile f2, CaseTag tag) {
  FieldConfig c;
  c.flux = decompose_flux(0.5, -1);
  c.f0 = std::move(f0);
  c.f1 = std::move(f1);
  c.f2 = f2;
  c.case_tag = tag;
  return c;
}

RadialProfile linear(double g) { return {RadialShape::Linear, 0, 0, g}; }

}  // namespace

TEST_SUITE("fields") {
  TEST_CASE("flux decomposition") {
    auto d = decompose_flux(2.5, -1);
    CHECK(d.l0 == 2);
    CHECK(d.mu == 0.5);
    d = decompose_flux(-0.3, -1);
    CHECK(d.l0 == -1);
    CHECK(d.mu == doctest::Approx(0.7).epsilon(1e-15));
    d = decompose_flux(2.5, 1);
    CHECK(d.l0 == -3);
    CHECK(d.mu == 0.5);
    CHECK_FALSE(decompose_flux(3.0, -1).nontrivial());
  }

  TEST_CASE("flux recomposition is exact") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    for (int i = 0; i < 1000; ++i) {
      const double f = u(rng);
      for (int sign : {-1, 1}) {
        const auto d = decompose_flux(f, sign);
        CHECK(d.mu >= 0.0);
        CHECK(d.mu < 1.0);
        CHECK(-sign * (d.l0 + d.mu) == doctest::Approx(f).epsilon(1e-15));
      }
    }
  }

  TEST_CASE("cylindrical fields of subcase 2") {
    const double a = 0.3, g = 1.7;
    const auto c = cyl(RadialProfile{}, RadialProfile{RadialShape::InverseR, a}, linear(g), CaseTag::I2);
    const auto v = eval_cyl_fields(c, 2.0, 0.1, 0.2);
    CHECK(v.E_r == 0.0);
    CHECK(v.E_z == 0.0);
    CHECK(v.H_phi == doctest::Approx(-a / 4));
    CHECK(v.H_z == doctest::Approx(g / 2));
  }

  TEST_CASE("lightfront field strength") {
    const double c0 = 0.8;
    AxialProfile f{AxialArgument::Lightfront, ScalarProfile(ScalarKind::Linear, c0)};
    const auto c = cyl(f, f, linear(1.0), CaseTag::II);
    const auto v = eval_cyl_fields(c, 1.3, 0.4, 1.1);
    CHECK(v.E_z == doctest::Approx(c0));
    CHECK(v.H_z == doctest::Approx(1.0 / 1.3));
  }

  TEST_CASE("zero field") {
    const auto c = cyl(RadialProfile{}, RadialProfile{}, RadialProfile{}, CaseTag::I1);
    const auto v = eval_cyl_fields(c, 1.0, 0.0, 0.0);
    CHECK(v.E_r == 0.0);
    CHECK(v.H_z == 0.0);
    auto s = c;
    s.case_tag = CaseTag::Spherical;
    const auto w = eval_sph_fields(s, 1.0, 1.0);
    CHECK(w.E_r == 0.0);
    CHECK(w.H_r == 0.0);
  }

  TEST_CASE("spherical fields") {
    auto c = cyl(RadialProfile{RadialShape::InverseR, 0.9}, PolarProfile{0.4, 0.1}, RadialProfile{},
                 CaseTag::Spherical);
    const auto v = eval_sph_fields(c, 2.0, 1.0);
    CHECK(v.E_r == doctest::Approx(0.9 / 4));
    CHECK(v.H_r == doctest::Approx(-0.4 / 4));
    CHECK_THROWS_AS(eval_sph_fields(c, 1.0, 0.0), Error);
  }

  TEST_CASE("axial potential gradient matches finite differences") {
    AxialProfile p{AxialArgument::BoostInvariant, ScalarProfile(ScalarKind::Tanh, 0.7, 0.9)};
    const double z = 0.3, x0 = 1.4, h = 1e-6;
    for (auto role : {PotentialRole::F0, PotentialRole::F1}) {
      const auto [dz, dx0] = axial_potential_gradient(p, role, z, x0);
      CHECK(dz == doctest::Approx((axial_potential(p, role, z + h, x0) - axial_potential(p, role, z - h, x0)) / (2 * h)).epsilon(1e-7));
      CHECK(dx0 == doctest::Approx((axial_potential(p, role, z, x0 + h) - axial_potential(p, role, z, x0 - h)) / (2 * h)).epsilon(1e-7));
    }
  }

  TEST_CASE("tabulated profile interpolates and refuses to extrapolate") {
    std::vector<double> x{0, 1, 2, 3, 4}, y{0, 1, 4, 9, 16};
    const auto p = ScalarProfile::tabulated(x, y);
    CHECK(p.value(2.0) == doctest::Approx(4.0));
    CHECK_THROWS_AS(p.value(5.0), Error);
  }

  TEST_CASE("validation") {
    auto bad = cyl(RadialProfile{RadialShape::InverseR, 0.3}, RadialProfile{RadialShape::InverseR, 0.3},
                   linear(1.0), CaseTag::I1);
    CHECK_THROWS_AS(validate_config(bad), Error);
    try {
      validate_config(bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::UnsupportedConfiguration);
    }
    RadialProfile a0{RadialShape::SchrodingerA0}, a1{RadialShape::SchrodingerA1};
    CHECK_NOTHROW(validate_config(cyl(a0, a1, linear(1.0), CaseTag::SchrodingerA)));
    AxialProfile t{AxialArgument::Time, ScalarProfile(ScalarKind::Tanh, 0.5, 2.0)};
    CHECK_NOTHROW(validate_config(cyl(RadialProfile{}, t, linear(1.0), CaseTag::II)));
  }
}
