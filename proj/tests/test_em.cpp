#include <doctest.h>

#include <cmath>

#include <nlohmann/json.hpp>

#include "stec/em.hpp"
#include "stec/sampling.hpp"
#include "stec/scenario.hpp"

using namespace stec;
using MV = Multivector<Rational>;

namespace {

Blade bl(std::initializer_list<int> idx) { return Blade::from_indices(std::vector<int>(idx)); }

MV spatial(std::initializer_list<Rational> comps) {
  MV v(minkowski());
  int i = 1;
  for (const Rational& c : comps) v.add_term(Blade::axis(i++), c);
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("em");

TEST_CASE("assemble and decompose the field bivector") {
  MV e1 = MV::basis(minkowski(), bl({1}));
  MV e3 = MV::basis(minkowski(), bl({3}));
  MV zero(minkowski());

  CHECK(assemble_F_value(e1, zero) == MV::basis(minkowski(), bl({0, 1})));
  CHECK(assemble_F_value(zero, e3) == MV::basis(minkowski(), bl({1, 2})));
  CHECK(assemble_F_value(e1, e3) ==
        MV::basis(minkowski(), bl({0, 1})) + MV::basis(minkowski(), bl({1, 2})));

  auto [e_of, b_of] = decompose_F_value(MV::basis(minkowski(), bl({0, 2})));
  CHECK(e_of == MV::basis(minkowski(), bl({2})));
  CHECK(b_of.is_zero());
  auto [e_b, b_b] = decompose_F_value(MV::basis(minkowski(), bl({2, 3})));
  CHECK(e_b.is_zero());
  CHECK(b_b == MV::basis(minkowski(), bl({1})));
  auto [e_z, b_z] = decompose_F_value(zero);
  CHECK(e_z.is_zero());
  CHECK(b_z.is_zero());

  CHECK_THROWS_AS(decompose_F_value(MV::basis(minkowski(), bl({1}))), std::domain_error);
  CHECK_THROWS_AS(spatial_hodge(MV::basis(minkowski(), bl({0, 1}))), std::domain_error);

  // field-level assembly rejects non-spatial inputs
  PolynomialField with_time(minkowski());
  with_time.set_component(bl({0}), Polynomial::constant(4, Rational(1)));
  PolynomialField spatial_ok(minkowski());
  spatial_ok.set_component(bl({2}), Polynomial::constant(4, Rational(1)));
  CHECK_THROWS_AS(assemble_F(with_time, spatial_ok), std::domain_error);
  CHECK_THROWS_AS(assemble_F(spatial_ok, with_time), std::domain_error);
}

TEST_CASE("assemble/decompose round-trips on random rational fields") {
  Rng rng(17);
  for (int t = 0; t < 200; ++t) {
    MV e(minkowski()), b(minkowski());
    for (int i = 1; i <= 3; ++i) {
      e.add_term(Blade::axis(i), rng.rational());
      b.add_term(Blade::axis(i), rng.rational());
    }
    auto [e2, b2] = decompose_F_value(assemble_F_value(e, b));
    CHECK(e2 == e);
    CHECK(b2 == b);
    // e0 never survives a spatial Hodge contraction
    CHECK(left_contraction(MV::basis(minkowski(), bl({0})), spatial_hodge(b)).is_zero());
  }
}

TEST_CASE("lorentz force on the worked examples") {
  MV e0 = MV::basis(minkowski(), bl({0}));
  // rho=1, j=0, E=e1, B=0 -> e1
  {
    MV f = assemble_F_value(spatial({Rational(1), Rational(0), Rational(0)}), MV(minkowski()));
    CHECK(lorentz_force(e0, f) == MV::basis(minkowski(), bl({1})));
  }
  // rho=0, j=e1, E=0, B=e3 -> j x B = -e2
  {
    MV j = spatial({Rational(1), Rational(0), Rational(0)});
    MV b = spatial({Rational(0), Rational(0), Rational(1)});
    MV f = assemble_F_value(MV(minkowski()), b);
    CHECK(lorentz_force(j, f) == -MV::basis(minkowski(), bl({2})));
  }
  // rho=0, j=e1, E=e1, B=0 -> e0 (dissipated power only)
  {
    MV j = spatial({Rational(1), Rational(0), Rational(0)});
    MV f = assemble_F_value(j, MV(minkowski()));
    CHECK(lorentz_force(j, f) == MV::basis(minkowski(), bl({0})));
  }
}

TEST_CASE("differential maxwell residuals flag violations and accept solutions") {
  // static E = x1 e1 with rho = 1 solves everything exactly
  {
    EMScenario sc = linear_e_scenario({Rational(1), Rational(0), Rational(0)});
    auto [homog, inhomog] = maxwell_residual_fields(*sc.F_poly, *sc.J_poly);
    CHECK(homog.is_zero());
    CHECK(inhomog.is_zero());
    auto classical =
        classical_residual_fields(*sc.E_poly, *sc.B_poly, *sc.rho_poly, *sc.j_poly);
    for (const auto& r : classical) CHECK(r.is_zero());
  }
  // F = 0 with rho != 0 leaves exactly -rho e0 in the inhomogeneous residual
  {
    PolynomialField f(minkowski()), j(minkowski());
    PolynomialField current = current_density(Polynomial::constant(4, Rational(2)), j);
    auto [homog, inhomog] = maxwell_residual_fields(f, current);
    CHECK(homog.is_zero());
    std::vector<Rational> x(4, Rational(0));
    CHECK(inhomog(x) == MV::basis(minkowski(), bl({0}), Rational(-2)));
  }
  // B = x1 e1 violates the magnetic Gauss law and nothing else static
  {
    PolynomialField e(minkowski()), b(minkowski()), j(minkowski());
    b.set_component(Blade::axis(1), Polynomial::variable(4, 1));
    auto classical = classical_residual_fields(e, b, Polynomial(4), j);
    CHECK(classical[0].is_zero());
    CHECK(!classical[1].is_zero());
    std::vector<Rational> x(4, Rational(0));
    CHECK(classical[1](x) == MV::scalar(minkowski(), Rational(1)));
    CHECK(classical[2].is_zero());
    CHECK(classical[3].is_zero());
  }
}

TEST_CASE("plane wave is a vacuum solution within finite-difference error") {
  EMScenario sc = plane_wave_scenario(1.0, 3, 1, 0.0);
  std::vector<double> x{0.3, 0.1, -0.4, 0.7};
  auto [homog, inhomog] = maxwell_residuals(sc.F, sc.J, x);
  CHECK(inf_norm(homog) < 1e-8);
  CHECK(inf_norm(inhomog) < 1e-8);
  auto classical = classical_residuals(sc.E, sc.B, sc.rho, sc.j, x);
  for (const auto& r : classical) CHECK(inf_norm(r) < 1e-8);

  // waves along other axes too
  EMScenario sc2 = plane_wave_scenario(2.0, 1, 3, 0.5);
  auto [h2, i2] = maxwell_residuals(sc2.F, sc2.J, x);
  CHECK(inf_norm(h2) < 1e-7);
  CHECK(inf_norm(i2) < 1e-7);
  CHECK_THROWS_AS(plane_wave_scenario(1.0, 2, 2, 0.0), std::domain_error);

  // the standing wave solves the equations with a visible O(h^2) residual
  EMScenario standing = standing_wave_scenario(1.0, 3, 1);
  auto [sh, si] = maxwell_residuals(standing.F, standing.J, x);
  CHECK(inf_norm(sh) < 1e-9);
  CHECK(inf_norm(si) < 1e-9);
  CHECK(inf_norm(sh) + inf_norm(si) > 0.0);
}

TEST_CASE("lorentz decomposition holds for random rational inputs") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    MV e(minkowski()), b(minkowski()), j(minkowski());
    for (int i = 1; i <= 3; ++i) {
      e.add_term(Blade::axis(i), rng.rational());
      b.add_term(Blade::axis(i), rng.rational());
      j.add_term(Blade::axis(i), rng.rational());
    }
    Rational rho = rng.rational();
    MV f = assemble_F_value(e, b);
    MV current = j + MV::basis(minkowski(), bl({0}), rho);
    MV force = lorentz_force(current, f);
    // time part: dissipated power j.E
    CHECK(force.coefficient(bl({0})) == dot(j, e));
    // spatial part: rho E + j x B, via the classical component formula
    Rational j1 = j.coefficient(bl({1})), j2 = j.coefficient(bl({2})),
             j3 = j.coefficient(bl({3}));
    Rational b1 = b.coefficient(bl({1})), b2 = b.coefficient(bl({2})),
             b3 = b.coefficient(bl({3}));
    MV jxb(minkowski());
    jxb.add_term(bl({1}), j2 * b3 - j3 * b2);
    jxb.add_term(bl({2}), j3 * b1 - j1 * b3);
    jxb.add_term(bl({3}), j1 * b2 - j2 * b1);
    CHECK(grade_project(force, 1) - MV::basis(minkowski(), bl({0}), force.coefficient(bl({0}))) ==
          e * rho + jxb);
  }
}

TEST_CASE("charge conservation follows from nilpotency") {
  Rng rng(29);
  for (int t = 0; t < 100; ++t) {
    PolynomialField f = random_polynomial_field(rng, minkowski(), 2);
    PolynomialField current = f.interior_derivative();
    CHECK(current.interior_derivative().is_zero());
  }
}

TEST_CASE("integral checks on exact scenarios") {
  Quadrature q2{2, 1};
  // Gauss electric cube: boundary flux of F and volume flux of J both 3
  {
    EMScenario sc = linear_e_scenario({Rational(1), Rational(1), Rational(1)});
    Cell cube = Cell::box(minkowski(), {0, 0, 0, 0},
                          {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    FieldFn f_fn = [&sc](std::span<const double> x) { return sc.F(x); };
    FieldFn j_fn = [&sc](std::span<const double> x) { return sc.J(x); };
    CHECK(flux(f_fn, boundary(cube), q2).coefficient(Blade{}) == 3.0);
    CHECK(flux(j_fn, Chain(cube), q2).coefficient(Blade{}) == 3.0);
    CHECK(inf_norm(integral_inhomogeneous_residual(f_fn, j_fn, cube, q2)) == 0.0);
    CHECK(inf_norm(integral_homogeneous_residual(f_fn, cube, q2)) == 0.0);
  }
  // constant F over any 3-cell circulates to zero around the boundary
  {
    EMScenario sc = uniform_b_scenario({Rational(0), Rational(0), Rational(1)});  // F = e12
    Cell box = Cell::extruded(
        Cell::box(minkowski(), {0, 0, 0, 0}, {{0, 1, 0, 0}, {0, 0, 1, 0}}), 0.0, 1.0);
    FieldFn f_fn = [&sc](std::span<const double> x) { return sc.F(x); };
    CHECK(inf_norm(integral_homogeneous_residual(f_fn, box, q2)) == 0.0);
  }
  // a deliberate J mismatch shows up as exactly the mismatched volume flux
  {
    EMScenario sc = uniform_e_scenario({Rational(1), Rational(0), Rational(0)});
    Cell cube = Cell::box(minkowski(), {0, 0, 0, 0},
                          {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    FieldFn f_fn = [&sc](std::span<const double> x) { return sc.F(x); };
    FieldFn bogus = [](std::span<const double>) {
      return Multivector<double>::basis(minkowski(), Blade::axis(0), 5.0);
    };
    FieldFn zero = [](std::span<const double>) { return Multivector<double>(minkowski()); };
    Multivector<double> with_bogus = integral_inhomogeneous_residual(f_fn, bogus, cube, q2);
    Multivector<double> without = integral_inhomogeneous_residual(f_fn, zero, cube, q2);
    double separate = flux(bogus, Chain(cube), q2).coefficient(Blade{});
    CHECK(inf_norm(without) < 1e-12);
    CHECK(with_bogus.coefficient(Blade{}) == doctest::Approx(-separate));
    CHECK(separate != 0.0);
  }
  // plane wave over the space-time box from the scenario defaults
  {
    MaxwellSetup setup = default_maxwell_setup();
    FieldFn f_fn = [&setup](std::span<const double> x) { return setup.scenario.F(x); };
    FieldFn j_fn = [&setup](std::span<const double> x) { return setup.scenario.J(x); };
    CHECK(inf_norm(integral_homogeneous_residual(f_fn, setup.region, setup.quadrature)) < 1e-7);
    CHECK(inf_norm(integral_inhomogeneous_residual(f_fn, j_fn, setup.region, setup.quadrature)) <
          1e-7);
  }
  Cell square = Cell::box(minkowski(), {0, 0, 0, 0}, {{0, 1, 0, 0}, {0, 0, 1, 0}});
  FieldFn zero = [](std::span<const double>) { return Multivector<double>(minkowski()); };
  CHECK_THROWS_AS(integral_homogeneous_residual(zero, square, q2), std::domain_error);
}

TEST_CASE("scenario JSON loading") {
  nlohmann::json doc = {
      {"name", "pw"},
      {"family", "plane_wave"},
      {"params", {{"amplitude", 1.0}, {"propagation_axis", 3}, {"polarization_axis", 1}}},
      {"region",
       {{"type", "time_box"},
        {"t0", 0.0},
        {"t1", 1.0},
        {"plane_axes", {1, 2}},
        {"origin", {0.0, 0.0, 0.0, 0.0}}}},
      {"quadrature", {{"gauss_order", 10}, {"subdivisions", 1}}},
      {"tolerances", {{"differential", 1e-8}, {"integral", 1e-7}}},
  };
  MaxwellSetup setup = load_maxwell_setup(doc);
  CHECK(setup.scenario.name == "pw");
  CHECK(setup.quadrature.gauss_order == 10);
  CHECK(setup.region.dim() == 3);
  std::vector<double> x{0.2, 0.0, 0.0, 0.0};
  CHECK(setup.scenario.E(x).coefficient(bl({1})) == doctest::Approx(std::cos(0.2)));

  nlohmann::json bad = doc;
  bad["family"] = "warp-core";
  CHECK_THROWS_AS(load_maxwell_setup(bad), std::invalid_argument);

  // a disk-based space-time region works for the integral laws too
  nlohmann::json disk_region = {{"type", "time_disk"}, {"t0", 0.0},   {"t1", 0.5},
                                {"plane_axes", {1, 2}}, {"radius", 1.0},
                                {"center", {0.0, 0.0, 0.0, 0.0}}};
  Cell disk_box = region_from_json(disk_region);
  CHECK(disk_box.dim() == 3);
  EMScenario wave = plane_wave_scenario(1.0, 2, 1, 0.3);
  FieldFn f_fn = [&wave](std::span<const double> x) { return wave.F(x); };
  // the disk pullback composes cos with sin, so give the rule some headroom
  CHECK(inf_norm(integral_homogeneous_residual(f_fn, disk_box, Quadrature{20, 2})) < 1e-7);

  nlohmann::json poly_doc = {
      {"name", "gauss-violation"},
      {"family", "polynomial"},
      {"params",
       {{"E", {{"signature", {1, 3}}, {"components", nlohmann::json::array()}}},
        {"B",
         {{"signature", {1, 3}},
          {"components",
           {{{"blade", {1}},
             {"poly", {{{"coeff", "1"}, {"exps", {0, 1, 0, 0}}}}}}}}}},
        {"j", {{"signature", {1, 3}}, {"components", nlohmann::json::array()}}},
        {"rho", {{"signature", {1, 3}}, {"components", nlohmann::json::array()}}}}},
  };
  MaxwellSetup bad_b = load_maxwell_setup(poly_doc);
  REQUIRE(bad_b.scenario.is_polynomial());
  auto classical = classical_residual_fields(*bad_b.scenario.E_poly, *bad_b.scenario.B_poly,
                                             *bad_b.scenario.rho_poly, *bad_b.scenario.j_poly);
  CHECK(!classical[1].is_zero());  // div B = 1
}

TEST_SUITE_END();
