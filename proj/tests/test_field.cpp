#include <doctest.h>

#include <cmath>

#include "stec/field.hpp"
#include "stec/sampling.hpp"

using namespace stec;
using MV = Multivector<Rational>;

namespace {

Blade bl(std::initializer_list<int> idx) { return Blade::from_indices(std::vector<int>(idx)); }

std::vector<Rational> qpos(std::initializer_list<double> xs) {
  std::vector<Rational> out;
  for (double x : xs) out.emplace_back(static_cast<long long>(x * 16), 16);
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("field");

TEST_CASE("formal partial derivatives") {
  Signature sig(0, 3);
  PolynomialField f(sig);
  Polynomial x1 = Polynomial::variable(3, 1);
  f.set_component(Blade::axis(2), x1 * x1);  // x1^2 e2
  std::vector<Rational> at{Rational(3), Rational(5), Rational(-2)};
  CHECK(partial(f, 1, at) == MV::basis(sig, bl({2}), Rational(10)));
  PolynomialField constant(sig);
  constant.set_component(Blade::axis(0), Polynomial::constant(3, Rational(4)));
  CHECK(partial(constant, 0, at).is_zero());
  CHECK_THROWS_AS(f.partial(3), std::domain_error);
}

TEST_CASE("central difference of sin at 0 is 1 within h^2/6") {
  Signature sig(0, 1);
  AnalyticField f(sig, [](std::span<const double> x) {
    return Multivector<double>::scalar(Signature(0, 1), std::sin(x[0]));
  });
  std::vector<double> origin{0.0};
  double got = f.partial(0, origin).coefficient(Blade{});
  double h = f.fd_step();
  CHECK(std::fabs(got - 1.0) <= h * h / 6.0 + 1e-13);
  CHECK(std::fabs(got - 1.0) > 0.0);  // the truncation error is visible
}

TEST_CASE("exterior derivative recovers gradients with metric signs") {
  // scalar x1 in (0,3) -> e1
  {
    Signature sig(0, 3);
    PolynomialField f(sig);
    f.set_component(Blade{}, Polynomial::variable(3, 1));
    CHECK(f.exterior_derivative()(qpos({0, 0, 0})) == MV::basis(sig, bl({1})));
  }
  // scalar x0 in (1,3) -> -e0
  {
    Signature sig(1, 3);
    PolynomialField f(sig);
    f.set_component(Blade{}, Polynomial::variable(4, 0));
    CHECK(f.exterior_derivative()(qpos({0, 0, 0, 0})) == -MV::basis(sig, bl({0})));
  }
  // x0 e1 in (0,2) -> e01
  {
    Signature sig(0, 2);
    PolynomialField f(sig);
    f.set_component(Blade::axis(1), Polynomial::variable(2, 0));
    CHECK(f.exterior_derivative()(qpos({0, 0})) == MV::basis(sig, bl({0, 1})));
  }
}

TEST_CASE("interior derivative recovers divergences") {
  Signature sig(0, 3);
  PolynomialField f(sig);
  f.set_component(Blade::axis(1), Polynomial::variable(3, 1));  // x1 e1
  CHECK(f.interior_derivative()(qpos({1, 2, 3})) == MV::scalar(sig, Rational(1)));

  PolynomialField radial(sig);
  for (int i = 0; i < 3; ++i) radial.set_component(Blade::axis(i), Polynomial::variable(3, i));
  CHECK(radial.interior_derivative()(qpos({1, 2, 3})) == MV::scalar(sig, Rational(3)));

  PolynomialField scalar(sig);
  scalar.set_component(Blade{}, Polynomial::variable(3, 0) * Polynomial::variable(3, 2));
  CHECK(scalar.interior_derivative().is_zero());
}

TEST_CASE("curl3 matches the classical component curl") {
  Signature sig(0, 3);
  PolynomialField f(sig);
  f.set_component(Blade::axis(0), -Polynomial::variable(3, 1));
  f.set_component(Blade::axis(1), Polynomial::variable(3, 0));
  PolynomialField c = curl3(f);
  CHECK(c(qpos({0.5, -0.25, 2})) == MV::basis(sig, bl({2}), Rational(2)));

  // curl of a gradient vanishes identically
  PolynomialField phi(sig);
  phi.set_component(Blade{}, Polynomial::variable(3, 0) * Polynomial::variable(3, 1) *
                                 Polynomial::variable(3, 2));
  CHECK(curl3(phi.exterior_derivative()).is_zero());

  PolynomialField radial(sig);
  radial.set_component(Blade::axis(0), Polynomial::variable(3, 0));
  CHECK(curl3(radial).is_zero());

  CHECK_THROWS_AS(curl3(phi), std::domain_error);  // grade 0, not a vector field
  PolynomialField wrong_sig(Signature(1, 3));
  CHECK_THROWS_AS(curl3(wrong_sig), std::domain_error);
}

TEST_CASE("derivatives vanish outside their grade windows") {
  Rng rng(47);
  for (const Signature& sig : {Signature(0, 2), Signature(1, 3)}) {
    // exterior derivative of a top-grade field: every merge sign vanishes
    PolynomialField top = random_polynomial_field(rng, sig, sig.dims());
    CHECK(top.exterior_derivative().is_zero());
    // interior derivative of a scalar field
    PolynomialField scalar(sig);
    scalar.set_component(Blade{}, random_polynomial(rng, sig.dims(), 3, 4));
    CHECK(scalar.interior_derivative().is_zero());
  }
}

TEST_CASE("nabla_apply is identically zero on polynomial fields") {
  Rng rng(31);
  std::vector<Signature> sigs{Signature(0, 2), Signature(0, 3), Signature(1, 3)};
  for (const Signature& sig : sigs) {
    for (int grade = 0; grade <= sig.dims(); ++grade) {
      for (int t = 0; t < 25; ++t) {
        PolynomialField f = random_polynomial_field(rng, sig, grade);
        std::vector<Rational> x(static_cast<std::size_t>(sig.dims()), Rational(1, 3));
        auto [ddext, ddint] = nabla_apply(f, x);
        CHECK(ddext.is_zero());
        CHECK(ddint.is_zero());
      }
    }
  }
}

TEST_CASE("analytic derivatives agree with the exact ones to O(h^2)") {
  Rng rng(77);
  Signature sig(1, 3);
  PolynomialField f = random_polynomial_field(rng, sig, 2);
  // ensure a non-vanishing third derivative so the O(h^2) term is visible
  Polynomial x0 = Polynomial::variable(4, 0);
  f.add_component(Blade::from_indices(std::vector<int>{1, 2}), x0 * x0 * x0);
  AnalyticField coarse = to_analytic(f, 0x1p-8);
  AnalyticField fine = to_analytic(f, 0x1p-9);
  std::vector<double> x{0.3, -0.7, 0.1, 0.9};
  std::vector<Rational> xq{Rational(3, 10), Rational(-7, 10), Rational(1, 10), Rational(9, 10)};

  Multivector<double> exact = to_double_mv(f.exterior_derivative()(xq));
  double e_coarse = inf_norm(coarse.exterior_derivative_at(x) - exact);
  double e_fine = inf_norm(fine.exterior_derivative_at(x) - exact);
  CHECK(e_coarse > 0.0);
  double ratio = e_coarse / e_fine;
  CHECK(ratio > 3.5);
  CHECK(ratio < 4.5);

  // with the default step the agreement is already tight
  AnalyticField dflt = to_analytic(f);
  CHECK(inf_norm(dflt.exterior_derivative_at(x) - exact) < 1e-8);
  Multivector<double> int_exact = to_double_mv(f.interior_derivative()(xq));
  CHECK(inf_norm(dflt.interior_derivative_at(x) - int_exact) < 1e-8);
}

TEST_CASE("analytic fields require a positive step and reject nabla_apply") {
  Signature sig(0, 2);
  auto fn = [](std::span<const double>) { return Multivector<double>(Signature(0, 2)); };
  CHECK_THROWS_AS(AnalyticField(sig, fn, 0.0), std::domain_error);
  CHECK_THROWS_AS(AnalyticField(sig, fn, -1e-5), std::domain_error);
  AnalyticField ok(sig, fn);
  std::vector<double> x{0.0, 0.0};
  CHECK_THROWS_AS(ok.partial(2, x), std::domain_error);
}

TEST_CASE("axis-ranged derivatives cover only the requested axes") {
  Signature sig(1, 3);
  PolynomialField f(sig);
  // x0 x1 e2: full exterior derivative has a time term, the spatial one not
  f.set_component(Blade::axis(2),
                  Polynomial::variable(4, 0) * Polynomial::variable(4, 1));
  PolynomialField spatial = f.exterior_derivative(1, 4);
  CHECK(spatial.component(Blade::from_indices(std::vector<int>{0, 2})) == nullptr);
  CHECK(spatial.component(Blade::from_indices(std::vector<int>{1, 2})) != nullptr);
  PolynomialField full = f.exterior_derivative();
  CHECK(full.component(Blade::from_indices(std::vector<int>{0, 2})) != nullptr);
  CHECK_THROWS_AS(f.exterior_derivative(1, 5), std::domain_error);
}

TEST_SUITE_END();
