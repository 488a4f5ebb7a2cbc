#include "stec/scenario.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stec {

namespace {

int levi_civita3(int p, int q, int r) {
  if (p == q || q == r || p == r) return 0;
  // parity of (p,q,r) as a permutation of (1,2,3)
  int inversions = (p > q) + (p > r) + (q > r);
  return (inversions & 1) ? -1 : +1;
}

void require_spatial_axis(int a) {
  if (a < 1 || a > 3) throw std::domain_error("spatial axis must be 1, 2 or 3");
}

EMScenario from_polynomial_parts(std::string name, std::string family, PolynomialField e,
                                 PolynomialField b, Polynomial rho, PolynomialField j) {
  PolynomialField f = assemble_F(e, b);
  PolynomialField current = current_density(rho, j);
  PolynomialField rho_field(minkowski());
  rho_field.add_component(Blade{}, rho);

  EMScenario s{std::move(name), std::move(family), to_analytic(f),         to_analytic(current),
               to_analytic(e),  to_analytic(b),    to_analytic(rho_field), to_analytic(j),
               {},              {},                {},                     {},
               {},              {}};
  s.F_poly = std::move(f);
  s.J_poly = std::move(current);
  s.E_poly = std::move(e);
  s.B_poly = std::move(b);
  s.j_poly = std::move(j);
  s.rho_poly = std::move(rho);
  return s;
}

}  // namespace

EMScenario plane_wave_scenario(double amplitude, int propagation_axis, int polarization_axis,
                               double phase, double fd_step) {
  require_spatial_axis(propagation_axis);
  require_spatial_axis(polarization_axis);
  if (propagation_axis == polarization_axis)
    throw std::domain_error("propagation and polarization axes must differ");
  const int p = propagation_axis, q = polarization_axis;
  const int r = 6 - p - q;
  const int bsign = levi_civita3(p, q, r);

  auto wave = [=](std::span<const double> x) {
    return amplitude * std::cos(x[0] - x[static_cast<std::size_t>(p)] + phase);
  };
  auto e_fn = [=](std::span<const double> x) {
    return Multivector<double>::axis(minkowski(), q, wave(x));
  };
  auto b_fn = [=](std::span<const double> x) {
    return Multivector<double>::axis(minkowski(), r, bsign * wave(x));
  };
  auto f_fn = [=](std::span<const double> x) {
    return assemble_F_value(e_fn(x), b_fn(x));
  };
  auto zero_fn = [](std::span<const double>) { return Multivector<double>(minkowski()); };
  auto zero_scalar = [](std::span<const double>) { return Multivector<double>(minkowski()); };

  return EMScenario{"plane-wave",
                    "plane_wave",
                    AnalyticField(minkowski(), f_fn, fd_step),
                    AnalyticField(minkowski(), zero_fn, fd_step),
                    AnalyticField(minkowski(), e_fn, fd_step),
                    AnalyticField(minkowski(), b_fn, fd_step),
                    AnalyticField(minkowski(), zero_scalar, fd_step),
                    AnalyticField(minkowski(), zero_fn, fd_step),
                    {},
                    {},
                    {},
                    {},
                    {},
                    {}};
}

EMScenario standing_wave_scenario(double amplitude, int propagation_axis, int polarization_axis,
                                  double fd_step) {
  require_spatial_axis(propagation_axis);
  require_spatial_axis(polarization_axis);
  if (propagation_axis == polarization_axis)
    throw std::domain_error("propagation and polarization axes must differ");
  const int p = propagation_axis, q = polarization_axis;
  const int r = 6 - p - q;
  const int bsign = levi_civita3(p, q, r);

  auto e_fn = [=](std::span<const double> x) {
    return Multivector<double>::axis(
        minkowski(), q, amplitude * std::cos(x[0]) * std::cos(x[static_cast<std::size_t>(p)]));
  };
  auto b_fn = [=](std::span<const double> x) {
    return Multivector<double>::axis(
        minkowski(), r,
        bsign * amplitude * std::sin(x[0]) * std::sin(x[static_cast<std::size_t>(p)]));
  };
  auto f_fn = [=](std::span<const double> x) { return assemble_F_value(e_fn(x), b_fn(x)); };
  auto zero_fn = [](std::span<const double>) { return Multivector<double>(minkowski()); };

  return EMScenario{"standing-wave",
                    "standing_wave",
                    AnalyticField(minkowski(), f_fn, fd_step),
                    AnalyticField(minkowski(), zero_fn, fd_step),
                    AnalyticField(minkowski(), e_fn, fd_step),
                    AnalyticField(minkowski(), b_fn, fd_step),
                    AnalyticField(minkowski(), zero_fn, fd_step),
                    AnalyticField(minkowski(), zero_fn, fd_step),
                    {},
                    {},
                    {},
                    {},
                    {},
                    {}};
}

EMScenario uniform_e_scenario(const std::array<Rational, 3>& e) {
  const int d = minkowski().dims();
  PolynomialField ef(minkowski()), bf(minkowski()), jf(minkowski());
  for (int i = 0; i < 3; ++i)
    ef.add_component(Blade::axis(i + 1), Polynomial::constant(d, e[static_cast<std::size_t>(i)]));
  return from_polynomial_parts("uniform-e", "uniform_e", ef, bf, Polynomial(d), jf);
}

EMScenario uniform_b_scenario(const std::array<Rational, 3>& b) {
  const int d = minkowski().dims();
  PolynomialField ef(minkowski()), bf(minkowski()), jf(minkowski());
  for (int i = 0; i < 3; ++i)
    bf.add_component(Blade::axis(i + 1), Polynomial::constant(d, b[static_cast<std::size_t>(i)]));
  return from_polynomial_parts("uniform-b", "uniform_b", ef, bf, Polynomial(d), jf);
}

EMScenario linear_e_scenario(const std::array<Rational, 3>& a) {
  const int d = minkowski().dims();
  PolynomialField ef(minkowski()), bf(minkowski()), jf(minkowski());
  Rational trace(0);
  for (int i = 0; i < 3; ++i) {
    ef.add_component(Blade::axis(i + 1),
                     Polynomial::variable(d, i + 1) * a[static_cast<std::size_t>(i)]);
    trace += a[static_cast<std::size_t>(i)];
  }
  return from_polynomial_parts("linear-e", "linear_e", ef, bf, Polynomial::constant(d, trace),
                               jf);
}

EMScenario static_current_scenario() {
  const int d = minkowski().dims();
  PolynomialField ef(minkowski()), bf(minkowski()), jf(minkowski());
  bf.add_component(Blade::axis(2), Polynomial::variable(d, 1));
  jf.add_component(Blade::axis(3), Polynomial::constant(d, Rational(1)));
  return from_polynomial_parts("static-current", "static_current", ef, bf, Polynomial(d), jf);
}

EMScenario polynomial_scenario(std::string name, PolynomialField e, PolynomialField b,
                               Polynomial rho, PolynomialField j) {
  return from_polynomial_parts(std::move(name), "polynomial", std::move(e), std::move(b),
                               std::move(rho), std::move(j));
}

// --- JSON loading ------------------------------------------------------------

namespace {

std::array<Rational, 3> rational_triple(const nlohmann::json& arr) {
  if (!arr.is_array() || arr.size() != 3) throw std::invalid_argument("expected 3 components");
  std::array<Rational, 3> out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (arr[i].is_string())
      out[i] = parse_fraction(arr[i].get<std::string>());
    else
      out[i] = Rational(arr[i].get<long long>());
  }
  return out;
}

EMScenario scenario_from_json(const nlohmann::json& doc) {
  std::string family = doc.at("family").get<std::string>();
  const nlohmann::json params = doc.value("params", nlohmann::json::object());
  double fd_step = doc.value("fd_step", default_fd_step);
  EMScenario s = [&] {
    if (family == "plane_wave")
      return plane_wave_scenario(params.value("amplitude", 1.0),
                                 params.value("propagation_axis", 3),
                                 params.value("polarization_axis", 1),
                                 params.value("phase", 0.0), fd_step);
    if (family == "standing_wave")
      return standing_wave_scenario(params.value("amplitude", 1.0),
                                    params.value("propagation_axis", 3),
                                    params.value("polarization_axis", 1), fd_step);
    if (family == "uniform_e") return uniform_e_scenario(rational_triple(params.at("e")));
    if (family == "uniform_b") return uniform_b_scenario(rational_triple(params.at("b")));
    if (family == "linear_e") return linear_e_scenario(rational_triple(params.at("a")));
    if (family == "static_current") return static_current_scenario();
    if (family == "polynomial") {
      PolynomialField e = PolynomialField::from_json(params.at("E"));
      PolynomialField b = PolynomialField::from_json(params.at("B"));
      PolynomialField j = PolynomialField::from_json(params.at("j"));
      PolynomialField rho_field = PolynomialField::from_json(params.at("rho"));
      Polynomial rho(minkowski().dims());
      for (const auto& [blade, p] : rho_field.components()) {
        if (!blade.is_scalar()) throw std::invalid_argument("rho must be a scalar field");
        rho += p;
      }
      return polynomial_scenario(doc.value("name", "polynomial"), std::move(e), std::move(b),
                                 std::move(rho), std::move(j));
    }
    throw std::invalid_argument("unknown scenario family: " + family);
  }();
  if (doc.contains("name")) s.name = doc.at("name").get<std::string>();
  return s;
}

}  // namespace

Cell region_from_json(const nlohmann::json& doc) {
  std::string type = doc.at("type").get<std::string>();
  const Signature sig = minkowski();
  if (type == "spatial_box") {
    PositionD origin = doc.at("origin").get<PositionD>();
    std::vector<PositionD> edges;
    for (const auto& e : doc.at("edges")) edges.push_back(e.get<PositionD>());
    return Cell::box(sig, std::move(origin), std::move(edges));
  }
  if (type == "time_box") {
    double t0 = doc.at("t0").get<double>();
    double t1 = doc.at("t1").get<double>();
    std::vector<int> plane = doc.at("plane_axes").get<std::vector<int>>();
    if (plane.size() != 2) throw std::invalid_argument("time_box needs two plane axes");
    PositionD origin = doc.at("origin").get<PositionD>();
    std::vector<double> extent = doc.value("extent", std::vector<double>{1.0, 1.0});
    std::vector<PositionD> edges(2, PositionD(static_cast<std::size_t>(sig.dims()), 0.0));
    edges[0][static_cast<std::size_t>(plane[0])] = extent[0];
    edges[1][static_cast<std::size_t>(plane[1])] = extent[1];
    Cell base = Cell::box(sig, std::move(origin), std::move(edges));
    return Cell::extruded(base, t0, t1);
  }
  if (type == "time_disk") {
    double t0 = doc.at("t0").get<double>();
    double t1 = doc.at("t1").get<double>();
    std::vector<int> plane = doc.at("plane_axes").get<std::vector<int>>();
    if (plane.size() != 2) throw std::invalid_argument("time_disk needs two plane axes");
    PositionD center = doc.at("center").get<PositionD>();
    double radius = doc.at("radius").get<double>();
    Cell base = Cell::disk(sig, plane[0], plane[1], std::move(center), radius);
    return Cell::extruded(base, t0, t1);
  }
  throw std::invalid_argument("unknown region type: " + type);
}

MaxwellSetup load_maxwell_setup(const nlohmann::json& doc) {
  EMScenario scenario = scenario_from_json(doc);
  Cell region = doc.contains("region") ? region_from_json(doc.at("region"))
                                       : default_maxwell_setup().region;
  MaxwellSetup setup{std::move(scenario), std::move(region), GridSpec{}, Quadrature{12, 1},
                     doc.value("fd_step", default_fd_step)};
  if (doc.contains("grid")) {
    const auto& g = doc.at("grid");
    setup.grid.points_per_axis = g.value("points_per_axis", 5);
    if (g.contains("lo")) {
      auto lo = g.at("lo").get<std::vector<double>>();
      auto hi = g.at("hi").get<std::vector<double>>();
      if (lo.size() != 4 || hi.size() != 4) throw std::invalid_argument("grid bounds need 4 axes");
      std::copy(lo.begin(), lo.end(), setup.grid.lo.begin());
      std::copy(hi.begin(), hi.end(), setup.grid.hi.begin());
    }
  }
  if (doc.contains("quadrature")) {
    const auto& q = doc.at("quadrature");
    setup.quadrature.gauss_order = q.value("gauss_order", 12);
    setup.quadrature.subdivisions = q.value("subdivisions", 1);
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc.at("tolerances");
    setup.tol_differential = t.value("differential", 1e-8);
    setup.tol_integral = t.value("integral", 1e-7);
  }
  return setup;
}

MaxwellSetup load_maxwell_setup_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scenario file: " + path);
  nlohmann::json doc = nlohmann::json::parse(in);
  return load_maxwell_setup(doc);
}

MaxwellSetup default_maxwell_setup() {
  EMScenario scenario = plane_wave_scenario(1.0, 3, 1, 0.0);
  PositionD origin(4, 0.0);
  std::vector<PositionD> edges(2, PositionD(4, 0.0));
  edges[0][1] = 1.0;
  edges[1][2] = 1.0;
  Cell base = Cell::box(minkowski(), origin, edges);
  Cell region = Cell::extruded(base, 0.0, 1.0);
  return MaxwellSetup{std::move(scenario), std::move(region), GridSpec{}, Quadrature{12, 1},
                      default_fd_step, 1e-8, 1e-7};
}

}  // namespace stec
