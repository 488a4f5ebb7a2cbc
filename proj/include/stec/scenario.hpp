#pragma once

#include <array>
#include <optional>
#include <string>

#include "stec/em.hpp"

#include <nlohmann/json_fwd.hpp>

namespace stec {

// A named electromagnetic configuration: fields, sources, and (when the
// family is polynomial) their exact backing. Analytic views are always
// available for integration and finite-difference work.
struct EMScenario {
  std::string name;
  std::string family;

  AnalyticField F;    // grade-2 bivector field
  AnalyticField J;    // four-current rho e0 + j
  AnalyticField E;    // spatial grade-1
  AnalyticField B;    // spatial grade-1
  AnalyticField rho;  // scalar
  AnalyticField j;    // spatial grade-1

  std::optional<PolynomialField> F_poly, J_poly, E_poly, B_poly, j_poly;
  std::optional<Polynomial> rho_poly;

  bool is_polynomial() const { return F_poly.has_value(); }
};

// Linearly polarized vacuum wave: E = A cos(x0 - x_p + phase) e_q and
// B = A cos(x0 - x_p + phase) (e_p x e_q), for a propagation axis p and a
// polarization axis q in 1..3, p != q.
EMScenario plane_wave_scenario(double amplitude, int propagation_axis, int polarization_axis,
                               double phase, double fd_step = default_fd_step);

// Standing vacuum wave, the superposition of two counter-propagating plane
// waves: E = A cos(x0) cos(x_p) e_q, B = A sin(x0) sin(x_p) (e_p x e_q).
// Unlike the travelling wave, its finite-difference residuals do not cancel
// structurally, so it exercises the fd error for real.
EMScenario standing_wave_scenario(double amplitude, int propagation_axis, int polarization_axis,
                                  double fd_step = default_fd_step);

// Constant E from a linear potential; sourceless.
EMScenario uniform_e_scenario(const std::array<Rational, 3>& e);

// Constant B; sourceless.
EMScenario uniform_b_scenario(const std::array<Rational, 3>& b);

// E = sum_i a_i x_i e_i with rho = a_1 + a_2 + a_3; B = 0, j = 0.
EMScenario linear_e_scenario(const std::array<Rational, 3>& a);

// B = x_1 e_2 with j = e_3; E = 0, rho = 0. A static solution with current.
EMScenario static_current_scenario();

// Arbitrary polynomial data: E, B, j as polynomial-field documents and rho as
// a polynomial; not necessarily a Maxwell solution (used to exercise failing
// verdicts).
EMScenario polynomial_scenario(std::string name, PolynomialField e, PolynomialField b,
                               Polynomial rho, PolynomialField j);

// Scenario file = scenario + region + residual grid + quadrature + tolerances.
struct GridSpec {
  int points_per_axis = 5;
  std::array<double, 4> lo{0.0, 0.0, 0.0, 0.0};
  std::array<double, 4> hi{1.0, 1.0, 1.0, 1.0};
};

struct MaxwellSetup {
  EMScenario scenario;
  Cell region;  // 3-cell for the integral laws
  GridSpec grid;
  Quadrature quadrature{12, 1};
  double fd_step = default_fd_step;
  double tol_differential = 1e-8;
  double tol_integral = 1e-7;
};

MaxwellSetup load_maxwell_setup(const nlohmann::json& doc);
MaxwellSetup load_maxwell_setup_file(const std::string& path);

// The canonical plane-wave configuration over the (0,1) x unit e1e2-square
// space-time box.
MaxwellSetup default_maxwell_setup();

Cell region_from_json(const nlohmann::json& doc);

}  // namespace stec
