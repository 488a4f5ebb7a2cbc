#include "stec/em.hpp"

#include <stdexcept>

namespace stec {

namespace {

Blade spatial_top() { return top_blade(minkowski()).minus(Blade::axis(0)); }

void require_spatial_grade1(const PolynomialField& f, const char* what) {
  if (!(f.signature() == minkowski()))
    throw std::domain_error(std::string(what) + " requires signature (1,3)");
  for (const auto& [b, p] : f.components())
    if (b.grade() != 1 || b.contains(0))
      throw std::domain_error(std::string(what) + " requires a spatial grade-1 field");
}

}  // namespace

PolynomialField spatial_hodge(const PolynomialField& v) {
  if (!(v.signature() == minkowski()))
    throw std::domain_error("spatial_hodge requires signature (1,3)");
  PolynomialField out(v.signature());
  Blade spatial = spatial_top();
  for (const auto& [b, p] : v.components()) {
    if (!b.subset_of(spatial)) throw std::domain_error("spatial_hodge requires spatial blades");
    Blade bc = spatial.minus(b);
    int s = merge_sign(b, bc);
    out.add_component(bc, s > 0 ? p : -p);
  }
  return out;
}

PolynomialField assemble_F(const PolynomialField& e, const PolynomialField& b) {
  require_spatial_grade1(e, "assemble_F (E)");
  require_spatial_grade1(b, "assemble_F (B)");
  PolynomialField f(minkowski());
  for (const auto& [blade, p] : e.components()) {
    int s = merge_sign(Blade::axis(0), blade);  // e0 ^ e_i
    f.add_component(Blade::axis(0).unite(blade), s > 0 ? p : -p);
  }
  f += spatial_hodge(b);
  return f;
}

std::pair<PolynomialField, PolynomialField> decompose_F(const PolynomialField& f) {
  if (!(f.signature() == minkowski()))
    throw std::domain_error("decompose_F requires signature (1,3)");
  PolynomialField e(minkowski()), bh(minkowski());
  for (const auto& [blade, p] : f.components()) {
    if (blade.grade() != 2) throw std::domain_error("field bivector must be pure grade 2");
    if (blade.contains(0))
      e.add_component(blade.minus(Blade::axis(0)), p);
    else
      bh.add_component(blade, p);
  }
  return {e, spatial_hodge(bh)};
}

PolynomialField current_density(const Polynomial& rho, const PolynomialField& j) {
  require_spatial_grade1(j, "current_density");
  PolynomialField out = j;
  out.add_component(Blade::axis(0), rho);
  return out;
}

std::pair<PolynomialField, PolynomialField> maxwell_residual_fields(const PolynomialField& f,
                                                                    const PolynomialField& j) {
  if (!(f.signature() == minkowski()) || !(j.signature() == minkowski()))
    throw std::domain_error("maxwell residuals require signature (1,3)");
  return {f.exterior_derivative(), f.interior_derivative() - j};
}

std::pair<Multivector<Rational>, Multivector<Rational>> maxwell_residuals(
    const PolynomialField& f, const PolynomialField& j, std::span<const Rational> x) {
  auto [homog, inhomog] = maxwell_residual_fields(f, j);
  return {homog(x), inhomog(x)};
}

std::pair<Multivector<double>, Multivector<double>> maxwell_residuals(
    const AnalyticField& f, const AnalyticField& j, std::span<const double> x) {
  return {f.exterior_derivative_at(x), f.interior_derivative_at(x) - j(x)};
}

PolynomialField spatial_curl(const PolynomialField& v) {
  require_spatial_grade1(v, "spatial_curl");
  return spatial_hodge(v.exterior_derivative(1, 4));
}

PolynomialField spatial_divergence(const PolynomialField& v) {
  require_spatial_grade1(v, "spatial_divergence");
  return v.interior_derivative(1, 4);
}

std::array<PolynomialField, 4> classical_residual_fields(const PolynomialField& e,
                                                         const PolynomialField& b,
                                                         const Polynomial& rho,
                                                         const PolynomialField& j) {
  require_spatial_grade1(e, "classical residuals (E)");
  require_spatial_grade1(b, "classical residuals (B)");
  require_spatial_grade1(j, "classical residuals (j)");
  PolynomialField rho_field(minkowski());
  rho_field.add_component(Blade{}, rho);

  std::array<PolynomialField, 4> out{
      spatial_divergence(e) - rho_field,
      spatial_divergence(b),
      spatial_curl(e) + b.partial(0),
      spatial_curl(b) - e.partial(0) - j,
  };
  return out;
}

std::array<Multivector<double>, 4> classical_residuals(const AnalyticField& e,
                                                       const AnalyticField& b,
                                                       const AnalyticField& rho,
                                                       const AnalyticField& j,
                                                       std::span<const double> x) {
  // curl v = spatial inverse Hodge of the spatial exterior derivative
  auto curl_at = [&](const AnalyticField& v) {
    Multivector<double> d = v.exterior_derivative_at(x, 1, 4);
    Multivector<double> out(minkowski());
    Blade spatial = spatial_top();
    for (const auto& [blade, c] : d.terms()) {
      Blade bc = spatial.minus(blade);
      int s = merge_sign(blade, bc);
      out.add_term(bc, s > 0 ? c : -c);
    }
    return out;
  };
  return {
      e.interior_derivative_at(x, 1, 4) - rho(x),
      b.interior_derivative_at(x, 1, 4),
      curl_at(e) + b.partial(0, x),
      curl_at(b) - e.partial(0, x) - j(x),
  };
}

Multivector<double> integral_homogeneous_residual(const FieldFn& f, const Cell& v3,
                                                  const Quadrature& q) {
  if (v3.dim() != 3) throw std::domain_error("homogeneous integral check requires a 3-cell");
  return circulation(f, boundary(v3), q);
}

Multivector<double> integral_inhomogeneous_residual(const FieldFn& f, const FieldFn& j,
                                                    const Cell& v3, const Quadrature& q) {
  if (v3.dim() != 3) throw std::domain_error("inhomogeneous integral check requires a 3-cell");
  return flux(f, boundary(v3), q) - flux(j, v3, q);
}

}  // namespace stec
