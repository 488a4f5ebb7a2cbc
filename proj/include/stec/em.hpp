#pragma once

#include <array>
#include <utility>

#include "stec/field.hpp"
#include "stec/geometry.hpp"
#include "stec/multivector.hpp"

namespace stec {

// Electromagnetism in the (1,3) space-time, in rationalized units (no
// epsilon_0, mu_0 or c). E and B are grade-1 fields on the spatial axes
// 1..3; the field bivector is F = e0 ^ E + spatial_hodge(B) and the
// four-current is J = rho e0 + j.

inline const Signature& minkowski() {
  static const Signature sig(1, 3);
  return sig;
}

// Hodge complement of the (0,3) subalgebra on axes 1..3, applied inside
// (1,3). Requires the operand to touch only spatial axes. For n = 3 the
// spatial complement is its own inverse.
template <typename S>
Multivector<S> spatial_hodge(const Multivector<S>& v) {
  if (!(v.signature() == minkowski()))
    throw std::domain_error("spatial_hodge requires signature (1,3)");
  Multivector<S> out(v.signature());
  Blade spatial = top_blade(v.signature()).minus(Blade::axis(0));
  for (const auto& [b, c] : v.terms()) {
    if (!b.subset_of(spatial)) throw std::domain_error("spatial_hodge requires spatial blades");
    Blade bc = spatial.minus(b);
    int s = merge_sign(b, bc);  // all-positive metric on the spatial axes
    out.add_term(bc, s > 0 ? c : S(-c));
  }
  return out;
}

PolynomialField spatial_hodge(const PolynomialField& v);

// --- pointwise assembly -----------------------------------------------------

template <typename S>
Multivector<S> assemble_F_value(const Multivector<S>& e, const Multivector<S>& b) {
  e.require_same_signature(b);
  Multivector<S> e0 = Multivector<S>::axis(minkowski(), 0);
  return wedge(e0, e) + spatial_hodge(b);
}

template <typename S>
std::pair<Multivector<S>, Multivector<S>> decompose_F_value(const Multivector<S>& f) {
  if (!(f.is_zero() || f.is_pure_grade(2)))
    throw std::domain_error("field bivector must be pure grade 2");
  Multivector<S> e(f.signature()), bh(f.signature());
  for (const auto& [blade, c] : f.terms()) {
    if (blade.contains(0))
      e.add_term(blade.minus(Blade::axis(0)), c);
    else
      bh.add_term(blade, c);
  }
  return {e, spatial_hodge(bh)};  // spatial hodge is self-inverse for n = 3
}

// Lorentz force density J _| F; time component j.E, spatial part rho E + j x B.
template <typename S>
Multivector<S> lorentz_force(const Multivector<S>& current, const Multivector<S>& f) {
  return left_contraction(current, f);
}

// --- field-level assembly (exact, polynomial) --------------------------------

// E, B grade-1 with spatial indices only; throws otherwise.
PolynomialField assemble_F(const PolynomialField& e, const PolynomialField& b);
std::pair<PolynomialField, PolynomialField> decompose_F(const PolynomialField& f);

// rho e0 + j from a scalar charge density and a spatial current.
PolynomialField current_density(const Polynomial& rho, const PolynomialField& j);

// (d ^ F, d _| F - J), both identically zero exactly when the four classical
// Maxwell equations hold.
std::pair<PolynomialField, PolynomialField> maxwell_residual_fields(const PolynomialField& f,
                                                                    const PolynomialField& j);

std::pair<Multivector<Rational>, Multivector<Rational>> maxwell_residuals(
    const PolynomialField& f, const PolynomialField& j, std::span<const Rational> x);
std::pair<Multivector<double>, Multivector<double>> maxwell_residuals(
    const AnalyticField& f, const AnalyticField& j, std::span<const double> x);

// (div E - rho, div B, curl E + d0 B, curl B - d0 E - j), with div/curl built
// from the axis-restricted exterior/interior derivatives over axes 1..3.
std::array<PolynomialField, 4> classical_residual_fields(const PolynomialField& e,
                                                         const PolynomialField& b,
                                                         const Polynomial& rho,
                                                         const PolynomialField& j);

std::array<Multivector<double>, 4> classical_residuals(const AnalyticField& e,
                                                       const AnalyticField& b,
                                                       const AnalyticField& rho,
                                                       const AnalyticField& j,
                                                       std::span<const double> x);

// Spatial curl inside (1,3): inverse spatial Hodge of the spatial exterior
// derivative; grade-1 spatial fields only.
PolynomialField spatial_curl(const PolynomialField& v);
PolynomialField spatial_divergence(const PolynomialField& v);

// Circulation of F along the boundary of a 3-cell; zero for any solution of
// the homogeneous equations. With a purely spatial cell this is the magnetic
// Gauss law; with a time extrusion it is the time-integrated Faraday law.
Multivector<double> integral_homogeneous_residual(const FieldFn& f, const Cell& v3,
                                                  const Quadrature& q);

// flux(F, boundary(v3)) - flux(J, v3); zero for any solution of the
// inhomogeneous equations. Spatial cell: electric Gauss law; time extrusion:
// time-integrated Ampere-Maxwell law.
Multivector<double> integral_inhomogeneous_residual(const FieldFn& f, const FieldFn& j,
                                                    const Cell& v3, const Quadrature& q);

}  // namespace stec
