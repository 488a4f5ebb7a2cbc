#pragma once

#include <concepts>
#include <functional>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "stec/field.hpp"
#include "stec/multivector.hpp"

namespace stec {

using PositionD = std::vector<double>;

// Tensor-product Gauss-Legendre rule: `gauss_order` nodes per axis, with each
// axis optionally split into `subdivisions` equal panels.
struct Quadrature {
  int gauss_order = 8;
  int subdivisions = 1;
};

struct GaussRule {
  std::vector<double> nodes;    // on [0,1]
  std::vector<double> weights;  // sum to 1
};

const GaussRule& gauss_legendre(int order);

struct SingularElementError : std::domain_error {
  using std::domain_error::domain_error;
};

class Chain;

// Oriented singular cube: a smooth map from [0,1]^dim into a (k,n)
// space-time, together with an orientation sign. Boundary faces share the
// parent's map body and record which parameter axes are pinned; that shared
// identity is what lets boundary-of-boundary cancel structurally.
//
// The tangent frame comes from an exact jacobian when the constructor can
// supply one (all the built-in shapes do), otherwise from central differences
// on the map.
class Cell {
 public:
  using Map = std::function<PositionD(std::span<const double>)>;
  // Columns of the differential: one ambient tangent vector per parameter.
  using Jacobian = std::function<std::vector<PositionD>(std::span<const double>)>;

  Cell(Signature sig, int dim, Map map, int orientation = +1, Jacobian exact_jacobian = nullptr);

  // corner + edge vectors; dim = edges.size(), exact constant jacobian
  static Cell box(Signature sig, PositionD corner, std::vector<PositionD> edges,
                  int orientation = +1);
  // closed curve / filled disk in the coordinate plane (axis_u, axis_v)
  static Cell circle(Signature sig, int axis_u, int axis_v, PositionD center, double radius,
                     int orientation = +1);
  static Cell disk(Signature sig, int axis_u, int axis_v, PositionD center, double radius,
                   int orientation = +1);
  static Cell sphere(Signature sig, int axis_x, int axis_y, int axis_z, PositionD center,
                     double radius, int orientation = +1);
  // (t0,t1) x base: prepends a parameter axis driving coordinate 0; the base
  // cell must keep coordinate 0 constant.
  static Cell extruded(const Cell& base, double t0, double t1);

  const Signature& signature() const { return sig_; }
  int dim() const { return dim_; }
  int orientation() const { return orientation_; }
  Cell reversed() const;

  // Composes the map with a smooth bijection of the cube (per-axis functions
  // g_i with derivative dg_i); used to exercise reparameterization
  // invariance.
  Cell reparameterized(std::function<double(int, double)> g,
                       std::function<double(int, double)> dg) const;

  PositionD position(std::span<const double> u) const;
  std::vector<PositionD> tangents(std::span<const double> u) const;

  // Identity of the underlying map body plus pinned axes; equal keys denote
  // literally the same face.
  const void* body_id() const { return body_.get(); }
  const std::vector<std::pair<int, double>>& pinned_axes() const { return pinned_; }

  friend Chain boundary(const Cell& c);

 private:
  struct Body {
    int arity = 0;
    Map map;
    Jacobian jacobian;  // may be null: finite differences
  };

  std::vector<double> expand(std::span<const double> u) const;

  Signature sig_;
  int dim_ = 0;
  int orientation_ = +1;
  std::shared_ptr<const Body> body_;
  std::vector<std::pair<int, double>> pinned_;  // (body axis, value), ascending
};

struct WeightedCell {
  Cell cell;
  int weight = 1;
};

// Formal integer combination of equal-dimension cells; the carrier for
// boundaries.
class Chain {
 public:
  Chain() = default;
  explicit Chain(Cell c, int weight = 1) { append(std::move(c), weight); }

  void append(Cell c, int weight = 1);
  const std::vector<WeightedCell>& cells() const { return cells_; }
  bool empty() const { return cells_.empty(); }
  int dim() const;

  // Merges cells with identical body/pinning/orientation and drops zero
  // weights.
  Chain simplified() const;

 private:
  std::vector<WeightedCell> cells_;
};

// 2*dim faces with the singular-cube weights (-1)^(i+a), parameter axes
// numbered from 1 and a in {0,1} the pinned value. dim-0 cells have an empty
// boundary. boundary(boundary(c)).simplified() is empty.
Chain boundary(const Cell& c);
Chain boundary(const Chain& ch);

// orientation * (dmap/du_1 ^ ... ^ dmap/du_dim); the scalar orientation for
// dim = 0.
Multivector<double> tangent_element(const Cell& c, std::span<const double> u);

// Unit normal complement: with t the normalized tangent element,
// t_perp = t^(-H) / (t^(-H) . t^(-H)), so that t_perp ^ t is the positively
// oriented unit top blade. Throws SingularElementError when the tangent
// element is null (self-dot zero, possible on light-like surfaces).
Multivector<double> normal_element(const Cell& c, std::span<const double> u);

using FieldFn = std::function<Multivector<double>(std::span<const double>)>;

FieldFn as_field_fn(const PolynomialField& f);
FieldFn as_field_fn(const AnalyticField& f);

// Circulation along a chain: quadrature of  tangent_element |_ f.
// Grade drops by the chain dimension; identically zero when dim < grade.
Multivector<double> circulation(const FieldFn& f, const Chain& ch, const Quadrature& q);
Multivector<double> circulation(const FieldFn& f, const Cell& c, const Quadrature& q);

// Flux across a chain: quadrature of  tangent_element^(-H) _| f.
// Zero when dim < (k+n) - grade; for dim = k+n this is the volume integral.
Multivector<double> flux(const FieldFn& f, const Chain& ch, const Quadrature& q);
Multivector<double> flux(const FieldFn& f, const Cell& c, const Quadrature& q);

template <typename FieldT>
  requires std::same_as<FieldT, PolynomialField> || std::same_as<FieldT, AnalyticField>
Multivector<double> circulation(const FieldT& f, const Chain& ch, const Quadrature& q) {
  return circulation(as_field_fn(f), ch, q);
}
template <typename FieldT>
  requires std::same_as<FieldT, PolynomialField> || std::same_as<FieldT, AnalyticField>
Multivector<double> flux(const FieldT& f, const Chain& ch, const Quadrature& q) {
  return flux(as_field_fn(f), ch, q);
}

// circulation(f, boundary(c)) - circulation(d ^ f, c); converges to zero as
// the quadrature refines.
Multivector<double> stokes_circulation_residual(const PolynomialField& f, const Cell& c,
                                                const Quadrature& q);
Multivector<double> stokes_circulation_residual(const AnalyticField& f, const Cell& c,
                                                const Quadrature& q);

// flux(f, boundary(c)) - flux(d _| f, c).
Multivector<double> stokes_flux_residual(const PolynomialField& f, const Cell& c,
                                         const Quadrature& q);
Multivector<double> stokes_flux_residual(const AnalyticField& f, const Cell& c,
                                         const Quadrature& q);

}  // namespace stec
