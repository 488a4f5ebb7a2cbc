#include "stec/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace stec {

namespace {

constexpr double map_fd_step = 0x1p-17;

GaussRule compute_gauss(int order) {
  // The one- and two-point rules get exact dyadic weights so that constant
  // and linear closures (the "exactly 3" cube cases) come out bit-exact.
  if (order == 1) return GaussRule{{0.5}, {1.0}};
  if (order == 2) {
    double c = 0.5 / std::sqrt(3.0);
    return GaussRule{{0.5 - c, 0.5 + c}, {0.5, 0.5}};
  }
  // Newton iteration on P_n over [-1,1], then affine map to [0,1].
  GaussRule rule;
  rule.nodes.resize(static_cast<std::size_t>(order));
  rule.weights.resize(static_cast<std::size_t>(order));
  for (int i = 0; i < order; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (order + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      if (order == 1) p1 = x;
      for (int n = 2; n <= order; ++n) {
        double p2 = ((2.0 * n - 1.0) * x * p1 - (n - 1.0) * p0) / n;
        p0 = p1;
        p1 = p2;
      }
      double pn = (order == 1) ? x : p1;
      double pm = (order == 1) ? 1.0 : p0;
      dp = order * (x * pn - pm) / (x * x - 1.0);
      double dx = pn / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    rule.nodes[static_cast<std::size_t>(i)] = 0.5 * (1.0 - x);  // ascending on [0,1]
    rule.weights[static_cast<std::size_t>(i)] = 1.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int order) {
  if (order < 1) throw std::domain_error("gauss order must be >= 1");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::scoped_lock lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, compute_gauss(order)).first;
  return it->second;
}

// --- Cell --------------------------------------------------------------------

Cell::Cell(Signature sig, int dim, Map map, int orientation, Jacobian exact_jacobian)
    : sig_(sig), dim_(dim), orientation_(orientation) {
  if (dim < 0 || dim > sig.dims()) throw std::domain_error("cell dimension out of range");
  if (orientation != 1 && orientation != -1)
    throw std::domain_error("orientation must be +1 or -1");
  auto body = std::make_shared<Body>();
  body->arity = dim;
  body->map = std::move(map);
  body->jacobian = std::move(exact_jacobian);
  body_ = std::move(body);
}

Cell Cell::reversed() const {
  Cell c = *this;
  c.orientation_ = -orientation_;
  return c;
}

std::vector<double> Cell::expand(std::span<const double> u) const {
  if (static_cast<int>(u.size()) != dim_)
    throw std::invalid_argument("parameter point arity mismatch");
  for (double v : u)
    if (v < -1e-12 || v > 1.0 + 1e-12)
      throw std::domain_error("parameter point outside the unit cube");
  std::vector<double> full(static_cast<std::size_t>(body_->arity));
  std::size_t ui = 0, pi = 0;
  for (int axis = 0; axis < body_->arity; ++axis) {
    if (pi < pinned_.size() && pinned_[pi].first == axis)
      full[static_cast<std::size_t>(axis)] = pinned_[pi++].second;
    else
      full[static_cast<std::size_t>(axis)] = u[ui++];
  }
  return full;
}

PositionD Cell::position(std::span<const double> u) const {
  std::vector<double> full = expand(u);
  PositionD x = body_->map(full);
  if (static_cast<int>(x.size()) != sig_.dims())
    throw std::invalid_argument("cell map returned a position of wrong dimension");
  return x;
}

std::vector<PositionD> Cell::tangents(std::span<const double> u) const {
  std::vector<double> full = expand(u);
  std::vector<int> free_axes;
  free_axes.reserve(static_cast<std::size_t>(dim_));
  {
    std::size_t pi = 0;
    for (int axis = 0; axis < body_->arity; ++axis) {
      if (pi < pinned_.size() && pinned_[pi].first == axis)
        ++pi;
      else
        free_axes.push_back(axis);
    }
  }
  std::vector<PositionD> cols;
  cols.reserve(free_axes.size());
  if (body_->jacobian) {
    std::vector<PositionD> all = body_->jacobian(full);
    if (static_cast<int>(all.size()) != body_->arity)
      throw std::invalid_argument("jacobian column count mismatch");
    for (int axis : free_axes) cols.push_back(all[static_cast<std::size_t>(axis)]);
  } else {
    for (int axis : free_axes) {
      std::vector<double> p = full;
      p[static_cast<std::size_t>(axis)] += map_fd_step;
      PositionD hi = body_->map(p);
      p[static_cast<std::size_t>(axis)] -= 2.0 * map_fd_step;
      PositionD lo = body_->map(p);
      PositionD col(hi.size());
      for (std::size_t i = 0; i < col.size(); ++i)
        col[i] = (hi[i] - lo[i]) / (2.0 * map_fd_step);
      cols.push_back(std::move(col));
    }
  }
  for (const PositionD& c : cols)
    if (static_cast<int>(c.size()) != sig_.dims())
      throw std::invalid_argument("jacobian column of wrong dimension");
  return cols;
}

Cell Cell::box(Signature sig, PositionD corner, std::vector<PositionD> edges, int orientation) {
  const int d = sig.dims();
  if (static_cast<int>(corner.size()) != d) throw std::invalid_argument("corner dimension mismatch");
  for (const auto& e : edges)
    if (static_cast<int>(e.size()) != d) throw std::invalid_argument("edge dimension mismatch");
  int dim = static_cast<int>(edges.size());
  auto map = [corner, edges](std::span<const double> u) {
    PositionD x = corner;
    for (std::size_t i = 0; i < edges.size(); ++i)
      for (std::size_t j = 0; j < x.size(); ++j) x[j] += u[i] * edges[i][j];
    return x;
  };
  auto jac = [edges](std::span<const double>) { return edges; };
  return Cell(sig, dim, std::move(map), orientation, std::move(jac));
}

namespace {

void require_plane_axes(const Signature& sig, std::initializer_list<int> axes,
                        const PositionD& center) {
  for (int a : axes)
    if (a < 0 || a >= sig.dims()) throw std::domain_error("plane axis out of range");
  if (static_cast<int>(center.size()) != sig.dims())
    throw std::invalid_argument("center dimension mismatch");
}

}  // namespace

Cell Cell::circle(Signature sig, int axis_u, int axis_v, PositionD center, double radius,
                  int orientation) {
  require_plane_axes(sig, {axis_u, axis_v}, center);
  constexpr double tau = 2.0 * std::numbers::pi;
  auto map = [=](std::span<const double> u) {
    PositionD x = center;
    x[static_cast<std::size_t>(axis_u)] += radius * std::cos(tau * u[0]);
    x[static_cast<std::size_t>(axis_v)] += radius * std::sin(tau * u[0]);
    return x;
  };
  auto jac = [=](std::span<const double> u) {
    PositionD col(center.size(), 0.0);
    col[static_cast<std::size_t>(axis_u)] = -tau * radius * std::sin(tau * u[0]);
    col[static_cast<std::size_t>(axis_v)] = tau * radius * std::cos(tau * u[0]);
    return std::vector<PositionD>{col};
  };
  return Cell(sig, 1, std::move(map), orientation, std::move(jac));
}

Cell Cell::disk(Signature sig, int axis_u, int axis_v, PositionD center, double radius,
                int orientation) {
  require_plane_axes(sig, {axis_u, axis_v}, center);
  constexpr double tau = 2.0 * std::numbers::pi;
  auto map = [=](std::span<const double> u) {
    PositionD x = center;
    x[static_cast<std::size_t>(axis_u)] += u[0] * radius * std::cos(tau * u[1]);
    x[static_cast<std::size_t>(axis_v)] += u[0] * radius * std::sin(tau * u[1]);
    return x;
  };
  auto jac = [=](std::span<const double> u) {
    PositionD dr(center.size(), 0.0), dth(center.size(), 0.0);
    dr[static_cast<std::size_t>(axis_u)] = radius * std::cos(tau * u[1]);
    dr[static_cast<std::size_t>(axis_v)] = radius * std::sin(tau * u[1]);
    dth[static_cast<std::size_t>(axis_u)] = -u[0] * radius * tau * std::sin(tau * u[1]);
    dth[static_cast<std::size_t>(axis_v)] = u[0] * radius * tau * std::cos(tau * u[1]);
    return std::vector<PositionD>{dr, dth};
  };
  return Cell(sig, 2, std::move(map), orientation, std::move(jac));
}

Cell Cell::sphere(Signature sig, int axis_x, int axis_y, int axis_z, PositionD center,
                  double radius, int orientation) {
  require_plane_axes(sig, {axis_x, axis_y, axis_z}, center);
  constexpr double pi = std::numbers::pi;
  auto map = [=](std::span<const double> u) {
    double th = pi * u[0], ph = 2.0 * pi * u[1];
    PositionD x = center;
    x[static_cast<std::size_t>(axis_x)] += radius * std::sin(th) * std::cos(ph);
    x[static_cast<std::size_t>(axis_y)] += radius * std::sin(th) * std::sin(ph);
    x[static_cast<std::size_t>(axis_z)] += radius * std::cos(th);
    return x;
  };
  auto jac = [=](std::span<const double> u) {
    double th = pi * u[0], ph = 2.0 * pi * u[1];
    PositionD du(center.size(), 0.0), dv(center.size(), 0.0);
    du[static_cast<std::size_t>(axis_x)] = pi * radius * std::cos(th) * std::cos(ph);
    du[static_cast<std::size_t>(axis_y)] = pi * radius * std::cos(th) * std::sin(ph);
    du[static_cast<std::size_t>(axis_z)] = -pi * radius * std::sin(th);
    dv[static_cast<std::size_t>(axis_x)] = -2.0 * pi * radius * std::sin(th) * std::sin(ph);
    dv[static_cast<std::size_t>(axis_y)] = 2.0 * pi * radius * std::sin(th) * std::cos(ph);
    return std::vector<PositionD>{du, dv};
  };
  return Cell(sig, 2, std::move(map), orientation, std::move(jac));
}

Cell Cell::extruded(const Cell& base, double t0, double t1) {
  if (base.signature().time_dims < 1)
    throw std::domain_error("extrusion requires a time axis");
  if (base.dim() + 1 > base.signature().dims())
    throw std::domain_error("extruded cell dimension exceeds the space-time");
  const double span = t1 - t0;
  auto map = [base, t0, span](std::span<const double> u) {
    PositionD x = base.position(u.subspan(1));
    x[0] = t0 + span * u[0];
    return x;
  };
  auto jac = [base, span](std::span<const double> u) {
    std::vector<PositionD> cols;
    cols.reserve(static_cast<std::size_t>(base.dim()) + 1);
    PositionD time_col(static_cast<std::size_t>(base.signature().dims()), 0.0);
    time_col[0] = span;
    cols.push_back(std::move(time_col));
    for (auto& c : base.tangents(u.subspan(1))) cols.push_back(std::move(c));
    return cols;
  };
  return Cell(base.signature(), base.dim() + 1, std::move(map), base.orientation(),
              std::move(jac));
}

Cell Cell::reparameterized(std::function<double(int, double)> g,
                           std::function<double(int, double)> dg) const {
  Cell self = *this;
  const int d = dim_;
  auto map = [self, g](std::span<const double> u) {
    std::vector<double> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = g(static_cast<int>(i), u[i]);
    return self.position(w);
  };
  auto jac = [self, g, dg](std::span<const double> u) {
    std::vector<double> w(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) w[i] = g(static_cast<int>(i), u[i]);
    std::vector<PositionD> cols = self.tangents(w);
    for (std::size_t i = 0; i < cols.size(); ++i) {
      double scale = dg(static_cast<int>(i), u[i]);
      for (double& v : cols[i]) v *= scale;
    }
    return cols;
  };
  return Cell(sig_, d, std::move(map), orientation_, std::move(jac));
}

// --- Chain -------------------------------------------------------------------

void Chain::append(Cell c, int weight) {
  if (!cells_.empty()) {
    if (!(cells_.front().cell.signature() == c.signature()))
      throw std::invalid_argument("chain cells must share a signature");
    if (cells_.front().cell.dim() != c.dim())
      throw std::invalid_argument("chain cells must share a dimension");
  }
  cells_.push_back({std::move(c), weight});
}

int Chain::dim() const { return cells_.empty() ? -1 : cells_.front().cell.dim(); }

Chain Chain::simplified() const {
  using Key = std::tuple<const void*, std::vector<std::pair<int, double>>, int>;
  std::map<Key, std::size_t> index;
  std::vector<WeightedCell> merged;
  for (const WeightedCell& wc : cells_) {
    Key key{wc.cell.body_id(), wc.cell.pinned_axes(), wc.cell.orientation()};
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(std::move(key), merged.size());
      merged.push_back(wc);
    } else {
      merged[it->second].weight += wc.weight;
    }
  }
  Chain out;
  for (WeightedCell& wc : merged)
    if (wc.weight != 0) out.append(std::move(wc.cell), wc.weight);
  return out;
}

Chain boundary(const Cell& c) {
  Chain out;
  if (c.dim() == 0) return out;
  std::vector<int> free_axes;
  {
    std::size_t pi = 0;
    for (int axis = 0; axis < c.body_->arity; ++axis) {
      if (pi < c.pinned_.size() && c.pinned_[pi].first == axis)
        ++pi;
      else
        free_axes.push_back(axis);
    }
  }
  for (std::size_t p = 0; p < free_axes.size(); ++p) {
    for (int a = 0; a <= 1; ++a) {
      Cell face = c;
      face.dim_ = c.dim_ - 1;
      face.pinned_.emplace_back(free_axes[p], static_cast<double>(a));
      std::sort(face.pinned_.begin(), face.pinned_.end());
      int weight = ((static_cast<int>(p) + 1 + a) % 2 == 0) ? +1 : -1;
      out.append(std::move(face), weight);
    }
  }
  return out;
}

Chain boundary(const Chain& ch) {
  Chain out;
  for (const WeightedCell& wc : ch.cells()) {
    Chain b = boundary(wc.cell);
    for (const WeightedCell& f : b.cells()) out.append(f.cell, f.weight * wc.weight);
  }
  return out;
}

// --- tangent / normal elements ------------------------------------------------

Multivector<double> tangent_element(const Cell& c, std::span<const double> u) {
  Multivector<double> t =
      Multivector<double>::scalar(c.signature(), static_cast<double>(c.orientation()));
  for (const PositionD& col : c.tangents(u)) {
    Multivector<double> v(c.signature());
    for (int i = 0; i < c.signature().dims(); ++i)
      v.add_term(Blade::axis(i), col[static_cast<std::size_t>(i)]);
    t = wedge(t, v);
  }
  return t;
}

Multivector<double> normal_element(const Cell& c, std::span<const double> u) {
  Multivector<double> t = tangent_element(c, u);
  double self = dot(t, t);
  double scale = 0.0;
  for (const auto& [b, v] : t.terms()) scale = std::max(scale, std::fabs(v));
  if (scale == 0.0 || std::fabs(self) < 1e-9 * scale * scale)
    throw SingularElementError("null tangent element: normal is undefined");
  Multivector<double> unit = t * (1.0 / std::sqrt(std::fabs(self)));
  Multivector<double> h = inv_hodge(unit);
  double d = dot(h, h);
  return h * (1.0 / d);
}

// --- oriented integrals ---------------------------------------------------------

FieldFn as_field_fn(const PolynomialField& f) {
  return [f](std::span<const double> x) { return f.eval(x); };
}

FieldFn as_field_fn(const AnalyticField& f) {
  return [f](std::span<const double> x) { return f(x); };
}

namespace {

void check_quadrature(const Quadrature& q) {
  if (q.gauss_order < 1 || q.subdivisions < 1)
    throw std::domain_error("quadrature requires gauss_order >= 1 and subdivisions >= 1");
}

// Tensor-product quadrature over the unit cube of the cell's parameter
// domain, accumulating weight * integrand(tangent_element(u), position(u)).
Multivector<double> integrate_cell(
    const Cell& c, const Quadrature& q,
    const std::function<Multivector<double>(const Multivector<double>&, std::span<const double>)>&
        integrand) {
  const int dim = c.dim();
  Multivector<double> acc(c.signature());
  if (dim == 0) {
    std::vector<double> u;
    acc += integrand(tangent_element(c, u), u);
    return acc;
  }
  const GaussRule& rule = gauss_legendre(q.gauss_order);
  const int per_axis = q.gauss_order * q.subdivisions;
  std::vector<int> counter(static_cast<std::size_t>(dim), 0);
  std::vector<double> u(static_cast<std::size_t>(dim));
  while (true) {
    double w = 1.0;
    for (int i = 0; i < dim; ++i) {
      int panel = counter[static_cast<std::size_t>(i)] / q.gauss_order;
      int node = counter[static_cast<std::size_t>(i)] % q.gauss_order;
      u[static_cast<std::size_t>(i)] =
          (panel + rule.nodes[static_cast<std::size_t>(node)]) / q.subdivisions;
      w *= rule.weights[static_cast<std::size_t>(node)] / q.subdivisions;
    }
    acc += integrand(tangent_element(c, u), u) * w;
    int axis = 0;
    while (axis < dim) {
      if (++counter[static_cast<std::size_t>(axis)] < per_axis) break;
      counter[static_cast<std::size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == dim) break;
  }
  return acc;
}

}  // namespace

Multivector<double> circulation(const FieldFn& f, const Chain& ch, const Quadrature& q) {
  check_quadrature(q);
  if (ch.empty()) throw std::invalid_argument("circulation over an empty chain has no signature");
  Multivector<double> acc(ch.cells().front().cell.signature());
  for (const WeightedCell& wc : ch.cells()) {
    Multivector<double> part = integrate_cell(
        wc.cell, q, [&](const Multivector<double>& t, std::span<const double> u) {
          return right_contraction(t, f(wc.cell.position(u)));
        });
    acc += part * static_cast<double>(wc.weight);
  }
  return acc;
}

Multivector<double> circulation(const FieldFn& f, const Cell& c, const Quadrature& q) {
  return circulation(f, Chain(c), q);
}

Multivector<double> flux(const FieldFn& f, const Chain& ch, const Quadrature& q) {
  check_quadrature(q);
  if (ch.empty()) throw std::invalid_argument("flux over an empty chain has no signature");
  Multivector<double> acc(ch.cells().front().cell.signature());
  for (const WeightedCell& wc : ch.cells()) {
    Multivector<double> part = integrate_cell(
        wc.cell, q, [&](const Multivector<double>& t, std::span<const double> u) {
          return left_contraction(inv_hodge(t), f(wc.cell.position(u)));
        });
    acc += part * static_cast<double>(wc.weight);
  }
  return acc;
}

Multivector<double> flux(const FieldFn& f, const Cell& c, const Quadrature& q) {
  return flux(f, Chain(c), q);
}

// --- Stokes residuals -----------------------------------------------------------

namespace {

Multivector<double> circulation_residual_impl(const FieldFn& f, const FieldFn& df, const Cell& c,
                                              const Quadrature& q) {
  return circulation(f, boundary(c), q) - circulation(df, c, q);
}

Multivector<double> flux_residual_impl(const FieldFn& f, const FieldFn& df, const Cell& c,
                                       const Quadrature& q) {
  return flux(f, boundary(c), q) - flux(df, c, q);
}

}  // namespace

Multivector<double> stokes_circulation_residual(const PolynomialField& f, const Cell& c,
                                                const Quadrature& q) {
  return circulation_residual_impl(as_field_fn(f), as_field_fn(f.exterior_derivative()), c, q);
}

Multivector<double> stokes_circulation_residual(const AnalyticField& f, const Cell& c,
                                                const Quadrature& q) {
  FieldFn df = [f](std::span<const double> x) { return f.exterior_derivative_at(x); };
  return circulation_residual_impl(as_field_fn(f), df, c, q);
}

Multivector<double> stokes_flux_residual(const PolynomialField& f, const Cell& c,
                                         const Quadrature& q) {
  return flux_residual_impl(as_field_fn(f), as_field_fn(f.interior_derivative()), c, q);
}

Multivector<double> stokes_flux_residual(const AnalyticField& f, const Cell& c,
                                         const Quadrature& q) {
  FieldFn df = [f](std::span<const double> x) { return f.interior_derivative_at(x); };
  return flux_residual_impl(as_field_fn(f), df, c, q);
}

}  // namespace stec
