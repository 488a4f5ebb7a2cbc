#include "stec/field.hpp"

#include <stdexcept>
#include <vector>

#include <nlohmann/json.hpp>

namespace stec {

void PolynomialField::set_component(Blade b, Polynomial p) {
  require_within(b, sig_);
  if (p.nvars() != sig_.dims())
    throw std::invalid_argument("component arity must equal signature dimension");
  if (p.is_zero())
    comps_.erase(b);
  else
    comps_.insert_or_assign(b, std::move(p));
}

void PolynomialField::add_component(Blade b, const Polynomial& p) {
  require_within(b, sig_);
  if (p.nvars() != sig_.dims())
    throw std::invalid_argument("component arity must equal signature dimension");
  auto it = comps_.find(b);
  if (it == comps_.end()) {
    if (!p.is_zero()) comps_.emplace(b, p);
    return;
  }
  it->second += p;
  if (it->second.is_zero()) comps_.erase(it);
}

const Polynomial* PolynomialField::component(Blade b) const {
  auto it = comps_.find(b);
  return it == comps_.end() ? nullptr : &it->second;
}

Multivector<Rational> PolynomialField::operator()(std::span<const Rational> x) const {
  Multivector<Rational> out(sig_);
  for (const auto& [b, p] : comps_) out.add_term(b, p(x));
  return out;
}

Multivector<double> PolynomialField::eval(std::span<const double> x) const {
  Multivector<double> out(sig_);
  for (const auto& [b, p] : comps_) out.add_term(b, p.eval(x));
  return out;
}

PolynomialField PolynomialField::partial(int axis) const {
  if (axis < 0 || axis >= sig_.dims()) throw std::domain_error("axis index out of range");
  PolynomialField out(sig_);
  for (const auto& [b, p] : comps_) out.add_component(b, p.derivative(axis));
  return out;
}

namespace {

std::pair<int, int> axis_range(const Signature& sig, int begin, int end) {
  if (end < 0) end = sig.dims();
  if (begin < 0 || begin > end || end > sig.dims())
    throw std::domain_error("derivative axis range out of bounds");
  return {begin, end};
}

}  // namespace

PolynomialField PolynomialField::exterior_derivative(int axis_begin, int axis_end) const {
  auto [lo, hi] = axis_range(sig_, axis_begin, axis_end);
  PolynomialField out(sig_);
  for (const auto& [b, p] : comps_)
    for (int i = lo; i < hi; ++i) {
      if (b.contains(i)) continue;
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      int s = sig_.metric(i) * merge_sign(Blade::axis(i), b);
      out.add_component(b.unite(Blade::axis(i)), s > 0 ? dp : -dp);
    }
  return out;
}

PolynomialField PolynomialField::interior_derivative(int axis_begin, int axis_end) const {
  auto [lo, hi] = axis_range(sig_, axis_begin, axis_end);
  PolynomialField out(sig_);
  for (const auto& [b, p] : comps_)
    for (int i = lo; i < hi; ++i) {
      if (!b.contains(i)) continue;
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      Blade rest = b.minus(Blade::axis(i));
      int s = merge_sign(rest, Blade::axis(i));
      out.add_component(rest, s > 0 ? dp : -dp);
    }
  return out;
}

PolynomialField PolynomialField::laplacian() const {
  PolynomialField out(sig_);
  for (const auto& [b, p] : comps_)
    for (int i = 0; i < sig_.dims(); ++i) {
      Polynomial dd = p.derivative(i).derivative(i);
      if (dd.is_zero()) continue;
      out.add_component(b, sig_.metric(i) > 0 ? dd : -dd);
    }
  return out;
}

PolynomialField PolynomialField::times(const Polynomial& p) const {
  if (p.nvars() != sig_.dims())
    throw std::invalid_argument("scalar polynomial arity must equal signature dimension");
  PolynomialField out(sig_);
  for (const auto& [b, q] : comps_) out.add_component(b, q * p);
  return out;
}

PolynomialField& PolynomialField::operator+=(const PolynomialField& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("field signature mismatch");
  for (const auto& [b, p] : o.comps_) add_component(b, p);
  return *this;
}

PolynomialField& PolynomialField::operator-=(const PolynomialField& o) {
  if (!(sig_ == o.sig_)) throw std::invalid_argument("field signature mismatch");
  for (const auto& [b, p] : o.comps_) add_component(b, -p);
  return *this;
}

PolynomialField operator-(const PolynomialField& a) {
  PolynomialField out(a.sig_);
  for (const auto& [b, p] : a.comps_) out.add_component(b, -p);
  return out;
}

// JSON schema: {"signature": [k, n], "components": [{"blade": [i...],
// "poly": [{"coeff": "p/q", "exps": [e...]}...]}...]}
nlohmann::json PolynomialField::to_json() const {
  nlohmann::json j;
  j["signature"] = {sig_.time_dims, sig_.space_dims};
  j["components"] = nlohmann::json::array();
  for (const auto& [b, p] : comps_) {
    nlohmann::json comp;
    comp["blade"] = b.indices();
    comp["poly"] = nlohmann::json::array();
    for (const auto& [e, c] : p.terms())
      comp["poly"].push_back({{"coeff", to_fraction_string(c)}, {"exps", e}});
    j["components"].push_back(std::move(comp));
  }
  return j;
}

PolynomialField PolynomialField::from_json(const nlohmann::json& j) {
  auto sig_arr = j.at("signature");
  Signature sig(sig_arr.at(0).get<int>(), sig_arr.at(1).get<int>());
  PolynomialField f(sig);
  for (const auto& comp : j.at("components")) {
    std::vector<int> idx = comp.at("blade").get<std::vector<int>>();
    Blade b = Blade::from_indices(idx);
    Polynomial p(sig.dims());
    for (const auto& term : comp.at("poly")) {
      std::vector<int> exps = term.at("exps").get<std::vector<int>>();
      p.add_term(std::move(exps), parse_fraction(term.at("coeff").get<std::string>()));
    }
    f.add_component(b, p);
  }
  return f;
}

// --- AnalyticField ----------------------------------------------------------

AnalyticField::AnalyticField(Signature sig, Fn fn, double fd_step)
    : sig_(sig), fn_(std::move(fn)), fd_step_(fd_step) {
  if (!(fd_step_ > 0.0)) throw std::domain_error("fd_step must be positive");
}

Multivector<double> AnalyticField::partial(int axis, std::span<const double> x) const {
  if (axis < 0 || axis >= sig_.dims()) throw std::domain_error("axis index out of range");
  std::vector<double> p(x.begin(), x.end());
  p[static_cast<std::size_t>(axis)] = x[static_cast<std::size_t>(axis)] + fd_step_;
  Multivector<double> hi = fn_(p);
  p[static_cast<std::size_t>(axis)] = x[static_cast<std::size_t>(axis)] - fd_step_;
  Multivector<double> lo = fn_(p);
  return (hi - lo) * (1.0 / (2.0 * fd_step_));
}

Multivector<double> AnalyticField::exterior_derivative_at(std::span<const double> x,
                                                          int axis_begin, int axis_end) const {
  auto [lo, hi] = axis_range(sig_, axis_begin, axis_end);
  Multivector<double> out(sig_);
  for (int i = lo; i < hi; ++i) {
    Multivector<double> di = partial(i, x);
    for (const auto& [b, c] : di.terms()) {
      if (b.contains(i)) continue;
      int s = sig_.metric(i) * merge_sign(Blade::axis(i), b);
      out.add_term(b.unite(Blade::axis(i)), s > 0 ? c : -c);
    }
  }
  return out;
}

Multivector<double> AnalyticField::interior_derivative_at(std::span<const double> x,
                                                          int axis_begin, int axis_end) const {
  auto [lo, hi] = axis_range(sig_, axis_begin, axis_end);
  Multivector<double> out(sig_);
  for (int i = lo; i < hi; ++i) {
    Multivector<double> di = partial(i, x);
    for (const auto& [b, c] : di.terms()) {
      if (!b.contains(i)) continue;
      Blade rest = b.minus(Blade::axis(i));
      int s = merge_sign(rest, Blade::axis(i));
      out.add_term(rest, s > 0 ? c : -c);
    }
  }
  return out;
}

AnalyticField to_analytic(const PolynomialField& f, double fd_step) {
  return AnalyticField(
      f.signature(), [f](std::span<const double> x) { return f.eval(x); }, fd_step);
}

PolynomialField wedge(const PolynomialField& a, const PolynomialField& b) {
  if (!(a.signature() == b.signature()))
    throw std::invalid_argument("field signature mismatch");
  PolynomialField out(a.signature());
  for (const auto& [bi, pi] : a.components())
    for (const auto& [bj, pj] : b.components()) {
      SignedBlade m = sorted_merge(bi, bj);
      if (m.sign == 0) continue;
      Polynomial prod = pi * pj;
      out.add_component(m.blade, m.sign > 0 ? prod : -prod);
    }
  return out;
}

// --- pointwise wrappers -----------------------------------------------------

Multivector<Rational> partial(const PolynomialField& f, int axis, std::span<const Rational> x) {
  return f.partial(axis)(x);
}

Multivector<double> partial(const AnalyticField& f, int axis, std::span<const double> x) {
  return f.partial(axis, x);
}

Multivector<Rational> exterior_derivative(const PolynomialField& f, std::span<const Rational> x) {
  return f.exterior_derivative()(x);
}

Multivector<double> exterior_derivative(const AnalyticField& f, std::span<const double> x) {
  return f.exterior_derivative_at(x);
}

Multivector<Rational> interior_derivative(const PolynomialField& f, std::span<const Rational> x) {
  return f.interior_derivative()(x);
}

Multivector<double> interior_derivative(const AnalyticField& f, std::span<const double> x) {
  return f.interior_derivative_at(x);
}

namespace {

void require_curl3_operand(const Signature& sig) {
  if (!(sig == Signature(0, 3)))
    throw std::domain_error("curl3 requires signature (0,3)");
}

}  // namespace

PolynomialField curl3(const PolynomialField& f) {
  require_curl3_operand(f.signature());
  for (const auto& [b, p] : f.components())
    if (b.grade() != 1) throw std::domain_error("curl3 requires a grade-1 field");
  PolynomialField d = f.exterior_derivative();
  // inverse Hodge, blade by blade
  PolynomialField out(f.signature());
  for (const auto& [b, p] : d.components()) {
    Blade bc = complement(b, f.signature());
    int s = metric_sign(bc, f.signature()) * merge_sign(bc, b);
    out.add_component(bc, s > 0 ? p : -p);
  }
  return out;
}

Multivector<double> curl3(const AnalyticField& f, std::span<const double> x) {
  require_curl3_operand(f.signature());
  Multivector<double> d = f.exterior_derivative_at(x);
  return inv_hodge(d);
}

std::pair<Multivector<Rational>, Multivector<Rational>> nabla_apply(
    const PolynomialField& f, std::span<const Rational> x) {
  PolynomialField dd_ext = f.exterior_derivative().exterior_derivative();
  PolynomialField dd_int = f.interior_derivative().interior_derivative();
  return {dd_ext(x), dd_int(x)};
}

}  // namespace stec
