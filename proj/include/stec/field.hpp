#pragma once

#include <functional>
#include <map>
#include <span>
#include <utility>

#include "stec/multivector.hpp"
#include "stec/polynomial.hpp"

#include <nlohmann/json_fwd.hpp>

namespace stec {

// Default half-step for central differences on analytic fields; balances
// O(h^2) truncation against cancellation for 64-bit floats.
inline constexpr double default_fd_step = 0x1p-16;

// Multivector-valued field with one exact rational polynomial per blade.
// Derivatives are formal, so the nilpotency and Leibniz identities can be
// checked with zero tolerance.
class PolynomialField {
 public:
  explicit PolynomialField(Signature sig) : sig_(sig) {}

  const Signature& signature() const { return sig_; }
  bool is_zero() const { return comps_.empty(); }
  const std::map<Blade, Polynomial>& components() const { return comps_; }

  void set_component(Blade b, Polynomial p);
  void add_component(Blade b, const Polynomial& p);
  const Polynomial* component(Blade b) const;  // null when absent

  Multivector<Rational> operator()(std::span<const Rational> x) const;
  Multivector<double> eval(std::span<const double> x) const;

  // Componentwise d/dx_axis.
  PolynomialField partial(int axis) const;

  // d ^ v and d _| v, where d = sum_i Delta_ii e_i d_i runs over the axis
  // range [axis_begin, axis_end); the default covers all axes. The truncated
  // ranges give the spatial operators used by the electromagnetism module.
  PolynomialField exterior_derivative(int axis_begin = 0, int axis_end = -1) const;
  PolynomialField interior_derivative(int axis_begin = 0, int axis_end = -1) const;

  // Componentwise sum_i Delta_ii d_i^2.
  PolynomialField laplacian() const;

  // Componentwise product with a scalar polynomial.
  PolynomialField times(const Polynomial& p) const;

  PolynomialField& operator+=(const PolynomialField& o);
  PolynomialField& operator-=(const PolynomialField& o);
  friend PolynomialField operator+(PolynomialField a, const PolynomialField& b) { return a += b; }
  friend PolynomialField operator-(PolynomialField a, const PolynomialField& b) { return a -= b; }
  friend PolynomialField operator-(const PolynomialField& a);
  friend bool operator==(const PolynomialField& a, const PolynomialField& b) {
    return a.sig_ == b.sig_ && a.comps_ == b.comps_;
  }

  nlohmann::json to_json() const;
  static PolynomialField from_json(const nlohmann::json& j);

 private:
  Signature sig_;
  std::map<Blade, Polynomial> comps_;
};

// Opaque multivector-valued field; derivatives fall back to second-order
// central differences with the field's half-step.
class AnalyticField {
 public:
  using Fn = std::function<Multivector<double>(std::span<const double>)>;

  AnalyticField(Signature sig, Fn fn, double fd_step = default_fd_step);

  const Signature& signature() const { return sig_; }
  double fd_step() const { return fd_step_; }
  AnalyticField with_fd_step(double h) const { return AnalyticField(sig_, fn_, h); }

  Multivector<double> operator()(std::span<const double> x) const { return fn_(x); }

  Multivector<double> partial(int axis, std::span<const double> x) const;
  Multivector<double> exterior_derivative_at(std::span<const double> x, int axis_begin = 0,
                                             int axis_end = -1) const;
  Multivector<double> interior_derivative_at(std::span<const double> x, int axis_begin = 0,
                                             int axis_end = -1) const;

 private:
  Signature sig_;
  Fn fn_;
  double fd_step_;
};

// Lowers a polynomial field to double precision evaluation.
AnalyticField to_analytic(const PolynomialField& f, double fd_step = default_fd_step);

// Pointwise wedge of two polynomial fields, exact.
PolynomialField wedge(const PolynomialField& a, const PolynomialField& b);

// --- pointwise operator surface --------------------------------------------

Multivector<Rational> partial(const PolynomialField& f, int axis, std::span<const Rational> x);
Multivector<double> partial(const AnalyticField& f, int axis, std::span<const double> x);

Multivector<Rational> exterior_derivative(const PolynomialField& f, std::span<const Rational> x);
Multivector<double> exterior_derivative(const AnalyticField& f, std::span<const double> x);
Multivector<Rational> interior_derivative(const PolynomialField& f, std::span<const Rational> x);
Multivector<double> interior_derivative(const AnalyticField& f, std::span<const double> x);

// (d^(-H) of d ^ v): the classical curl, restricted to grade-1 fields in (0,3).
PolynomialField curl3(const PolynomialField& f);
Multivector<double> curl3(const AnalyticField& f, std::span<const double> x);

// (d ^ (d ^ v), d _| (d _| v)) evaluated exactly; both sides are identically
// zero for any polynomial field. Analytic fields are rejected.
std::pair<Multivector<Rational>, Multivector<Rational>> nabla_apply(const PolynomialField& f,
                                                                    std::span<const Rational> x);

}  // namespace stec
