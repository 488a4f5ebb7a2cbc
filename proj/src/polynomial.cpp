#include "stec/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stec {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
  if (nvars < 0) throw std::domain_error("polynomial arity must be non-negative");
}

Polynomial Polynomial::constant(int nvars, Rational c) {
  Polynomial p(nvars);
  p.add_term(Exponents(static_cast<std::size_t>(nvars), 0), std::move(c));
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars) throw std::domain_error("variable index out of range");
  Exponents e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(index)] = 1;
  Polynomial p(nvars);
  p.add_term(std::move(e), Rational(1));
  return p;
}

Polynomial Polynomial::monomial(int nvars, Exponents exps, Rational c) {
  if (static_cast<int>(exps.size()) != nvars)
    throw std::domain_error("exponent vector length mismatch");
  for (int e : exps)
    if (e < 0) throw std::domain_error("negative exponent");
  Polynomial p(nvars);
  p.add_term(std::move(exps), std::move(c));
  return p;
}

int Polynomial::total_degree() const {
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = 0;
    for (int x : e) d += x;
    deg = std::max(deg, d);
  }
  return deg;
}

void Polynomial::add_term(Exponents exps, Rational c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(std::move(exps), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::derivative(int var) const {
  if (var < 0 || var >= nvars_) throw std::domain_error("derivative index out of range");
  Polynomial out(nvars_);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<std::size_t>(var)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<std::size_t>(var)] = k - 1;
    out.add_term(std::move(d), c * k);
  }
  return out;
}

Rational Polynomial::operator()(std::span<const Rational> x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("evaluation point arity mismatch");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) term *= x[static_cast<std::size_t>(v)];
    acc += term;
  }
  return acc;
}

double Polynomial::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != nvars_)
    throw std::invalid_argument("evaluation point arity mismatch");
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = to_double(c);
    for (int v = 0; v < nvars_; ++v)
      for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) term *= x[static_cast<std::size_t>(v)];
    acc += term;
  }
  return acc;
}

void Polynomial::require_same_arity(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial arity mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  require_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  require_same_arity(o);
  for (const auto& [e, c] : o.terms_) add_term(e, Rational(-c));
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_arity(b);
  Polynomial out(a.nvars_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Polynomial::Exponents e = ea;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  return out;
}

Polynomial operator-(const Polynomial& a) {
  Polynomial out(a.nvars_);
  for (const auto& [e, c] : a.terms_) out.add_term(e, Rational(-c));
  return out;
}

}  // namespace stec
