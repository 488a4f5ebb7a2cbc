#pragma once

#include <map>
#include <span>
#include <vector>

#include "stec/rational.hpp"

namespace stec {

// Multivariate polynomial with exact rational coefficients, keyed by
// exponent vectors of fixed length nvars. Zero coefficients are not stored.
class Polynomial {
 public:
  using Exponents = std::vector<int>;

  explicit Polynomial(int nvars);

  static Polynomial constant(int nvars, Rational c);
  static Polynomial variable(int nvars, int index);
  static Polynomial monomial(int nvars, Exponents exps, Rational c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for the zero polynomial
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  Polynomial derivative(int var) const;

  Rational operator()(std::span<const Rational> x) const;
  double eval(std::span<const double> x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void add_term(Exponents exps, Rational c);

 private:
  void require_same_arity(const Polynomial& o) const;

  int nvars_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace stec
