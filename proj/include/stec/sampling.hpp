#pragma once

#include <cstdint>
#include <random>

#include "stec/field.hpp"
#include "stec/geometry.hpp"
#include "stec/multivector.hpp"

namespace stec {

// Deterministic generator for the verification suites: identical seeds give
// identical cases on every platform (mt19937_64 is fully specified and the
// derived draws avoid distribution objects).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  double uniform(double lo, double hi) {
    double u = static_cast<double>(next() >> 11) * 0x1p-53;
    return lo + u * (hi - lo);
  }

  Rational rational(int max_abs_num = 9, int max_den = 9) {
    int num = uniform_int(-max_abs_num, max_abs_num);
    int den = uniform_int(1, max_den);
    return Rational(num, den);
  }

  Rational nonzero_rational(int max_abs_num = 9, int max_den = 9) {
    while (true) {
      Rational r = rational(max_abs_num, max_den);
      if (r != 0) return r;
    }
  }

 private:
  std::mt19937_64 engine_;
};

Multivector<Rational> random_multivector(Rng& rng, const Signature& sig);
Multivector<Rational> random_pure_grade(Rng& rng, const Signature& sig, int grade);

Polynomial random_polynomial(Rng& rng, int nvars, int max_degree, int terms);
PolynomialField random_polynomial_field(Rng& rng, const Signature& sig, int grade,
                                        int max_degree = 3, int terms_per_component = 3);

// Affine cell with corner and edge entries drawn from [-1,1]; carries an
// exact jacobian.
Cell random_affine_cell(Rng& rng, const Signature& sig, int dim);

}  // namespace stec
