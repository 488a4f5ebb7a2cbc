#include "stec/sampling.hpp"

namespace stec {

Multivector<Rational> random_multivector(Rng& rng, const Signature& sig) {
  Multivector<Rational> v(sig);
  int blades = 1 << sig.dims();
  int terms = rng.uniform_int(1, std::min(blades, 6));
  for (int t = 0; t < terms; ++t) {
    Blade b = Blade::from_mask(static_cast<std::uint32_t>(rng.uniform_int(0, blades - 1)));
    v.add_term(b, rng.rational());
  }
  return v;
}

Multivector<Rational> random_pure_grade(Rng& rng, const Signature& sig, int grade) {
  Multivector<Rational> v(sig);
  int blades = 1 << sig.dims();
  for (int attempts = 0; attempts < 4 * blades; ++attempts) {
    Blade b = Blade::from_mask(static_cast<std::uint32_t>(rng.uniform_int(0, blades - 1)));
    if (b.grade() == grade) v.add_term(b, rng.rational());
    if (static_cast<int>(v.terms().size()) >= 3) break;
  }
  if (v.is_zero()) {
    // ensure at least one term of the requested grade
    std::uint32_t mask = (1u << grade) - 1u;
    v.add_term(Blade::from_mask(mask), rng.nonzero_rational());
  }
  return v;
}

Polynomial random_polynomial(Rng& rng, int nvars, int max_degree, int terms) {
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Polynomial::Exponents e(static_cast<std::size_t>(nvars), 0);
    int budget = rng.uniform_int(0, max_degree);
    for (int d = 0; d < budget; ++d)
      e[static_cast<std::size_t>(rng.uniform_int(0, nvars - 1))] += 1;
    p.add_term(std::move(e), rng.rational());
  }
  return p;
}

PolynomialField random_polynomial_field(Rng& rng, const Signature& sig, int grade,
                                        int max_degree, int terms_per_component) {
  PolynomialField f(sig);
  int blades = 1 << sig.dims();
  for (int mask = 0; mask < blades; ++mask) {
    Blade b = Blade::from_mask(static_cast<std::uint32_t>(mask));
    if (b.grade() != grade) continue;
    f.add_component(b, random_polynomial(rng, sig.dims(), max_degree, terms_per_component));
  }
  return f;
}

Cell random_affine_cell(Rng& rng, const Signature& sig, int dim) {
  PositionD corner(static_cast<std::size_t>(sig.dims()));
  for (double& c : corner) c = rng.uniform(-1.0, 1.0);
  std::vector<PositionD> edges(static_cast<std::size_t>(dim),
                               PositionD(static_cast<std::size_t>(sig.dims())));
  for (auto& e : edges)
    for (double& c : e) c = rng.uniform(-1.0, 1.0);
  return Cell::box(sig, std::move(corner), std::move(edges));
}

}  // namespace stec
