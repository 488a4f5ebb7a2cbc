#include <doctest.h>

#include "oracles.hpp"
#include "stec/multivector.hpp"
#include "stec/sampling.hpp"

using namespace stec;
using MV = Multivector<Rational>;

namespace {

Blade bl(std::initializer_list<int> idx) { return Blade::from_indices(std::vector<int>(idx)); }

MV e(const Signature& sig, std::initializer_list<int> idx) { return MV::basis(sig, bl(idx)); }

}  // namespace

TEST_SUITE_BEGIN("multivector");

TEST_CASE("wedge on basis blades") {
  Signature sig(0, 3);
  CHECK(wedge(e(sig, {1}), e(sig, {2})) == e(sig, {1, 2}));
  CHECK(wedge(e(sig, {2}), e(sig, {1})) == -e(sig, {1, 2}));
  MV two_e0 = MV::basis(sig, bl({0}), Rational(2));
  MV three_e0 = MV::basis(sig, bl({0}), Rational(3));
  CHECK(wedge(two_e0, three_e0).is_zero());
}

TEST_CASE("wedge rejects mismatched signatures") {
  MV a = e(Signature(0, 3), {1});
  MV b = e(Signature(1, 3), {1});
  CHECK_THROWS_AS(wedge(a, b), std::invalid_argument);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(dot(a, b), std::invalid_argument);
}

TEST_CASE("dot on basis blades") {
  Signature mink(1, 3);
  CHECK(dot(e(mink, {0}), e(mink, {0})) == Rational(-1));
  CHECK(dot(e(mink, {0, 1}), e(mink, {0, 1})) == Rational(-1));
  CHECK(dot(e(mink, {1}), e(mink, {2})) == Rational(0));
  CHECK(dot(e(mink, {1}), e(mink, {1, 2})) == Rational(0));  // cross-grade
}

TEST_CASE("hodge and inverse hodge") {
  Signature mink(1, 3);
  CHECK(hodge(MV::scalar(mink, Rational(1))) == e(mink, {0, 1, 2, 3}));
  CHECK(hodge(e(mink, {0})) == -e(mink, {1, 2, 3}));
  CHECK(inv_hodge(hodge(e(mink, {0, 2}))) == e(mink, {0, 2}));
  for (int mask = 0; mask < 16; ++mask) {
    MV b = MV::basis(mink, Blade::from_mask(static_cast<std::uint32_t>(mask)));
    CHECK(inv_hodge(hodge(b)) == b);
    CHECK(hodge(inv_hodge(b)) == b);
  }
}

TEST_CASE("left contraction") {
  Signature mink(1, 3);
  CHECK(left_contraction(e(mink, {0}), e(mink, {0, 1})) == e(mink, {1}));
  CHECK(left_contraction(e(mink, {1}), e(mink, {1})) == MV::scalar(mink, Rational(1)));
  CHECK(left_contraction(e(mink, {1}), e(mink, {0})).is_zero());
}

TEST_CASE("right contraction") {
  Signature mink(1, 3);
  CHECK(right_contraction(e(mink, {0, 1}), e(mink, {0})) == -e(mink, {1}));
  Signature eu3(0, 3);
  CHECK(right_contraction(e(eu3, {1, 2}), e(eu3, {1, 2})) == MV::scalar(eu3, Rational(1)));
  CHECK(right_contraction(e(mink, {0}), e(mink, {0, 1})).is_zero());
}

TEST_CASE("cross product in (0,3)") {
  Signature sig(0, 3);
  CHECK(cross(e(sig, {0}), e(sig, {1})) == e(sig, {2}));
  CHECK(cross(e(sig, {1}), e(sig, {1})).is_zero());
  CHECK(cross(e(sig, {1}), e(sig, {0})) == -e(sig, {2}));
  CHECK_THROWS_AS(cross(e(Signature(1, 3), {1}), e(Signature(1, 3), {2})), std::domain_error);
  CHECK_THROWS_AS(cross(e(sig, {0, 1}), e(sig, {2})), std::domain_error);
}

TEST_CASE("grade projection partitions a multivector") {
  Signature sig(1, 3);
  MV v = MV::scalar(sig, Rational(1)) + e(sig, {0}) + e(sig, {0, 1});
  CHECK(grade_project(v, 1) == e(sig, {0}));
  CHECK(grade_project(e(sig, {1, 2}), 0).is_zero());
  MV sum = MV::zero(sig);
  for (int m = 0; m <= sig.dims(); ++m) sum += grade_project(v, m);
  CHECK(sum == v);
  CHECK_THROWS_AS(grade_project(v, 5), std::domain_error);
  CHECK(v.grades() == std::vector<int>{0, 1, 2});
}

TEST_CASE("no zero coefficients are stored") {
  Signature sig(0, 2);
  MV v = e(sig, {0}) - e(sig, {0});
  CHECK(v.is_zero());
  CHECK(v.terms().empty());
  MV w = e(sig, {0}) + e(sig, {1});
  w += -e(sig, {1});
  CHECK(w.terms().size() == 1);
}

// Identity battery over every signature with k+n <= 5, exhaustive on basis
// blades and sampled on random rational multivectors.
TEST_CASE("product identities hold exactly in every small signature") {
  Rng rng(42);
  for (int d = 1; d <= 5; ++d) {
    for (int k = 0; k <= d; ++k) {
      Signature sig(k, d - k);
      int blades = 1 << d;
      for (int a = 0; a < blades; ++a) {
        Blade ba = Blade::from_mask(static_cast<std::uint32_t>(a));
        MV ea = MV::basis(sig, ba);
        for (int b = 0; b < blades; ++b) {
          Blade bb = Blade::from_mask(static_cast<std::uint32_t>(b));
          MV eb = MV::basis(sig, bb);

          // skew-commutativity
          int sign = (ba.grade() * bb.grade()) % 2 == 0 ? 1 : -1;
          REQUIRE(wedge(ea, eb) == wedge(eb, ea) * Rational(sign));

          // contractions through the Hodge maps
          REQUIRE(left_contraction(ea, eb) == inv_hodge(wedge(ea, hodge(eb))));
          REQUIRE(right_contraction(ea, eb) == hodge(wedge(inv_hodge(ea), eb)));

          // left/right relation
          int rel = (ba.grade() * (bb.grade() - ba.grade())) % 2 == 0 ? 1 : -1;
          REQUIRE(left_contraction(ea, eb) == right_contraction(eb, ea) * Rational(rel));

          // back-substitution for nested blades
          if (ba.subset_of(bb)) {
            Rational dm(metric_sign(ba, sig));
            REQUIRE(wedge(left_contraction(ea, eb), ea) == eb * dm);
            REQUIRE(wedge(ea, right_contraction(eb, ea)) == eb * dm);
          }

          // equal grades collapse to the dot product
          if (ba.grade() == bb.grade()) {
            REQUIRE(left_contraction(ea, eb) == MV::scalar(sig, dot(ea, eb)));
            REQUIRE(right_contraction(ea, eb) == MV::scalar(sig, dot(ea, eb)));
          }
        }
      }

      for (int t = 0; t < 60; ++t) {
        MV u = random_multivector(rng, sig);
        MV v = random_multivector(rng, sig);
        REQUIRE(left_contraction(u, v) == inv_hodge(wedge(u, hodge(v))));
        REQUIRE(right_contraction(u, v) == hodge(wedge(inv_hodge(u), v)));

        MV u1 = random_pure_grade(rng, sig, std::min(1, d));
        MV v1 = random_pure_grade(rng, sig, std::min(1, d));
        int r = rng.uniform_int(0, d);
        MV w = random_pure_grade(rng, sig, r);
        MV lhs = left_contraction(u1, wedge(v1, w));
        MV rhs = w * (dot(u1, v1) * Rational(r % 2 == 0 ? 1 : -1)) +
                 wedge(v1, left_contraction(u1, w));
        REQUIRE(lhs == rhs);
      }
    }
  }
}

TEST_CASE("hodge pairs scale the dot by the time-axis parity") {
  Rng rng(7);
  for (int d = 1; d <= 5; ++d)
    for (int k = 0; k <= d; ++k) {
      Signature sig(k, d - k);
      Rational parity(k % 2 == 0 ? 1 : -1);
      for (int t = 0; t < 40; ++t) {
        int g = rng.uniform_int(0, d);
        MV u = random_pure_grade(rng, sig, g);
        MV w = random_pure_grade(rng, sig, g);
        Rational plain = dot(u, w);
        CHECK(dot(hodge(u), hodge(w)) == dot(inv_hodge(u), inv_hodge(w)));
        CHECK(dot(hodge(u), hodge(w)) == plain * parity);
      }
    }
}

TEST_CASE("bac-cab on random triples") {
  Signature sig(0, 3);
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    MV a = random_pure_grade(rng, sig, 1);
    MV b = random_pure_grade(rng, sig, 1);
    MV c = random_pure_grade(rng, sig, 1);
    CHECK(cross(a, cross(b, c)) == b * dot(a, c) - c * dot(a, b));
  }
}

TEST_CASE("rendering") {
  Signature sig(1, 3);
  CHECK(to_string(MV::zero(sig)) == "0");
  CHECK(to_string(MV::scalar(sig, Rational(-1))) == "-1");
  MV v = MV::basis(sig, bl({0, 1, 3}), Rational(1, 2)) + MV::basis(sig, bl({2}), Rational(-3));
  CHECK(to_string(v) == "1/2*e013 - 3*e2");
  CHECK(to_string(-e(sig, {1, 2, 3})) == "-1*e123");
  MV mixed = MV::scalar(sig, Rational(2)) + e(sig, {1});
  CHECK(to_string(mixed) == "2 + 1*e1");

  Signature wide(2, 9);
  MV w = MV::basis(wide, bl({0, 1, 10}), Rational(5, 3));
  CHECK(to_string(w) == "5/3*e{0,1,10}");

  Multivector<double> f(Signature(0, 2));
  f.add_term(bl({0}), 0.1);
  CHECK(to_string(f) == "0.10000000000000001*e0");
}

TEST_SUITE_END();
