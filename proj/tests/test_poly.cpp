#include <random>

#include "doctest.h"
#include "dp4/poly.hpp"

using namespace dp4;

namespace {

UniPoly random_poly(std::mt19937_64& rng, int max_deg) {
  int deg = static_cast<int>(rng() % (max_deg + 1));
  std::vector<Rational> c;
  for (int i = 0; i <= deg; ++i) {
    long num = static_cast<long>(rng() % 21) - 10;
    long den = static_cast<long>(rng() % 4) + 1;
    Rational x(num, den);
    x.canonicalize();  // mpq_class(num, den) does not reduce the fraction
    c.push_back(x);
  }
  return UniPoly(c);
}

}  // namespace

TEST_CASE("basic accessors") {
  UniPoly f = UniPoly::from_ints({-9, 3, 3, 1});
  CHECK(f.degree() == 3);
  CHECK(f.coeff(0) == Rational(-9));
  CHECK(f.leading() == Rational(1));
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly::constant(Rational(0)).is_zero());
  CHECK(UniPoly::monomial(2, Rational(5)).degree() == 2);
}

TEST_CASE("division identity on random pairs") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 100; ++t) {
    UniPoly a = random_poly(rng, 6);
    UniPoly b = random_poly(rng, 4);
    if (b.is_zero()) continue;
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("gcd and xgcd") {
  UniPoly a = UniPoly::from_ints({-1, 0, 1});  // (T-1)(T+1)
  UniPoly b = UniPoly::from_ints({-1, 1});     // T-1
  CHECK(gcd_poly(a, b) == b);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    UniPoly x = random_poly(rng, 5);
    UniPoly y = random_poly(rng, 5);
    if (x.is_zero() || y.is_zero()) continue;
    XgcdResult r = xgcd_poly(x, y);
    CHECK(r.u * x + r.v * y == r.g);
    CHECK(divrem(x, r.g).second.is_zero());
    CHECK(divrem(y, r.g).second.is_zero());
    CHECK(r.g.leading() == Rational(1));
  }
}

TEST_CASE("evaluation and homogeneous evaluation") {
  UniPoly f = UniPoly::from_ints({3, 0, 1});  // T^2 + 3
  CHECK(eval_poly(f, Rational(2)) == Rational(7));
  CHECK(eval_homogeneous(f, Rational(2), Rational(1), 2) == Rational(7));
  CHECK(eval_homogeneous(f, Rational(1), Rational(0), 2) == Rational(1));
  CHECK(eval_homogeneous(f, Rational(1), Rational(2), 2) == Rational(13));
  // Promotion to a higher degree multiplies by powers of b.
  CHECK(eval_homogeneous(f, Rational(1), Rational(2), 5) == Rational(8 * 13));
  CHECK(eval_homogeneous(f, Rational(1), Rational(0), 5) == Rational(0));
}

TEST_CASE("shift and argument scaling") {
  UniPoly f = UniPoly::from_ints({-9, 3, 3, 1});
  UniPoly shifted = shift_poly(f, Rational(-1));  // f(T - 1) = T^3 - 10
  CHECK(shifted == UniPoly::from_ints({-10, 0, 0, 1}));
  UniPoly scaled = scale_arg_poly(UniPoly::from_ints({0, 0, 1}), Rational(3));
  CHECK(scaled == UniPoly::from_ints({0, 0, 9}));
}

TEST_CASE("primitive part and monic") {
  UniPoly f = UniPoly(std::vector<Rational>{Rational(2, 3), Rational(4, 3)});
  PrimitivePart pp = primitive_part(f);
  CHECK(pp.coeffs == std::vector<Integer>{1, 2});
  CHECK(pp.content == Rational(2, 3));
  CHECK(monic(f) == UniPoly(std::vector<Rational>{Rational(1, 2), Rational(1)}));
}

TEST_CASE("squarefree machinery") {
  UniPoly f = UniPoly::from_ints({-1, 1});  // T-1
  UniPoly g = UniPoly::from_ints({2, 1});   // T+2
  UniPoly prod = f * f * g;
  CHECK(squarefree_radical(prod) == f * g);
  auto dec = squarefree_decomposition(prod);
  REQUIRE(dec.size() == 2);
  CHECK(dec[0].first == g);
  CHECK(dec[0].second == 1);
  CHECK(dec[1].first == f);
  CHECK(dec[1].second == 2);
}

TEST_CASE("interpolation recovers polynomials") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    UniPoly f = random_poly(rng, 5);
    std::vector<Rational> pts, vals;
    for (int i = 0; i <= 5; ++i) {
      pts.emplace_back(i);
      vals.push_back(eval_poly(f, Rational(i)));
    }
    CHECK(interpolate_poly(pts, vals) == f);
  }
  CHECK_THROWS_AS(interpolate_poly({Rational(1)}, {}), std::invalid_argument);
}

TEST_CASE("resultant and discriminant") {
  // resultant(T - a, g) = g(a)
  UniPoly g = UniPoly::from_ints({3, 0, 1});
  CHECK(resultant(UniPoly::from_ints({-2, 1}), g) == Rational(7));
  // disc(T^2 + bT + c) = b^2 - 4c
  CHECK(discriminant(UniPoly::from_ints({3, 0, 1})) == Rational(-12));
  CHECK(discriminant(UniPoly::from_ints({1, 3, 1})) == Rational(5));
  // roots 1, 2, 3: prod of squared differences = 4
  UniPoly cubic = UniPoly::from_ints({-1, 1}) * UniPoly::from_ints({-2, 1}) *
                  UniPoly::from_ints({-3, 1});
  CHECK(discriminant(cubic) == Rational(4));
  // the family cubic
  CHECK(discriminant(UniPoly::from_ints({-9, 3, 3, 1})) == Rational(-2700));
}
