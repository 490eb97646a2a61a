#include "doctest.h"

#include <set>
#include <stdexcept>

#include "dp4/local.hpp"
#include "dp4/quadfield.hpp"

using namespace dp4;

namespace {

QuadFieldElem elem(long a, long b, long m = -3) {
  return make_quadfield_elem(Integer(m), Rational(a), Rational(b));
}

QuadFieldElem rat(const Rational& r, long m = -3) {
  return make_quadfield_elem(Integer(m), r, Rational(0));
}

}  // namespace

TEST_CASE("element construction and arithmetic") {
  CHECK_THROWS_AS(make_quadfield_elem(Integer(0), Rational(1), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_quadfield_elem(Integer(1), Rational(1), Rational(0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_quadfield_elem(Integer(12), Rational(1), Rational(0)),
                  std::invalid_argument);

  // (1 + s)(1 - s) = 1 - m = 4 for m = -3.
  QuadFieldElem p = quad_mul(elem(1, 1), elem(1, -1));
  CHECK(p.a == 4);
  CHECK(p.b == 0);
  CHECK(quad_norm(elem(1, 1)) == 4);
  CHECK(quad_norm(elem(0, 1)) == 3);

  QuadFieldElem z = make_quadfield_elem(Integer(-3), Rational(3, 2), Rational(-5, 7));
  QuadFieldElem w = elem(2, 3);
  QuadFieldElem back = quad_div(quad_mul(z, w), w);
  CHECK(back.a == z.a);
  CHECK(back.b == z.b);

  CHECK_THROWS_AS(quad_div(elem(1, 0), elem(0, 0)), std::domain_error);
  CHECK_THROWS_AS(quad_mul(elem(1, 1), elem(1, 1, 5)), std::invalid_argument);
  CHECK(quad_is_zero(elem(0, 0)));
  CHECK_FALSE(quad_is_zero(elem(0, 1)));
}

TEST_CASE("splitting of rational primes") {
  // Classical: an odd prime p != 3 splits in Q(sqrt(-3)) iff p = 1 mod 3.
  for (const Integer& p : primes_up_to(100)) {
    if (p == 2) continue;
    SplitType t = splitting_type(Integer(-3), p);
    if (p == 3) {
      CHECK(t == SplitType::Ramified);
    } else if (p % 3 == 1) {
      CHECK(t == SplitType::Split);
    } else {
      CHECK(t == SplitType::Inert);
    }
  }
  // p = 2 is decided by m mod 8.
  CHECK(splitting_type(Integer(-3), Integer(2)) == SplitType::Inert);
  CHECK(splitting_type(Integer(17), Integer(2)) == SplitType::Split);
  CHECK(splitting_type(Integer(-7), Integer(2)) == SplitType::Split);
  CHECK(splitting_type(Integer(5), Integer(2)) == SplitType::Inert);
  CHECK(splitting_type(Integer(-1), Integer(2)) == SplitType::Ramified);
  CHECK(splitting_type(Integer(6), Integer(2)) == SplitType::Ramified);
  CHECK(splitting_type(Integer(6), Integer(3)) == SplitType::Ramified);
  CHECK_THROWS_AS(splitting_type(Integer(-3), Integer(4)), std::invalid_argument);
}

TEST_CASE("places and their names") {
  std::vector<QuadPlace> at13 = places_over(Integer(-3), Integer(13));
  REQUIRE(at13.size() == 2);
  CHECK(at13[0].str() == "13a");
  CHECK(at13[1].str() == "13b");
  CHECK(places_over(Integer(-3), Integer(5)).at(0).str() == "5");
  CHECK(places_over(Integer(-3), Integer(3)).at(0).str() == "3r");
  CHECK(places_over(Integer(-3), Integer(2)).size() == 1);
  CHECK(quad_place_archimedean(Integer(-3)).str() == "arch");
}

TEST_CASE("square tests against an exhaustive residue oracle") {
  // Oracle data at p = 13: squares and the two roots of T^2 = -3.
  std::set<Integer> squares;
  for (long r = 1; r < 13; ++r) squares.insert(Integer((r * r) % 13));
  std::vector<Integer> roots;
  for (long r = 0; r < 13; ++r)
    if ((r * r + 3) % 13 == 0) roots.push_back(Integer(r));
  REQUIRE(roots.size() == 2);
  for (const Integer& r : roots) CHECK(squares.count(r) == 0);

  // sqrt(-3) maps to a nonsquare residue under both embeddings.
  std::vector<QuadPlace> at13 = places_over(Integer(-3), Integer(13));
  CHECK_FALSE(is_square_in_completion(elem(0, 1), at13[0]));
  CHECK_FALSE(is_square_in_completion(elem(0, 1), at13[1]));

  // 2 + sqrt(-3) has images 8 and 9 mod 13: a square at exactly one place,
  // matching leg(N(2 + sqrt(-3)), 13) = leg(7, 13) = -1.
  bool s0 = is_square_in_completion(elem(2, 1), at13[0]);
  bool s1 = is_square_in_completion(elem(2, 1), at13[1]);
  CHECK(s0 != s1);
  CHECK(legendre(Integer(7), Integer(13)) == -1);
}

TEST_CASE("square tests at inert and ramified places") {
  QuadPlace w5 = places_over(Integer(-3), Integer(5)).at(0);
  // Any rational 5-unit becomes a square in the unramified quadratic
  // extension; 5 itself has odd valuation and sqrt(-3) is a nonsquare unit.
  CHECK(is_square_in_completion(rat(Rational(2)), w5));
  CHECK(is_square_in_completion(rat(Rational(3)), w5));
  CHECK_FALSE(is_square_in_completion(rat(Rational(5)), w5));
  CHECK(is_square_in_completion(rat(Rational(25)), w5));
  CHECK_FALSE(is_square_in_completion(elem(0, 1), w5));

  QuadPlace w3 = places_over(Integer(-3), Integer(3)).at(0);
  // -3 = (sqrt(-3))^2 is a square; sqrt(-3) has odd valuation; a unit is a
  // square iff its residue is a square mod 3.
  CHECK(is_square_in_completion(rat(Rational(-3)), w3));
  CHECK_FALSE(is_square_in_completion(elem(0, 1), w3));
  CHECK_FALSE(is_square_in_completion(rat(Rational(-1)), w3));
  CHECK(is_square_in_completion(rat(Rational(1)), w3));
  CHECK_FALSE(is_square_in_completion(rat(Rational(-7)), w3));
  CHECK_FALSE(is_square_in_completion(rat(Rational(1, 3)), w3));

  // Squares of field elements are squares in every completion.
  QuadFieldElem sq = quad_mul(elem(1, 1), elem(1, 1));  // -2 + 2 sqrt(-3)
  for (long p : {3L, 5L, 7L, 13L})
    for (const QuadPlace& w : places_over(Integer(-3), Integer(p)))
      CHECK(is_square_in_completion(sq, w));

  // Multiplying by a square never changes the answer.
  QuadFieldElem x = elem(2, 5);
  for (long p : {3L, 5L, 7L, 13L})
    for (const QuadPlace& w : places_over(Integer(-3), Integer(p)))
      CHECK(is_square_in_completion(x, w) ==
            is_square_in_completion(quad_mul(x, sq), w));
}

TEST_CASE("tame symbols") {
  QuadFieldElem two = rat(Rational(2));
  QuadFieldElem sqm = elem(0, 1);
  QuadPlace w3 = places_over(Integer(-3), Integer(3)).at(0);
  QuadPlace w5 = places_over(Integer(-3), Integer(5)).at(0);
  std::vector<QuadPlace> at7 = places_over(Integer(-3), Integer(7));
  std::vector<QuadPlace> at13 = places_over(Integer(-3), Integer(13));

  // The key symbol: (2, sqrt(-3)) is -1 over 3 and +1 at unit places.
  CHECK(tame_hilbert(two, sqm, w3) == -1);
  CHECK(tame_hilbert(two, sqm, w5) == 1);
  CHECK(tame_hilbert(two, sqm, at7[0]) == 1);
  CHECK(tame_hilbert(two, sqm, at7[1]) == 1);

  // (pi, pi) at the ramified place equals chi(-1) = leg(-1, 3) = -1.
  CHECK(tame_hilbert(sqm, sqm, w3) == -1);

  // (x, -x) = 1 and symmetry.
  std::vector<QuadFieldElem> xs{elem(0, 1), elem(3, 3), elem(2, 5), rat(Rational(6, 5))};
  for (const auto& x : xs) {
    QuadFieldElem mx{x.m, -x.a, -x.b};
    for (const QuadPlace& w : {w3, w5, at7[0], at13[1]}) {
      CHECK(tame_hilbert(x, mx, w) == 1);
      CHECK(tame_hilbert(x, elem(1, 1), w) == tame_hilbert(elem(1, 1), x, w));
    }
  }

  // Bilinearity on samples.
  QuadFieldElem y1 = elem(1, 2), y2 = elem(5, -1);
  for (const QuadPlace& w : {w3, w5, at7[0], at13[0]}) {
    CHECK(tame_hilbert(elem(2, 5), quad_mul(y1, y2), w) ==
          tame_hilbert(elem(2, 5), y1, w) * tame_hilbert(elem(2, 5), y2, w));
  }

  // At a split place the symbol agrees with the rational Hilbert symbol.
  for (const QuadPlace& w : at13) {
    Place v = Place::finite(Integer(13));
    CHECK(tame_hilbert(rat(Rational(13)), rat(Rational(13)), w) ==
          hilbert_symbol(Rational(13), Rational(13), v));
    CHECK(tame_hilbert(rat(Rational(2)), rat(Rational(13)), w) ==
          hilbert_symbol(Rational(2), Rational(13), v));
    CHECK(tame_hilbert(rat(Rational(26)), rat(Rational(3, 13)), w) ==
          hilbert_symbol(Rational(26), Rational(3, 13), v));
    CHECK(tame_hilbert(rat(Rational(6)), rat(Rational(5)), w) ==
          hilbert_symbol(Rational(6), Rational(5), v));
  }
}

TEST_CASE("scope restrictions") {
  QuadPlace even = places_over(Integer(-3), Integer(2)).at(0);
  QuadPlace arch = quad_place_archimedean(Integer(-3));
  QuadPlace w5 = places_over(Integer(-3), Integer(5)).at(0);
  CHECK_THROWS_AS(is_square_in_completion(elem(1, 1), even), UnsupportedError);
  CHECK_THROWS_AS(is_square_in_completion(elem(1, 1), arch), UnsupportedError);
  CHECK_THROWS_AS(tame_hilbert(elem(1, 1), elem(1, 0), even), UnsupportedError);
  CHECK_THROWS_AS(tame_hilbert(elem(1, 1), elem(1, 0), arch), UnsupportedError);
  CHECK_THROWS_AS(is_square_in_completion(elem(0, 0), w5), std::domain_error);
  CHECK_THROWS_AS(tame_hilbert(elem(0, 0), elem(1, 0), w5), std::domain_error);
  // Element and place must come from the same field.
  QuadPlace other = places_over(Integer(5), Integer(7)).at(0);
  CHECK_THROWS_AS(is_square_in_completion(elem(1, 1), other), std::invalid_argument);
}

TEST_CASE("completions without smooth points on the singular quadric") {
  for (long d : {-7L, -19L, 17L}) {
    SmoothPointReport rep = smooth_points_singular_quadric(Integer(d));
    CHECK(rep.d == d);
    CHECK(rep.m == -3);

    // Exactly the even place fails.
    REQUIRE(rep.failures.size() == 1);
    CHECK(rep.failures[0].p == 2);
    CHECK(rep.even_symbol == -1);
    CHECK(rep.odd_product == -1);

    // The place over 3 carries the only odd -1 symbol but d is not a square
    // there (d = 2 mod 3), so it does not fail.
    int minus_count = 0;
    int prod_all = 1;
    for (const auto& row : rep.rows) prod_all *= row.symbol;
    // Hilbert reciprocity closes: the product over all places is +1.
    CHECK(prod_all == 1);
    for (const auto& row : rep.rows) {
      if (row.place.archimedean) {
        CHECK(row.symbol == 1);
        CHECK(row.d_is_square);
        CHECK(row.justification == "computed");
        continue;
      }
      if (row.place.p == 2) {
        CHECK(row.justification == "reciprocity");
        CHECK(row.d_is_square);
        CHECK(row.fails);
        continue;
      }
      CHECK(row.justification == "computed");
      if (row.symbol == -1) {
        ++minus_count;
        CHECK(row.place.p == 3);
        CHECK_FALSE(row.d_is_square);
        CHECK_FALSE(row.fails);
      } else {
        CHECK_FALSE(row.fails);
      }
    }
    CHECK(minus_count == 1);
  }

  // Row layout for d = -7: ramified 3, split pair over 7, archimedean, even.
  SmoothPointReport rep = smooth_points_singular_quadric(Integer(-7));
  REQUIRE(rep.rows.size() == 5);
  CHECK(rep.rows[0].place.str() == "3r");
  CHECK(rep.rows[1].place.str() == "7a");
  CHECK(rep.rows[2].place.str() == "7b");
  CHECK(rep.rows[3].place.str() == "arch");
  CHECK(rep.rows[4].place.str() == "2");

  CHECK_THROWS_AS(smooth_points_singular_quadric(Integer(-3)), std::invalid_argument);
  CHECK_THROWS_AS(smooth_points_singular_quadric(Integer(1)), std::invalid_argument);
  CHECK_THROWS_AS(smooth_points_singular_quadric(Integer(125)), std::invalid_argument);
}
