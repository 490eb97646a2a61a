#include <random>

#include "doctest.h"
#include "dp4/padic_search.hpp"
#include "dp4/quadform.hpp"

using namespace dp4;

namespace {

QuadraticForm random_form(std::mt19937_64& rng, int n) {
  Mat m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      long v = static_cast<long>(rng() % 11) - 5;
      m[i][j] = m[j][i] = Rational(v);
    }
  }
  return make_form(m);
}

}  // namespace

TEST_CASE("construction validates") {
  CHECK_THROWS_AS(make_form(Mat{{Rational(1), Rational(2)}, {Rational(3), Rational(1)}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_form(Mat{{Rational(1), Rational(2)}}), std::invalid_argument);
  QuadraticForm q = diagonal_form({Rational(1), Rational(-2)});
  CHECK(q.n == 2);
  CHECK(evaluate_form(q, {Rational(3), Rational(1)}) == Rational(7));
}

TEST_CASE("rational determinant") {
  Mat m{{Rational(1), Rational(2)}, {Rational(3), Rational(4)}};
  CHECK(rational_det(m) == Rational(-2));
  Mat id(4, std::vector<Rational>(4, Rational(0)));
  for (int i = 0; i < 4; ++i) id[i][i] = Rational(1);
  CHECK(rational_det(id) == Rational(1));
  std::swap(id[0], id[1]);
  CHECK(rational_det(id) == Rational(-1));
}

TEST_CASE("diagonalization is a congruence") {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 4);
    QuadraticForm q = random_form(rng, n);
    DiagonalForm d = diagonalize(q);
    REQUIRE(static_cast<int>(d.entries.size()) == n);
    // P^T M P = diag
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        Rational acc(0);
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            acc += d.transform[a][i] * q.gram[a][b] * d.transform[b][j];
          }
        }
        CHECK(acc == (i == j ? d.entries[i] : Rational(0)));
      }
    }
  }
}

TEST_CASE("invariants are congruence invariants") {
  std::mt19937_64 rng(52);
  std::vector<Place> places{Place::infinity(), Place::finite(2), Place::finite(3),
                            Place::finite(5), Place::finite(7)};
  for (int t = 0; t < 15; ++t) {
    int n = 3 + static_cast<int>(rng() % 3);
    QuadraticForm q = random_form(rng, n);
    QuadraticForm q2 = random_congruence(q, 1000 + t);
    DiagonalForm d1 = diagonalize(q);
    DiagonalForm d2 = diagonalize(q2);
    FormInvariants i1 = form_invariants(d1);
    FormInvariants i2 = form_invariants(d2);
    CHECK(i1.rank == i2.rank);
    CHECK(i1.disc == i2.disc);
    CHECK(i1.sig_pos == i2.sig_pos);
    CHECK(i1.sig_neg == i2.sig_neg);
    for (const Place& v : places) {
      CAPTURE(t);
      REQUIRE(hasse_invariant(d1, v) == hasse_invariant(d2, v));
    }
  }
}

TEST_CASE("classical isotropy facts") {
  // Sums of squares are anisotropic over Q and R.
  QuadraticForm sums4 = diagonal_form({Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(!is_isotropic_global(sums4));
  CHECK(!is_isotropic_local(sums4, Place::infinity()));
  // x^2 + y^2 = 7 z^2 has no solution (7 = 3 mod 4).
  CHECK(!is_isotropic_global(diagonal_form({Rational(1), Rational(1), Rational(-7)})));
  // x^2 + y^2 + z^2 = 7 w^2 has none (7 = 7 mod 8 is not a sum of three squares).
  CHECK(!is_isotropic_global(
      diagonal_form({Rational(1), Rational(1), Rational(1), Rational(-7)})));
  // Four squares represent everything positive.
  CHECK(is_isotropic_global(diagonal_form(
      {Rational(1), Rational(1), Rational(1), Rational(1), Rational(-7)})));
  // Hyperbolic planes.
  QuadraticForm h2 = diagonal_form({Rational(1), Rational(-1), Rational(1), Rational(-1)});
  CHECK(witt_index_global(h2) == 2);
  for (long p : {2L, 3L, 5L}) CHECK(witt_index_local(h2, Place::finite(p)) == 2);
  // Rank 5 with entries of one sign: real Witt index 0.
  QuadraticForm pos5 = diagonal_form(
      {Rational(1), Rational(2), Rational(3), Rational(1), Rational(5)});
  CHECK(witt_index_local(pos5, Place::infinity()) == 0);
  // Any rank-5 form over Q_p is isotropic.
  for (long p : {2L, 3L, 7L}) CHECK(witt_index_local(pos5, Place::finite(p)) >= 1);
}

TEST_CASE("witt index vs lifting oracle on a small sample") {
  std::vector<std::vector<Rational>> diags{
      {Rational(1), Rational(1), Rational(1)},
      {Rational(1), Rational(-1), Rational(3)},
      {Rational(1), Rational(3), Rational(9) / 2},
      {Rational(2), Rational(3), Rational(5), Rational(7)},
      {Rational(1), Rational(-3), Rational(5), Rational(-15)},
      {Rational(1), Rational(2), Rational(-3), Rational(-6), Rational(5)},
  };
  for (long p : {3L, 5L}) {
    for (const auto& ent : diags) {
      QuadraticForm q = diagonal_form(ent);
      LiftResult r = lift_search({q}, Integer(p), 10);
      REQUIRE(r.status != LiftStatus::Unknown);
      bool isotropic = r.status == LiftStatus::PointFound;
      CAPTURE(p);
      REQUIRE(is_isotropic_local(q, Place::finite(p)) == isotropic);
      REQUIRE((witt_index_local(q, Place::finite(p)) >= 1) == isotropic);
    }
  }
}

TEST_CASE("line criterion on rank-5 forms") {
  // Split form: contains a line everywhere.
  QuadraticForm split = diagonal_form(
      {Rational(1), Rational(-1), Rational(1), Rational(-1), Rational(1)});
  CHECK(quadric_contains_line(split, std::nullopt));
  CHECK(quadric_contains_line(split, std::optional<Place>(Place::finite(2))));
  // Definite form: no real point at all, hence no line anywhere globally.
  QuadraticForm def = diagonal_form(
      {Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)});
  CHECK(!quadric_contains_line(def, std::optional<Place>(Place::infinity())));
  CHECK(!quadric_contains_line(def, std::nullopt));
  CHECK_THROWS_AS(quadric_contains_line(diagonal_form({Rational(1)}), std::nullopt),
                  std::invalid_argument);
}

TEST_CASE("conic local points") {
  // x^2 + y^2 = 3 z^2 fails at 3 (and at 2), passes at 5.
  CHECK(!conic_has_local_point(Rational(1), Rational(1), Rational(-3), Place::finite(3)));
  CHECK(conic_has_local_point(Rational(1), Rational(1), Rational(-3), Place::finite(5)));
  CHECK(!conic_has_local_point(Rational(1), Rational(1), Rational(1), Place::infinity()));
  CHECK(conic_has_local_point(Rational(1), Rational(-1), Rational(1), Place::finite(7)));
}
