#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dp4/brauer.hpp"
#include "dp4/family.hpp"

using namespace dp4;

namespace {

// Roots of the family cubic mod p by direct evaluation.
std::set<Integer> cubic_roots_mod(const Integer& p) {
  UniPoly f3 = family_f3();
  std::set<Integer> roots;
  for (Integer t = 0; t < p; ++t) {
    Rational v = eval_poly(f3, Rational(t));
    if (v.get_num() % p == 0) roots.insert(t);
  }
  return roots;
}

}  // namespace

TEST_CASE("family Gram matrices") {
  SurfaceXd x = xd_forms(Integer(-7));
  CHECK(x.d == -7);
  REQUIRE(x.q0.n == 5);
  REQUIRE(x.qinf.n == 5);
  const Mat& m0 = x.q0.gram;
  CHECK(m0[0][0] == Rational(-7));
  CHECK(m0[1][1] == Rational(21));
  CHECK(m0[2][2] == Rational(6));
  CHECK(m0[2][3] == Rational(3));
  CHECK(m0[3][2] == Rational(3));
  CHECK(m0[3][4] == Rational(-3));
  CHECK(m0[0][1] == Rational(0));
  CHECK(m0[4][4] == Rational(0));
  const Mat& mi = x.qinf.gram;
  CHECK(mi[0][1] == Rational(7));
  CHECK(mi[1][0] == Rational(7));
  CHECK(mi[2][2] == Rational(1));
  CHECK(mi[2][4] == Rational(-1));
  CHECK(mi[3][3] == Rational(-3));
  CHECK(mi[4][4] == Rational(-1));
  CHECK(mi[0][0] == Rational(0));
  CHECK_THROWS_AS(xd_forms(Integer(0)), std::invalid_argument);
}

TEST_CASE("square condition at the primes dividing d") {
  ConditionIIReport r7 = thm_d_condition_ii(Integer(-7));
  REQUIRE(r7.primes.size() == 1);
  CHECK(r7.primes[0].v == 7);
  CHECK(r7.primes[0].method == "unramified-residue-field");
  CHECK(r7.primes[0].holds);
  CHECK(r7.all_hold);

  ConditionIIReport r19 = thm_d_condition_ii(Integer(-19));
  REQUIRE(r19.primes.size() == 1);
  CHECK(r19.primes[0].holds);
  CHECK(r19.all_hold);

  // d = -35: the prime 5 ramifies in the cubic field and is handled through
  // the Eisenstein shift; 7 is unramified.
  ConditionIIReport r35 = thm_d_condition_ii(Integer(-35));
  REQUIRE(r35.primes.size() == 2);
  bool saw5 = false, saw7 = false;
  for (const auto& e : r35.primes) {
    if (e.v == 5) {
      saw5 = true;
      CHECK(e.method == "eisenstein-shift");
      CHECK(e.holds);  // -1 is a square mod 5
    }
    if (e.v == 7) {
      saw7 = true;
      CHECK(e.method == "unramified-residue-field");
      CHECK(e.holds);
    }
  }
  CHECK(saw5);
  CHECK(saw7);
  CHECK(r35.all_hold);

  CHECK_THROWS_AS(thm_d_condition_ii(Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(thm_d_condition_ii(Integer(-6)), std::invalid_argument);
  CHECK_THROWS_AS(thm_d_condition_ii(Integer(3)), std::invalid_argument);
}

TEST_CASE("3-adic emptiness of X_-7 and a certified point at good reduction") {
  SurfaceXd x = xd_forms(Integer(-7));
  LocalPointResult empty3 = local_points_dp4(x, Integer(3), 5);
  CHECK(empty3.status == LiftStatus::Empty);
  CHECK(empty3.p == 3);
  CHECK(empty3.witness.empty());
  // Raising the budget cannot change a rigorous emptiness proof.
  CHECK(local_points_dp4(x, Integer(3), 8).status == LiftStatus::Empty);

  LocalPointResult found = local_points_dp4(x, Integer(13), 6);
  REQUIRE(found.status == LiftStatus::PointFound);
  REQUIRE(static_cast<int>(found.witness.size()) == 5);
  Integer mod = pow_int(Integer(13), static_cast<unsigned long>(found.level));
  std::vector<Rational> pt;
  for (const Integer& c : found.witness) pt.emplace_back(c);
  Rational v0 = evaluate_form(x.q0, pt);
  Rational vi = evaluate_form(x.qinf, pt);
  REQUIRE(v0.get_den() == 1);
  REQUIRE(vi.get_den() == 1);
  CHECK(v0.get_num() % mod == 0);
  CHECK(vi.get_num() % mod == 0);
  CHECK(2 * found.minor_valuation < found.level);

  CHECK_THROWS_AS(local_points_dp4(x, Integer(3), 1), std::invalid_argument);
}

TEST_CASE("qualifying primes match a brute-force scan") {
  std::vector<Integer> qs = qualifying_primes(200);
  std::set<Integer> got(qs.begin(), qs.end());
  std::set<Integer> expect;
  for (const Integer& p : primes_up_to(200)) {
    if (p % 12 != 1) continue;
    std::set<Integer> roots = cubic_roots_mod(p);
    if (roots.size() != 3) continue;
    bool all_sq = true;
    for (const Integer& r : roots)
      if (r == 0 || legendre(r, p) != 1) all_sq = false;
    if (all_sq) expect.insert(p);
  }
  CHECK(got == expect);
  // 13 is 1 mod 12 but the cubic has no root mod 13.
  CHECK(got.count(Integer(13)) == 0);
  CHECK(cubic_roots_mod(Integer(13)).empty());
  for (const Integer& p : qs) {
    CHECK(is_prime(p));
    CHECK(p % 12 == 1);
  }
}

TEST_CASE("enumeration of valid parameters") {
  std::vector<Integer> ds = enumerate_valid_d(300, 1);
  REQUIRE_FALSE(ds.empty());
  CHECK(ds[0] == -7);
  for (const Integer& d : ds) {
    CertifyResult c = certify_obstruction(d);
    CHECK(c.ok());
    CHECK(d % 7 == 0);
    CHECK(d < 0);
  }
  // Entries are pairwise distinct.
  std::set<Integer> uniq(ds.begin(), ds.end());
  CHECK(uniq.size() == ds.size());
}

TEST_CASE("non-isomorphism test on parameter pairs") {
  CHECK(nonisomorphic(Integer(-7), Integer(-19)));
  CHECK_FALSE(nonisomorphic(Integer(-7), Integer(-7)));
  // d d' = -147, and -3 * (-147) = 441 = 21^2: the classes merge.
  CHECK_FALSE(nonisomorphic(Integer(-7), Integer(21)));
  CHECK(nonisomorphic(Integer(-7), Integer(5)));
  CHECK_THROWS_AS(nonisomorphic(Integer(0), Integer(5)), std::invalid_argument);
}
