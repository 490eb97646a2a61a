#include "doctest.h"

#include <optional>
#include <stdexcept>

#include "dp4/brauer.hpp"

using namespace dp4;

namespace {

QuadricPencil family_pencil(long d) {
  SurfaceXd x = xd_forms(Integer(d));
  return pencil_new(x.q0, x.qinf);
}

// Smallest odd prime below the bound where the family cubic acquires three
// p-adic roots, discovered rather than assumed.
std::optional<Integer> smallest_split_prime(long bound) {
  for (const Integer& p : primes_up_to(bound)) {
    if (p == 2) continue;
    LocalRootReport r = local_roots(family_f3(), p, 12);
    if (r.count() == 3) return p;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("half-integer arithmetic") {
  CHECK(half_add(HalfInt::Zero, HalfInt::Zero) == HalfInt::Zero);
  CHECK(half_add(HalfInt::Zero, HalfInt::Half) == HalfInt::Half);
  CHECK(half_add(HalfInt::Half, HalfInt::Zero) == HalfInt::Half);
  CHECK(half_add(HalfInt::Half, HalfInt::Half) == HalfInt::Zero);
  CHECK(half_str(HalfInt::Zero) == "0");
  CHECK(half_str(HalfInt::Half) == "1/2");
}

TEST_CASE("class specification validation") {
  BrauerClassSpec s = family_brauer_spec(Integer(-7));
  CHECK(s.d == -7);
  CHECK(s.f2 == family_f2());
  CHECK_THROWS_AS(family_brauer_spec(Integer(0)), std::invalid_argument);
  CHECK_THROWS_AS(family_brauer_spec(Integer(12)), std::invalid_argument);
}

TEST_CASE("invariant at the anchor parameter vanishes everywhere") {
  BrauerClassSpec s = family_brauer_spec(Integer(-7));
  std::vector<Place> places{Place::infinity(), Place::finite(2), Place::finite(3),
                            Place::finite(5), Place::finite(7), Place::finite(79)};
  for (const Place& v : places)
    CHECK(beta_invariant(s, Integer(1), Integer(0), v) == HalfInt::Zero);
}

TEST_CASE("pinned invariant values") {
  BrauerClassSpec s7 = family_brauer_spec(Integer(-7));
  // t = 0: the f2-value is 3.  (-7, 3)_3 = -1 and (-7, 3)_7 = leg(3, 7) = -1.
  CHECK(beta_invariant(s7, Integer(0), Integer(1), Place::finite(3)) == HalfInt::Half);
  CHECK(beta_invariant(s7, Integer(0), Integer(1), Place::finite(7)) == HalfInt::Half);
  // t = 2: the f2-value is 7 and (-7, 7)_7 = +1.
  CHECK(beta_invariant(s7, Integer(2), Integer(1), Place::finite(7)) == HalfInt::Zero);
  // t = 9: the f2-value is 84 = 7 * 12 and the symbol picks up leg(12, 7) = -1.
  CHECK(beta_invariant(s7, Integer(9), Integer(1), Place::finite(7)) == HalfInt::Half);
  // d < 0 and the f2-value a^2 + 3b^2 > 0: the real symbol is always +1.
  CHECK(beta_invariant(s7, Integer(3), Integer(2), Place::infinity()) == HalfInt::Zero);

  BrauerClassSpec s19 = family_brauer_spec(Integer(-19));
  CHECK(beta_invariant(s19, Integer(0), Integer(1), Place::finite(5)) == HalfInt::Zero);

  // At v = 2 and v = 5 the invariant vanishes identically on smooth fibers:
  // d = 1 mod 4 kills the 2-adic symbol (the f2-value of a unit t is 4 mod 8),
  // and -3 is not a square mod 5, so the f2-value is always a 5-adic unit
  // or of even valuation.
  for (long d : {-7L, -19L}) {
    BrauerClassSpec s = family_brauer_spec(Integer(d));
    for (long b = 1; b <= 6; ++b)
      for (long a = -6; a <= 6; ++a) {
        if (gcd(Integer(a), Integer(b)) != 1) continue;
        CHECK(beta_invariant(s, Integer(a), Integer(b), Place::finite(2)) == HalfInt::Zero);
        CHECK(beta_invariant(s, Integer(a), Integer(b), Place::finite(5)) == HalfInt::Zero);
      }
  }
}

TEST_CASE("invariant input validation") {
  BrauerClassSpec bad{Integer(-7), poly_from_int_coeffs({0, 0, 0, 1})};
  CHECK_THROWS_AS(beta_invariant(bad, Integer(1), Integer(1), Place::finite(3)),
                  std::invalid_argument);
  // A reducible quadratic has rational ramified fibers.
  BrauerClassSpec red{Integer(-7), poly_from_int_coeffs({-4, 0, 1})};
  CHECK_THROWS_AS(beta_invariant(red, Integer(2), Integer(1), Place::finite(3)),
                  std::domain_error);
}

TEST_CASE("corestriction consistency at a completely split prime") {
  auto p = smallest_split_prime(200);
  REQUIRE(p.has_value());
  CHECK(*p > 23);  // the cubic acquires at most one root at every prime up to 23
  REQUIRE(*p == 37);  // roots 6, -4, -5 mod 37
  BrauerClassSpec s = family_brauer_spec(Integer(-7));
  QuadricPencil pencil = family_pencil(-7);
  Place v = Place::finite(*p);
  long checked = 0;
  for (long b = 1; b <= 3; ++b)
    for (long a = -4; a <= 4; ++a) {
      if (gcd(Integer(a), Integer(b)) != 1) continue;
      CHECK(check_beta_consistency(s, pencil, Integer(a), Integer(b), v));
      ++checked;
    }
  CHECK(checked >= 15);

  // t = -5 reduces to the root -5 = 2^5 mod 37, a nonsquare residue, so the
  // rank-4 part of the nearby cone has nonsquare discriminant and the fiber
  // carries no 37-adic line.  There the two cocycle expressions differ as
  // Q(T)-classes (by the fiber quadric's Clifford class) and the comparison
  // must be rejected instead of reported as a mismatch.
  CHECK_FALSE(line_fiber_has_point(pencil, Integer(-5), Integer(1), v));
  CHECK_THROWS_AS(check_beta_consistency(s, pencil, Integer(-5), Integer(1), v),
                  std::domain_error);
  // t = -4 also reduces to a root, but 33 is a square mod 37: the fiber keeps
  // its lines and the identity holds through the near-singular parameter.
  CHECK(line_fiber_has_point(pencil, Integer(-4), Integer(1), v));
  CHECK(check_beta_consistency(s, pencil, Integer(-4), Integer(1), v));

  CHECK_THROWS_AS(check_beta_consistency(s, pencil, Integer(1), Integer(1), Place::finite(2)),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_beta_consistency(s, pencil, Integer(1), Integer(1), Place::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_beta_consistency(s, pencil, Integer(1), Integer(0), v),
                  std::invalid_argument);
  // 3 is not completely split (one root only).
  CHECK_THROWS_AS(check_beta_consistency(s, pencil, Integer(1), Integer(1), Place::finite(3)),
                  std::invalid_argument);
}

TEST_CASE("evaluation-map sampling") {
  BrauerClassSpec s = family_brauer_spec(Integer(-7));
  QuadricPencil pencil = family_pencil(-7);

  // Place 3: any fiber with a 3-adic line evaluates to 1/2, never 0.
  EvaluationReport at3 = sample_evaluation(s, pencil, Place::finite(3), 12);
  CHECK(at3.height_bound == 12);
  CHECK(at3.constant == (at3.observed.size() <= 1));
  for (HalfInt h : at3.observed) CHECK(h == HalfInt::Half);

  // Places 2 and 5: the invariant vanishes on every smooth fiber, so any
  // sampled value must be 0; lines are plentiful 2-adically.
  EvaluationReport at2 = sample_evaluation(s, pencil, Place::finite(2), 10);
  CHECK(at2.samples > 0);
  REQUIRE(at2.observed.size() == 1);
  CHECK(at2.observed[0] == HalfInt::Zero);
  EvaluationReport at5 = sample_evaluation(s, pencil, Place::finite(5), 10);
  for (HalfInt h : at5.observed) CHECK(h == HalfInt::Zero);

  // Determinism.
  EvaluationReport again = sample_evaluation(s, pencil, Place::finite(2), 10);
  CHECK(again.samples == at2.samples);
  CHECK(again.observed == at2.observed);

  CHECK_THROWS_AS(sample_evaluation(s, pencil, Place::finite(2), 0), std::invalid_argument);
}

TEST_CASE("full obstruction certificate for d = -7") {
  CertifyResult r = certify_obstruction(Integer(-7));
  REQUIRE(r.ok());
  REQUIRE_FALSE(r.failure.has_value());
  const ObstructionCertificate& c = *r.certificate;
  CHECK(c.d == -7);
  CHECK(c.total == HalfInt::Half);

  REQUIRE(c.bad_set.size() == 5);
  CHECK(c.bad_set.back().is_archimedean());
  std::vector<Integer> finite_expected{2, 3, 5, 7};
  for (size_t i = 0; i < finite_expected.size(); ++i)
    CHECK(c.bad_set[i].prime() == finite_expected[i]);

  REQUIRE(c.per_place.size() == 5);
  int halves = 0;
  for (const auto& pj : c.per_place) {
    if (pj.value == HalfInt::Half) {
      ++halves;
      CHECK_FALSE(pj.place.is_archimedean());
      CHECK(pj.place.prime() == 3);
      CHECK(pj.tag == JustificationTag::Place3Valuation);
    }
    CHECK_FALSE(pj.note.empty());
    if (pj.place.is_archimedean()) CHECK(pj.tag == JustificationTag::Archimedean);
    else if (pj.place.prime() == 2) CHECK(pj.tag == JustificationTag::DSquareUnramified2);
    else if (pj.place.prime() == 5) CHECK(pj.tag == JustificationTag::ZetaSquare);
    else if (pj.place.prime() == 7) CHECK(pj.tag == JustificationTag::ConditionII);
  }
  CHECK(halves == 1);

  CHECK(c.place3.root_count == 1);
  CHECK(c.place3.root_valuation >= 1);
  CHECK(c.place3.hilbert_2_m3 == -1);
  CHECK(c.place3.d_mod_3 == 2);
  CHECK(c.condition_ii.all_hold);
  CHECK_FALSE(c.elsewhere_note.empty());
}

TEST_CASE("certificate outcomes across parameters") {
  CHECK(certify_obstruction(Integer(-19)).ok());

  CertifyResult r79 = certify_obstruction(Integer(-79));
  REQUIRE_FALSE(r79.ok());
  CHECK(r79.failure->step == "condition (ii)");

  for (long d : {6L, -5L, 3L}) {
    CertifyResult r = certify_obstruction(Integer(d));
    REQUIRE_FALSE(r.ok());
    CHECK(r.failure->step == "condition (i)");
  }
  CHECK(certify_obstruction(Integer(12)).failure->step == "condition (i)");
  CHECK(certify_obstruction(Integer(0)).failure->step == "condition (i)");
}

TEST_CASE("bundled no-degree-2 report") {
  NoDegree2Report rep = no_degree2_certificate(Integer(-7), 8, 5);
  CHECK(rep.verdict);
  CHECK(rep.certificate.ok());
  CHECK(rep.local_emptiness.status == LiftStatus::Empty);
  CHECK(rep.local_emptiness.p == 3);
  REQUIRE(rep.evaluations.size() == 4);
  std::vector<Integer> places;
  for (const auto& e : rep.evaluations) {
    REQUIRE_FALSE(e.place.is_archimedean());
    places.push_back(e.place.prime());
    CHECK(e.height_bound == 8);
  }
  CHECK(places == std::vector<Integer>{2, 3, 5, 7});
  CHECK(rep.index_assumption.find("assumption") != std::string::npos);

  // A parameter that fails the certificate still yields a structured report.
  NoDegree2Report bad = no_degree2_certificate(Integer(-79), 4, 3);
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(bad.certificate.ok());
}
