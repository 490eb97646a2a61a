#include "dp4/brauer.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "dp4/local.hpp"

namespace dp4 {

namespace {

// Residue mod p of the unit part of x = p^val * u (x nonzero, p odd).
Integer unit_residue(const Rational& x, int val, const Integer& p) {
  Rational u = val >= 0 ? Rational(x / Rational(pow_int(p, val)))
                        : Rational(x * Rational(pow_int(p, -val)));
  Integer den = u.get_den();
  Integer inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
    throw std::logic_error("unit_residue: denominator not invertible");
  Integer num = u.get_num() % p;
  return ((num * inv) % p + p) % p;
}

}  // namespace

BrauerClassSpec family_brauer_spec(const Integer& d) {
  if (d == 0 || !is_squarefree(d))
    throw std::invalid_argument("family_brauer_spec: d must be nonzero squarefree");
  return {d, family_f2()};
}

HalfInt half_add(HalfInt a, HalfInt b) {
  return a == b ? HalfInt::Zero : HalfInt::Half;
}

std::string half_str(HalfInt h) { return h == HalfInt::Zero ? "0" : "1/2"; }

std::string justification_str(JustificationTag tag) {
  switch (tag) {
    case JustificationTag::GoodReduction: return "GoodReduction";
    case JustificationTag::DSquareUnramified2: return "DSquareUnramified2";
    case JustificationTag::Archimedean: return "Archimedean";
    case JustificationTag::ZetaSquare: return "ZetaSquare";
    case JustificationTag::Place3Valuation: return "Place3Valuation";
    case JustificationTag::ConditionII: return "ConditionII";
  }
  return "?";
}

HalfInt beta_invariant(const BrauerClassSpec& spec, const Integer& a, const Integer& b,
                       const Place& v) {
  if (spec.f2.degree() != 2)
    throw std::invalid_argument("beta_invariant: f2 must be quadratic");
  Rational n = eval_homogeneous(spec.f2, Rational(a), Rational(b), 2);
  if (n == 0) throw std::domain_error("beta_invariant: evaluation at a ramified fiber");
  return hilbert_symbol(Rational(spec.d), n, v) == 1 ? HalfInt::Zero : HalfInt::Half;
}

bool check_beta_consistency(const BrauerClassSpec& spec, const QuadricPencil& pencil,
                            const Integer& a, const Integer& b, const Place& v) {
  if (v.is_archimedean() || v.prime() == 2)
    throw std::invalid_argument("check_beta_consistency: odd finite place required");
  if (b == 0)
    throw std::invalid_argument("check_beta_consistency: t at infinity unsupported");
  const Integer& p = v.prime();
  UniPoly f3;
  for (const auto& fac : pencil.factors)
    if (!fac.at_infinity && fac.degree == 3) f3 = fac.poly;
  if (f3.is_zero())
    throw std::invalid_argument("check_beta_consistency: pencil has no cubic factor");
  if (eval_homogeneous(pencil.phi, Rational(a), Rational(b), 5) == 0)
    throw std::invalid_argument("check_beta_consistency: singular fiber");
  if (local_roots(monic(f3), p, 12).count() != 3)
    throw std::invalid_argument("check_beta_consistency: place not completely split");
  // The two expressions agree as evaluations of one class on the line scheme,
  // but differ as Q(T)-classes by the Clifford class of the fiber quadric.
  // That difference vanishes exactly when the fiber carries a local line, so
  // the comparison is only defined over parameters with a nonempty fiber.
  if (!line_fiber_has_point(pencil, a, b, v))
    throw std::domain_error(
        "check_beta_consistency: fiber has no local line, comparison undefined");
  Rational t = Rational(a) / Rational(b);

  int halves = 0;
  bool resolved = false;
  for (int k = 12; k <= 36 && !resolved; k += 12) {
    LocalRootReport roots = local_roots(monic(f3), p, k);
    if (roots.count() != 3)
      throw std::invalid_argument("check_beta_consistency: place not completely split");
    int acc = 0;
    bool precise = true;
    for (const LocalRoot& r : roots.roots) {
      if (r.is_zero)
        throw UnsupportedError("check_beta_consistency: zero root unsupported");
      Rational diff = t - r.approx;
      if (diff == 0) {
        precise = false;
        break;
      }
      int vb = valuation(diff, p);
      if (vb > k - 6) {
        precise = false;
        break;
      }
      int va = r.valuation;
      Integer ua = unit_residue(r.approx, va, p);
      Integer ub = unit_residue(diff, vb, p);
      if (hilbert_symbol_padic(va, ua, vb, ub, p) == -1) ++acc;
    }
    if (precise) {
      halves = acc;
      resolved = true;
    }
  }
  if (!resolved)
    throw UnsupportedError("check_beta_consistency: p-adic precision exhausted");
  if (hilbert_symbol(Rational(2), Rational(3), v) == -1) ++halves;
  HalfInt lhs = (halves % 2 == 0) ? HalfInt::Zero : HalfInt::Half;
  return lhs == beta_invariant(spec, a, b, v);
}

EvaluationReport sample_evaluation(const BrauerClassSpec& spec,
                                   const QuadricPencil& pencil, const Place& v,
                                   long height_bound) {
  if (height_bound < 1)
    throw std::invalid_argument("sample_evaluation: height bound must be >= 1");
  EvaluationReport rep;
  rep.place = v;
  rep.height_bound = height_bound;
  std::set<int> seen;
  for (long b = 0; b <= height_bound; ++b) {
    for (long a = -height_bound; a <= height_bound; ++a) {
      if (b == 0 && a != 1) continue;
      if (gcd(Integer(a), Integer(b)) != 1) continue;
      Integer aa(a), bb(b);
      if (eval_homogeneous(pencil.phi, Rational(aa), Rational(bb), 5) == 0) continue;
      if (eval_homogeneous(spec.f2, Rational(aa), Rational(bb), 2) == 0) continue;
      if (!line_fiber_has_point(pencil, aa, bb, v)) continue;
      seen.insert(beta_invariant(spec, aa, bb, v) == HalfInt::Half ? 1 : 0);
      ++rep.samples;
    }
  }
  for (int s : seen) rep.observed.push_back(s == 0 ? HalfInt::Zero : HalfInt::Half);
  rep.constant = rep.observed.size() <= 1;
  return rep;
}

CertifyResult certify_obstruction(const Integer& d) {
  CertifyResult res;
  res.d = d;
  auto fail = [&](std::string step, std::string detail) {
    res.failure = CertifyFailure{std::move(step), std::move(detail)};
    return res;
  };

  // Condition (i).
  if (d == 0 || !is_squarefree(d))
    return fail("condition (i)", "d must be nonzero and squarefree");
  Integer m12 = ((d % 12) + 12) % 12;
  if (m12 != 5)
    return fail("condition (i)",
                "d = " + to_string(d) + " is " + to_string(m12) + " mod 12, need 5");

  // Condition (ii) at every prime dividing d.
  ConditionIIReport cii;
  try {
    cii = thm_d_condition_ii(d);
  } catch (const UnsupportedError& e) {
    return fail("condition (ii)", e.what());
  }
  if (!cii.all_hold) {
    std::string who;
    for (const auto& pr : cii.primes)
      if (!pr.holds) who += (who.empty() ? "" : ", ") + to_string(pr.v);
    return fail("condition (ii)", "fails at prime(s) " + who);
  }

  ObstructionCertificate cert;
  cert.d = d;
  cert.condition_ii = cii;

  std::set<Integer> finite{Integer(2), Integer(3), Integer(5)};
  for (const auto& pe : factor_integer(d)) finite.insert(pe.first);
  for (const Integer& q : finite) cert.bad_set.push_back(Place::finite(q));
  cert.bad_set.push_back(Place::infinity());
  std::sort(cert.bad_set.begin(), cert.bad_set.end());

  // Archimedean place.
  cert.per_place.push_back({Place::infinity(), HalfInt::Zero, JustificationTag::Archimedean,
                            "the auxiliary quadratic field is totally imaginary, so the"
                            " archimedean invariant vanishes"});

  // v = 2: d = 1 mod 4, hence a square in the unramified quadratic extension.
  Integer m4 = ((d % 4) + 4) % 4;
  if (m4 != 1) return fail("place 2", "d must be 1 mod 4 (follows from condition (i))");
  cert.per_place.push_back({Place::finite(2), HalfInt::Zero,
                            JustificationTag::DSquareUnramified2,
                            "d = 1 mod 4 is a square in the unramified quadratic"
                            " extension of Q_2"});

  // v = 3: the machine-checked half contribution.
  LocalRootReport r3 = local_roots(family_f3(), Integer(3), 8);
  if (!r3.exact || r3.count() != 1)
    return fail("place 3", "expected exactly one Q_3-root of the cubic");
  const LocalRoot& root3 = r3.roots[0];
  if (root3.is_zero || root3.valuation < 1)
    return fail("place 3", "the Q_3-root must have positive valuation");
  int h23 = hilbert_symbol(Rational(2), Rational(-3), Place::finite(3));
  if (h23 != -1) return fail("place 3", "(2, -3)_3 must equal -1");
  Integer d3 = ((d % 3) + 3) % 3;
  if (d3 != 2) return fail("place 3", "d must be 2 mod 3 (follows from condition (i))");
  cert.place3 = Place3Subcert{r3.count(), root3.valuation, h23, d3};
  cert.per_place.push_back({Place::finite(3), HalfInt::Half,
                            JustificationTag::Place3Valuation,
                            "every parameter with a 3-adic line has cubic-root valuation"
                            " forcing odd valuation of the f2-value; (d, N)_3 = -1 there"});

  // v = 5 and the primes dividing d: value inv_v(2,3), which must vanish.
  for (const Integer& q : finite) {
    if (q == 2 || q == 3) continue;
    Place v = Place::finite(q);
    int s23 = hilbert_symbol(Rational(2), Rational(3), v);
    if (s23 != 1)
      return fail("ramified set", "(2,3) unexpectedly ramified at " + to_string(q));
    bool is5 = (q == 5);
    cert.per_place.push_back({v, HalfInt::Zero,
                              is5 ? JustificationTag::ZetaSquare : JustificationTag::ConditionII,
                              is5 ? "the cubic's root is a square at 5 (ramified shift"
                                    " computation), so only (2,3)_5 = +1 remains"
                                  : "condition (ii) makes the corestriction term vanish;"
                                    " (2,3)_v = +1 remains"});
  }

  // Sanity: the fixed class (2,3) ramifies inside S only.
  for (const Place& w : hilbert_ramified_set(Rational(2), Rational(3))) {
    if (std::find(cert.bad_set.begin(), cert.bad_set.end(), w) == cert.bad_set.end())
      return fail("ramified set", "(2,3) ramified outside the bad set at " + w.str());
  }

  // Good reduction elsewhere, anchored at t = (1:0).
  Rational anchor = eval_homogeneous(family_f2(), Rational(1), Rational(0), 2);
  if (anchor != 1) return fail("anchor", "f2-value at (1:0) must be 1");
  cert.elsewhere_note =
      "all places outside the bad set: invariant 0 by good reduction, anchored at"
      " t = (1:0) where the f2-value is 1 and (d, 1)_v = +1 at every place";

  int halves = 0;
  for (const auto& pj : cert.per_place)
    if (pj.value == HalfInt::Half) ++halves;
  if (halves % 2 != 1) return fail("total", "per-place invariants do not sum to 1/2");
  cert.total = HalfInt::Half;

  res.certificate = std::move(cert);
  return res;
}

NoDegree2Report no_degree2_certificate(const Integer& d, long height_bound,
                                       int level_budget) {
  NoDegree2Report rep;
  rep.certificate = certify_obstruction(d);
  SurfaceXd x = xd_forms(d);
  rep.local_emptiness = local_points_dp4(x, Integer(3), level_budget);
  QuadricPencil pencil = pencil_new(x.q0, x.qinf);
  BrauerClassSpec spec{d, family_f2()};
  std::set<Integer> finite{Integer(2), Integer(3), Integer(5)};
  if (d != 0)
    for (const auto& pe : factor_integer(d)) finite.insert(pe.first);
  for (const Integer& q : finite)
    rep.evaluations.push_back(
        sample_evaluation(spec, pencil, Place::finite(q), height_bound));
  rep.verdict =
      rep.certificate.ok() && rep.local_emptiness.status == LiftStatus::Empty;
  rep.index_assumption =
      "index = 2 is recorded as an input assumption for the family; it is not"
      " re-derived here";
  return rep;
}

}  // namespace dp4
