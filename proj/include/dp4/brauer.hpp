#pragma once

// Evaluation of the order-2 Brauer class attached to (d, f2) on line-scheme
// fibers: per-place invariants, evaluation-map sampling over rational
// parameters, the corestriction consistency check at completely split
// primes, and the rigorous per-place obstruction certificate.

#include <optional>
#include <string>
#include <vector>

#include "dp4/family.hpp"
#include "dp4/pencil.hpp"

namespace dp4 {

struct BrauerClassSpec {
  Integer d;   // nonzero squarefree
  UniPoly f2;  // irreducible quadratic (T^2 + 3 for the family)
};

BrauerClassSpec family_brauer_spec(const Integer& d);

// An element of (1/2)Z / Z.
enum class HalfInt { Zero, Half };

HalfInt half_add(HalfInt a, HalfInt b);
std::string half_str(HalfInt h);

// inv_v of the class at the fiber over t = (a:b): 0 iff (d, N)_v = +1 where
// N is the homogenized f2-value at (a:b).  Throws std::domain_error when
// N = 0 (evaluation at a ramified fiber).
HalfInt beta_invariant(const BrauerClassSpec& spec, const Integer& a, const Integer& b,
                       const Place& v);

// At an odd place where the cubic factor splits into three Q_v-roots zeta_i:
// checks that sum_i inv_v(zeta_i, t - zeta_i) + inv_v(2, 3) equals
// beta_invariant at t.  Throws std::invalid_argument when the place is not
// completely split (or t is singular / at infinity), and std::domain_error
// when the fiber over t has no Q_v-line: the two expressions are evaluations
// of one class on the line scheme and only agree over its image.
bool check_beta_consistency(const BrauerClassSpec& spec, const QuadricPencil& pencil,
                            const Integer& a, const Integer& b, const Place& v);

struct EvaluationReport {
  Place place = Place::infinity();
  std::vector<HalfInt> observed;  // distinct values, sorted (Zero before Half)
  long samples = 0;               // parameters with a v-line that were evaluated
  long height_bound = 0;
  bool constant = true;           // |observed| <= 1
};

// Scans coprime (a:b) with max(|a|,|b|) <= height_bound (b >= 0, and only
// (1:0) at b = 0), skipping singular fibers, and records beta_invariant at
// every t whose fiber contains a v-line.
EvaluationReport sample_evaluation(const BrauerClassSpec& spec,
                                   const QuadricPencil& pencil, const Place& v,
                                   long height_bound);

enum class JustificationTag {
  GoodReduction,
  DSquareUnramified2,
  Archimedean,
  ZetaSquare,
  Place3Valuation,
  ConditionII,
};

std::string justification_str(JustificationTag tag);

struct PlaceJustification {
  Place place = Place::infinity();
  HalfInt value = HalfInt::Zero;
  JustificationTag tag = JustificationTag::GoodReduction;
  std::string note;
};

// Machine-checked data behind the place-3 contribution.
struct Place3Subcert {
  int root_count = 0;       // number of Q_3-roots of the cubic (must be 1)
  int root_valuation = 0;   // 3-adic valuation of that root (must be >= 1)
  int hilbert_2_m3 = 0;     // (2, -3)_3 (must be -1)
  Integer d_mod_3;          // must be 2
};

struct ObstructionCertificate {
  Integer d;
  std::vector<Place> bad_set;                 // S = {inf, 2, 3, 5} + primes of d
  std::vector<PlaceJustification> per_place;  // one entry per member of S
  // All places outside S: value 0 by good reduction, anchored by the
  // evaluation at t = (1:0), where the f2-value is 1 and every symbol is +1.
  std::string elsewhere_note;
  ConditionIIReport condition_ii;
  Place3Subcert place3;
  HalfInt total = HalfInt::Zero;
};

struct CertifyFailure {
  std::string step;    // e.g. "condition (i)", "condition (ii)"
  std::string detail;
};

struct CertifyResult {
  Integer d;
  std::optional<ObstructionCertificate> certificate;
  std::optional<CertifyFailure> failure;
  bool ok() const { return certificate.has_value(); }
};

// Reproduces the per-place case analysis: condition (i) d = 5 mod 12 and
// squarefree; condition (ii) at every prime dividing d; value 0 at infinity,
// 2, 5, and primes of d; value 1/2 at 3 with a machine-checked sub-
// certificate; total 1/2.
CertifyResult certify_obstruction(const Integer& d);

struct NoDegree2Report {
  CertifyResult certificate;
  LocalPointResult local_emptiness;            // p-adic search at p = 3
  std::vector<EvaluationReport> evaluations;   // heuristic, at the finite bad places
  bool verdict = false;  // no closed point of degree dividing 2
  std::string index_assumption;
};

// Bundles the rigorous certificate, the Q_3 emptiness search, and sampled
// evaluation maps.  The index-2 input is recorded as an assumption tag.
NoDegree2Report no_degree2_certificate(const Integer& d, long height_bound = 30,
                                       int level_budget = 5);

}  // namespace dp4
