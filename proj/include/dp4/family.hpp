#pragma once

// The X_d family of degree-4 surfaces cut out by two quadrics: standard Gram
// matrices, the per-prime square condition on the cubic's root, p-adic point
// search on the surface, enumeration of valid d, and pairwise
// non-isomorphism.

#include <string>
#include <vector>

#include "dp4/padic_search.hpp"
#include "dp4/quadform.hpp"

namespace dp4 {

struct SurfaceXd {
  Integer d;
  QuadraticForm q0, qinf;
};

// The two Gram matrices of the family member with parameter d (d != 0).
SurfaceXd xd_forms(const Integer& d);

// The fixed quadratic and cubic singular factors of the family's pencil.
UniPoly family_f2();  // T^2 + 3
UniPoly family_f3();  // T^3 + 3T^2 + 3T - 9

struct ConditionIIPrime {
  Integer v;
  bool holds = false;
  std::string method;  // "unramified-residue-field" or "eisenstein-shift"
};

struct ConditionIIReport {
  bool all_hold = true;
  std::vector<ConditionIIPrime> primes;
};

// For each odd prime v | d: whether the root of the family cubic is a square
// in Q_v tensor the cubic field.  Requires gcd(d, 6) = 1.  Unramified primes
// use residue-field power tests per irreducible factor mod v; v = 5 uses the
// Eisenstein shift of the cubic.  Any other ramified prime (or v in {2, 3})
// throws UnsupportedError rather than guessing.
ConditionIIReport thm_d_condition_ii(const Integer& d);

struct LocalPointResult {
  LiftStatus status = LiftStatus::Unknown;
  Integer p;
  int level = 0;
  std::vector<Integer> witness;     // primitive solution mod p^level when found
  int minor_valuation = -1;         // Hensel certificate data when found
};

// Breadth-first p-adic search for points on X_d: Empty is rigorous emptiness
// over Q_p, PointFound carries a Hensel-certified witness, Unknown means the
// level budget ran out.
LocalPointResult local_points_dp4(const SurfaceXd& x, const Integer& p, int max_level);

// Primes p <= bound with p = 1 mod 12 such that the family cubic splits into
// three linear factors mod p with every root a nonzero quadratic residue.
std::vector<Integer> qualifying_primes(long prime_bound);

// d = -7 times products of at most max_factors distinct qualifying primes,
// keeping only values that pass the full obstruction certificate.  The first
// entry is always -7 itself.
std::vector<Integer> enumerate_valid_d(long prime_bound, int max_factors);

// True when d d' is neither a rational square nor -3 times one (the two
// rational square classes that merge in Q(sqrt(-3))), so the two surfaces
// cannot be isomorphic.
bool nonisomorphic(const Integer& d, const Integer& dprime);

}  // namespace dp4
