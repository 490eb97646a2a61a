#pragma once

// Arithmetic in an imaginary quadratic field Q(sqrt(m)): splitting of
// rational primes, square tests and tame Hilbert symbols in completions at
// odd places, and the reciprocity deduction of the even-place symbol used to
// locate completions without smooth points on the singular quadric.

#include <string>
#include <vector>

#include "dp4/ints.hpp"

namespace dp4 {

struct QuadFieldElem {
  Integer m;  // squarefree, not 0 or 1
  Rational a, b;  // the element a + b sqrt(m)
};

QuadFieldElem make_quadfield_elem(const Integer& m, const Rational& a, const Rational& b);

QuadFieldElem quad_mul(const QuadFieldElem& x, const QuadFieldElem& y);
QuadFieldElem quad_div(const QuadFieldElem& x, const QuadFieldElem& y);
Rational quad_norm(const QuadFieldElem& x);
bool quad_is_zero(const QuadFieldElem& x);

enum class SplitType { Split, Inert, Ramified };

// Splitting of p in Q(sqrt(m)) (p = 2 uses the discriminant of the field).
SplitType splitting_type(const Integer& m, const Integer& p);

struct QuadPlace {
  Integer m;
  bool archimedean = false;
  Integer p;  // finite places only
  SplitType type = SplitType::Inert;
  int index = 0;  // 0 or 1, selecting one of the two places over a split prime
  std::string str() const;
};

QuadPlace quad_place_archimedean(const Integer& m);
// The places over a finite prime p (two when p splits, one otherwise).
std::vector<QuadPlace> places_over(const Integer& m, const Integer& p);

// Square test in the completion at an odd finite place.  Split places embed
// into Q_p via the deterministically chosen root of T^2 - m (smallest
// nonnegative residue, Hensel-lifted); inert and ramified places use
// valuation parity plus a residue-field power test.  p = 2 is unsupported.
bool is_square_in_completion(const QuadFieldElem& x, const QuadPlace& w);

// Tame Hilbert symbol (x, y)_w at an odd finite place, via the residue
// formula on (-1)^(v(x)v(y)) x^v(y) y^(-v(x)).  p = 2 is unsupported.
int tame_hilbert(const QuadFieldElem& x, const QuadFieldElem& y, const QuadPlace& w);

struct QuadPlaceRow {
  QuadPlace place;
  bool d_is_square = false;  // square class of d in that completion
  int symbol = 1;            // (2, sqrt(m))_w
  bool fails = false;        // no smooth points on the singular quadric
  std::string justification;  // "computed" or "reciprocity"
};

struct SmoothPointReport {
  Integer d;
  Integer m;  // -3
  std::vector<QuadPlaceRow> rows;
  std::vector<QuadPlace> failures;
  int odd_product = 1;  // product of (2, sqrt(m))_w over all odd finite places
  int even_symbol = 1;  // deduced from Hilbert reciprocity
};

// For d = 5 mod 12: the completions of Q(sqrt(-3)) where the singular
// quadric (difference of scaled norm forms attached to d) has no smooth
// points.  A completion fails exactly when d is a local square and
// (2, sqrt(-3))_w = -1; the even place is decided purely by reciprocity.
SmoothPointReport smooth_points_singular_quadric(const Integer& d);

}  // namespace dp4
