#pragma once

// Pencils of quadrics in P^4: characteristic binary quintic, singular
// members, fibers, discriminant square classes of rank-4 members over their
// residue fields, and the line criterion on smooth fibers.

#include <optional>
#include <vector>

#include "dp4/numberfield.hpp"
#include "dp4/quadform.hpp"

namespace dp4 {

// One irreducible component of the singular subscheme of the pencil: either
// an irreducible factor of the affine characteristic polynomial, or the point
// at infinity (a:b) = (1:0) when det(M_inf) = 0.
struct SingularFactor {
  bool at_infinity = false;
  UniPoly poly;          // irreducible over Q (primitive, positive lc); unused at infinity
  int degree = 1;        // residue field degree over Q
  int multiplicity = 1;  // multiplicity in the binary quintic
  // Square class of the discriminant of the rank-4 fiber at the roots, as an
  // element of Q[T]/(poly); populated only when the quintic is squarefree.
  // Rational residue fields (degree 1 and infinity) use the signed squarefree
  // representative.
  UniPoly disc_class;
};

struct QuadricPencil {
  QuadraticForm q0, qinf;
  // Affine chart of the characteristic form: phi(t) = det(M0 + t*Minf);
  // the binary quintic is Phi(a,b) = b^5 phi(a/b), so the fiber over the
  // parameter (a:b) is b*M0 + a*Minf.
  UniPoly phi;
  bool squarefree = true;  // Phi squarefree as a binary quintic
  std::vector<SingularFactor> factors;
};

// Builds the pencil, factors the characteristic form, and (when it is
// squarefree) computes the discriminant class of every singular member.
// Throws std::invalid_argument if Phi vanishes identically.
QuadricPencil pencil_new(const QuadraticForm& q0, const QuadraticForm& qinf);

// Fiber over (a:b): the form b*M0 + a*Minf.  Requires coprime (a,b) != (0,0).
QuadraticForm fiber(const QuadricPencil& p, const Integer& a, const Integer& b);

// Discriminant square class of the rank-4 fiber at the roots of the factor,
// as an element of its residue field.  Requires a squarefree pencil.
NumberFieldElem disc_at_factor(const QuadricPencil& p, const SingularFactor& fac);

// Whether the smooth quadric threefold over t = (a:b) contains a line over
// the completion at v (scope = place) or over Q (scope = nullopt).  Throws
// std::domain_error when (a:b) is a root of the characteristic form.
bool line_fiber_has_point(const QuadricPencil& p, const Integer& a, const Integer& b,
                          const std::optional<Place>& scope);

}  // namespace dp4
