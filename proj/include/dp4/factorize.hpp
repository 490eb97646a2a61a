#pragma once

// Factorization of univariate rational polynomials of degree <= 8:
// squarefree decomposition, factorization modulo a good prime, Hensel
// lifting to a power above the Mignotte factor bound, and exhaustive
// subset recombination.

#include <vector>

#include "dp4/poly.hpp"

namespace dp4 {

struct RationalFactorization {
  Rational content;  // content * prod factors^mult == input
  std::vector<std::pair<UniPoly, int>> factors;  // primitive integer factors,
                                                 // positive leading coefficient
};

// Factors f (nonzero, degree <= 8).  The randomized equal-degree splitter
// is seeded from `seed`; the returned factor list is sorted canonically and
// does not depend on the seed.
RationalFactorization factor_poly_rational(const UniPoly& f, unsigned long seed = 0);

bool is_irreducible_rational(const UniPoly& f, unsigned long seed = 0);

// Rational roots of f (nonzero), with multiplicity collapsed.
std::vector<Rational> rational_roots(const UniPoly& f, unsigned long seed = 0);

}  // namespace dp4
