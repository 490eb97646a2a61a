#pragma once

// Dense univariate polynomial arithmetic with coefficients in Z/m
// (m a prime or prime power), plus factorization over prime fields.
// Coefficients are stored lowest degree first, reduced to [0, m).

#include <random>
#include <vector>

#include "dp4/ints.hpp"

namespace dp4 {

using ModPoly = std::vector<Integer>;

ModPoly mp_reduce(const std::vector<Integer>& f, const Integer& m);
void mp_trim(ModPoly& f);
int mp_degree(const ModPoly& f);
bool mp_is_zero(const ModPoly& f);

ModPoly mp_add(const ModPoly& a, const ModPoly& b, const Integer& m);
ModPoly mp_sub(const ModPoly& a, const ModPoly& b, const Integer& m);
ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const Integer& m);
ModPoly mp_scalar(const Integer& s, const ModPoly& a, const Integer& m);

// Division with invertible leading coefficient of b mod m.
std::pair<ModPoly, ModPoly> mp_divrem(const ModPoly& a, const ModPoly& b, const Integer& m);

// Monic normalization; leading coefficient of f must be invertible mod m.
ModPoly mp_monic(const ModPoly& f, const Integer& m);

// Monic gcd over the field Z/p.
ModPoly mp_gcd(const ModPoly& a, const ModPoly& b, const Integer& p);

// base^e mod (f, m).
ModPoly mp_powmod(const ModPoly& base, const Integer& e, const ModPoly& f, const Integer& m);

Integer mp_eval(const ModPoly& f, const Integer& x, const Integer& m);

ModPoly mp_derivative(const ModPoly& f, const Integer& m);

// Full factorization over F_p of a nonzero polynomial: returns monic
// irreducible factors with multiplicity; the unit is implied by lc(f).
// Squarefree step handles p-th powers.  Equal-degree splitting is
// randomized from the given engine.
std::vector<std::pair<ModPoly, int>> mp_factor(const ModPoly& f, const Integer& p,
                                               std::mt19937_64& rng);

bool mp_is_irreducible(const ModPoly& f, const Integer& p, std::mt19937_64& rng);

// Roots of f in F_p (without multiplicity).
std::vector<Integer> mp_roots(const ModPoly& f, const Integer& p, std::mt19937_64& rng);

}  // namespace dp4
