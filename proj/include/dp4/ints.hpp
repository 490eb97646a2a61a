#pragma once

// Exact integer and rational arithmetic, primality, factorization and
// square-class utilities.  Everything here is deterministic and pure.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace dp4 {

using Integer = mpz_class;
using Rational = mpq_class;

// Thrown when an input is outside the supported range of an algorithm
// (rather than being malformed).
struct UnsupportedError : std::runtime_error {
  explicit UnsupportedError(const std::string& what) : std::runtime_error(what) {}
};

std::string to_string(const Integer& n);

// "p/q" in lowest terms, or "n" when the denominator is 1.
std::string to_string(const Rational& x);

// Parses "p/q" or "n"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

Integer pow_int(const Integer& base, unsigned long e);

// v_p(n) for n != 0; throws on n == 0.
int valuation_int(const Integer& n, const Integer& p);

// Deterministic Miller-Rabin with the first twelve prime bases, valid for
// all n below 3.3e24.  Inputs at or beyond that bound throw UnsupportedError.
bool is_prime(const Integer& n);

// Prime factorization of |n| (n != 0) by trial division and Pollard rho.
// Keys are primes, values are exponents.
std::map<Integer, int> factor_integer(const Integer& n);

bool is_squarefree(const Integer& n);

// Signed squarefree representative of the square class of n (n != 0).
Integer squarefree_part(const Integer& n);

// Signed squarefree integer representative of the square class of x (x != 0).
Integer squarefree_part(const Rational& x);

bool is_rational_square(const Rational& x);

// Legendre symbol (a|p) for odd prime p; a may be any integer, result in
// {-1, 0, 1}.
int legendre(const Integer& a, const Integer& p);

// Kronecker symbol (a|n).
int kronecker(const Integer& a, const Integer& n);

// Ascending list of primes <= bound.
const std::vector<long>& small_primes();
std::vector<Integer> primes_up_to(long bound);

}  // namespace dp4
