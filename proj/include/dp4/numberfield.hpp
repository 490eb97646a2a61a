#pragma once

// Arithmetic in K = Q[T]/(modulus) for a monic irreducible modulus of degree
// at most 5.  Elements are represented by polynomials of degree < deg(modulus)
// (UniPoly); all operations reduce modulo the modulus.

#include <optional>

#include "dp4/poly.hpp"

namespace dp4 {

// An element of Q[T]/(modulus), carried together with its modulus.
struct NumberFieldElem {
  UniPoly modulus;
  UniPoly rep;  // representative of degree < deg(modulus)
};

UniPoly nf_reduce(const UniPoly& a, const UniPoly& modulus);
UniPoly nf_add(const UniPoly& a, const UniPoly& b, const UniPoly& modulus);
UniPoly nf_sub(const UniPoly& a, const UniPoly& b, const UniPoly& modulus);
UniPoly nf_mul(const UniPoly& a, const UniPoly& b, const UniPoly& modulus);
UniPoly nf_neg(const UniPoly& a, const UniPoly& modulus);
// Throws std::domain_error on zero (or a zero divisor, if the modulus is
// accidentally reducible).
UniPoly nf_inv(const UniPoly& a, const UniPoly& modulus);
UniPoly nf_div(const UniPoly& a, const UniPoly& b, const UniPoly& modulus);

// Characteristic polynomial of multiplication by x on K (monic, degree n).
UniPoly nf_charpoly(const UniPoly& x, const UniPoly& modulus);
Rational nf_norm(const UniPoly& x, const UniPoly& modulus);
Rational nf_trace(const UniPoly& x, const UniPoly& modulus);

// Square root of x in K if one exists.  Complete for deg(modulus) in {1,2,3};
// for degree 4 it may throw UnsupportedError when the square class cannot be
// decided by the resultant method, and degree 5 is unsupported (factoring the
// degree-10 resultant exceeds the factorization bound).
std::optional<UniPoly> nf_sqrt(const UniPoly& x, const UniPoly& modulus);

// Coefficient-field operations for symmetric_diagonalize over K.
struct NumberFieldOps {
  UniPoly modulus;
  explicit NumberFieldOps(UniPoly m) : modulus(std::move(m)) {}
  UniPoly zero() const { return UniPoly{}; }
  UniPoly one() const { return UniPoly::constant(Rational(1)); }
  bool is_zero(const UniPoly& a) const { return nf_reduce(a, modulus).is_zero(); }
  UniPoly add(const UniPoly& a, const UniPoly& b) const { return nf_add(a, b, modulus); }
  UniPoly sub(const UniPoly& a, const UniPoly& b) const { return nf_sub(a, b, modulus); }
  UniPoly mul(const UniPoly& a, const UniPoly& b) const { return nf_mul(a, b, modulus); }
  UniPoly div(const UniPoly& a, const UniPoly& b) const { return nf_div(a, b, modulus); }
  UniPoly neg(const UniPoly& a) const { return nf_neg(a, modulus); }
};

}  // namespace dp4
