#pragma once

// Dense univariate polynomials with exact rational coefficients,
// stored lowest degree first.

#include <initializer_list>
#include <utility>
#include <vector>

#include "dp4/ints.hpp"

namespace dp4 {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly from_ints(std::initializer_list<long> coeffs);
  static UniPoly monomial(int deg, const Rational& coeff = Rational(1));
  static UniPoly constant(const Rational& v);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int i) const;
  const Rational& leading() const;
  const std::vector<Rational>& coeffs() const { return c_; }

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

UniPoly operator+(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Rational& s, const UniPoly& a);

// Quotient and remainder over the rationals; b != 0.
std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b);

// True when b divides a exactly.
bool divides(const UniPoly& b, const UniPoly& a);

// Monic gcd (zero polynomial when both inputs are zero).
UniPoly gcd_poly(const UniPoly& a, const UniPoly& b);

// g, u, v with g = gcd (monic) and u*a + v*b = g.
struct XgcdResult {
  UniPoly g, u, v;
};
XgcdResult xgcd_poly(const UniPoly& a, const UniPoly& b);

UniPoly derivative(const UniPoly& f);

Rational eval_poly(const UniPoly& f, const Rational& x);

// b^max(deg, top_degree) * f(a/b): homogeneous evaluation of f promoted to
// degree top_degree (top_degree >= deg f).
Rational eval_homogeneous(const UniPoly& f, const Rational& a, const Rational& b,
                          int top_degree);

// f(T + c).
UniPoly shift_poly(const UniPoly& f, const Rational& c);

// f(c * T).
UniPoly scale_arg_poly(const UniPoly& f, const Rational& c);

UniPoly monic(const UniPoly& f);

// content.first * primitive integer coefficients == f; the primitive part has
// positive leading coefficient.
struct PrimitivePart {
  Rational content;
  std::vector<Integer> coeffs;  // primitive, lowest degree first
};
PrimitivePart primitive_part(const UniPoly& f);

UniPoly poly_from_int_coeffs(const std::vector<Integer>& coeffs);

// f / gcd(f, f'): the radical (squarefree part), monic.
UniPoly squarefree_radical(const UniPoly& f);

// Yun decomposition: list of (g_i, i) with f = lc * prod g_i^i, g_i monic
// squarefree and pairwise coprime (only nontrivial g_i are listed).
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f);

// Lagrange interpolation: the unique polynomial of degree < #points through
// (points[k], values[k]); the points must be pairwise distinct.
UniPoly interpolate_poly(const std::vector<Rational>& points,
                         const std::vector<Rational>& values);

// Resultant of two rational polynomials.
Rational resultant(const UniPoly& a, const UniPoly& b);

// Discriminant of f (deg >= 1): (-1)^(n(n-1)/2) Res(f, f') / lc(f).
Rational discriminant(const UniPoly& f);

}  // namespace dp4
