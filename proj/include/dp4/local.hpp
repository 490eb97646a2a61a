#pragma once

// Places of Q and local computations: valuations, local squares, Hilbert
// symbols, p-adic root counting via Newton polygons and Hensel lifting,
// and square testing in finite residue field extensions.

#include <optional>

#include "dp4/poly.hpp"

namespace dp4 {

// A place of Q: the archimedean place or a finite prime.
class Place {
 public:
  static Place infinity() { return Place(); }
  static Place finite(const Integer& p);  // validates primality

  bool is_archimedean() const { return arch_; }
  const Integer& prime() const;  // finite places only

  bool operator==(const Place& o) const { return arch_ == o.arch_ && p_ == o.p_; }
  bool operator<(const Place& o) const;  // finite primes ascending, then infinity

  std::string str() const;

 private:
  Place() : arch_(true), p_(0) {}
  explicit Place(const Integer& p) : arch_(false), p_(p) {}
  bool arch_;
  Integer p_;
};

// v_p(x) for x != 0; throws on x == 0.
int valuation(const Rational& x, const Integer& p);

// Whether x != 0 is a square in the completion at v.
bool is_local_square(const Rational& x, const Place& v);

// Hilbert symbol (a, b)_v in {-1, +1}; a, b nonzero.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

// Hilbert symbol at odd p for p-adic arguments given by exact valuation and
// a unit approximation (unit mod p determines the symbol).
int hilbert_symbol_padic(int val_a, const Integer& unit_a, int val_b,
                         const Integer& unit_b, const Integer& p);

// Places where (a, b)_v = -1: always a finite set of even size.
std::vector<Place> hilbert_ramified_set(const Rational& a, const Rational& b);

struct LocalRoot {
  Rational approx;   // p^val * (unit lifted mod p^k); exact 0 for the zero root
  int valuation;     // ignored for the zero root
  bool is_zero;
};

struct LocalRootReport {
  std::vector<LocalRoot> roots;                  // the Q_p-roots found
  std::vector<std::pair<Rational, int>> slopes;  // Newton slopes with widths
  bool exact;   // false when some configuration could not be resolved
  int count() const { return static_cast<int>(roots.size()); }
};

// Q_p-roots of a squarefree rational polynomial, approximated so that
// v_p(f(root)) >= k.  `exact` is true unless the recursion budget was
// exhausted; reported roots are always genuine.
LocalRootReport local_roots(const UniPoly& f, const Integer& p, int k);

// Whether g is a square in the residue field F_p[T]/(h); h irreducible
// mod p, p odd, g a unit mod (p, h).  Decided by the (q-1)/2 power test.
bool residue_field_is_square(const UniPoly& h, const UniPoly& g, const Integer& p);

}  // namespace dp4
