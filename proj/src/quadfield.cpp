#include "dp4/quadfield.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "dp4/local.hpp"

namespace dp4 {
namespace {

void validate_m(const Integer& m) {
  if (m == 0 || m == 1 || !is_squarefree(m)) {
    throw std::invalid_argument("quadfield: m must be squarefree and not 0 or 1");
  }
}

void validate_elem(const QuadFieldElem& x) { validate_m(x.m); }

Integer mod_pos(const Integer& x, const Integer& p) {
  Integer r = x % p;
  if (r < 0) r += p;
  return r;
}

// Clear denominators by a rational square so both coordinates become
// integers; this preserves the square class and every Hilbert symbol.
void scale_to_integers(const QuadFieldElem& x, Integer& a, Integer& b) {
  Integer da = x.a.get_den(), db = x.b.get_den();
  Integer l;
  mpz_lcm(l.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
  Rational s(l * l, 1);
  Rational ra = x.a * s, rb = x.b * s;
  if (ra.get_den() != 1 || rb.get_den() != 1) {
    throw std::logic_error("quadfield: denominator clearing failed");
  }
  a = ra.get_num();
  b = rb.get_num();
}

// Smallest nonnegative root of T^2 = m mod p (p odd, m a nonzero QR).
Integer sqrt_mod_p(const Integer& m, const Integer& p) {
  if (p > 1000000) throw UnsupportedError("quadfield: split prime too large for root search");
  Integer mm = mod_pos(m, p);
  for (Integer r = 0; r < p; ++r) {
    if (mod_pos(r * r - mm, p) == 0) return r;
  }
  throw std::logic_error("quadfield: no square root mod p for a split prime");
}

// Newton lift of a root of T^2 - m from mod p to mod p^k.
Integer lift_root(const Integer& m, const Integer& p, const Integer& r0, int k) {
  Integer r = r0;
  int have = 1;
  while (have < k) {
    int next = std::min(2 * have, k);
    Integer target = pow_int(p, static_cast<unsigned long>(next));
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), Integer(2 * r).get_mpz_t(), target.get_mpz_t()) == 0) {
      throw std::logic_error("quadfield: Newton step not invertible");
    }
    r = mod_pos(r - (r * r - m) * inv, target);
    have = next;
  }
  return r;
}

struct ValUnit {
  int val;
  Integer unit;  // residue mod p of x / p^val
};

// Valuation and unit residue of the image of x in Q_p under the embedding
// sending sqrt(m) to the lifted root.  Precision is escalated until the
// valuation is certified; the companion-norm valuation bounds it, so the
// loop terminates quickly.
ValUnit split_image(const QuadFieldElem& x, const Integer& p, int which) {
  Integer a, b;
  scale_to_integers(x, a, b);
  Integer r0 = sqrt_mod_p(x.m, p);
  if (which == 1) r0 = p - r0;  // the conjugate embedding
  for (int k = 16; k <= 256; k *= 2) {
    Integer pk = pow_int(p, static_cast<unsigned long>(k));
    Integer rk = lift_root(x.m, p, r0, k);
    Integer z = mod_pos(a + b * rk, pk);
    if (z == 0) continue;  // valuation >= k: not certified, raise precision
    int v = valuation_int(z, p);
    if (v > k - 3) continue;
    Integer unit = mod_pos(z / pow_int(p, static_cast<unsigned long>(v)), p);
    return {v, unit};
  }
  throw UnsupportedError("quadfield: could not certify the valuation at a split place");
}

// Residue-field arithmetic for an inert place: F_{p^2} = F_p[Y]/(Y^2 - m).
struct Fp2 {
  Integer a, b;  // a + b Y
};

Fp2 fp2_mul(const Fp2& x, const Fp2& y, const Integer& m, const Integer& p) {
  return {mod_pos(x.a * y.a + x.b * y.b * m, p), mod_pos(x.a * y.b + x.b * y.a, p)};
}

bool fp2_is_square(const Fp2& z, const Integer& m, const Integer& p) {
  Integer e = (p * p - 1) / 2;
  Fp2 acc{1, 0};
  Fp2 base = z;
  Integer n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) acc = fp2_mul(acc, base, m, p);
    base = fp2_mul(base, base, m, p);
    n /= 2;
  }
  if (acc.b != 0) throw std::logic_error("quadfield: residue power test left the prime field");
  if (acc.a == 1) return true;
  if (acc.a == p - 1) return false;
  throw std::logic_error("quadfield: residue power test gave a non-sign value");
}

// Valuation of x at the place w together with the unit part x / pi^val,
// where pi is p at split/inert places and sqrt(m) at ramified ones.
int place_valuation(const QuadFieldElem& x, const QuadPlace& w) {
  switch (w.type) {
    case SplitType::Split:
      return split_image(x, w.p, w.index).val;
    case SplitType::Inert: {
      int va = x.a == 0 ? 0 : valuation(x.a, w.p);
      int vb = x.b == 0 ? 0 : valuation(x.b, w.p);
      if (x.a == 0) return vb;
      if (x.b == 0) return va;
      return std::min(va, vb);
    }
    case SplitType::Ramified: {
      // v_w(a) = 2 v_p(a), v_w(b sqrt(m)) = 2 v_p(b) + 1: distinct parities,
      // so the minimum is attained exactly once and no cancellation occurs.
      if (x.a == 0) return 2 * valuation(x.b, w.p) + 1;
      if (x.b == 0) return 2 * valuation(x.a, w.p);
      return std::min(2 * valuation(x.a, w.p), 2 * valuation(x.b, w.p) + 1);
    }
  }
  throw std::logic_error("quadfield: unreachable");
}

QuadFieldElem quad_pow(QuadFieldElem x, long e) {
  if (e < 0) {
    x = quad_div({x.m, Rational(1), Rational(0)}, x);
    e = -e;
  }
  QuadFieldElem acc{x.m, Rational(1), Rational(0)};
  while (e > 0) {
    if (e & 1) acc = quad_mul(acc, x);
    x = quad_mul(x, x);
    e >>= 1;
  }
  return acc;
}

// Residue in the prime field F_p of a w-unit at an inert or ramified place;
// for inert places the result is an element of F_{p^2} instead.
Fp2 unit_residue(const QuadFieldElem& x, const QuadPlace& w) {
  int v = place_valuation(x, w);
  QuadFieldElem u = x;
  if (w.type == SplitType::Inert) {
    Rational pw(pow_int(w.p, static_cast<unsigned long>(v >= 0 ? v : -v)), 1);
    u.a = v >= 0 ? Rational(x.a / pw) : Rational(x.a * pw);
    u.b = v >= 0 ? Rational(x.b / pw) : Rational(x.b * pw);
  } else {
    // Divide by sqrt(m)^v = m^(v/2) (even v) or m^((v-1)/2) sqrt(m) (odd v).
    QuadFieldElem pi{x.m, Rational(0), Rational(1)};
    u = quad_mul(x, quad_pow(pi, -static_cast<long>(v)));
  }
  Integer ua_num = u.a.get_num(), ua_den = u.a.get_den();
  Integer ub_num = u.b.get_num(), ub_den = u.b.get_den();
  Integer inva, invb;
  if (mpz_invert(inva.get_mpz_t(), ua_den.get_mpz_t(), w.p.get_mpz_t()) == 0 ||
      mpz_invert(invb.get_mpz_t(), ub_den.get_mpz_t(), w.p.get_mpz_t()) == 0) {
    throw std::logic_error("quadfield: unit part has a denominator at p");
  }
  Fp2 res{mod_pos(ua_num * inva, w.p), mod_pos(ub_num * invb, w.p)};
  if (w.type == SplitType::Ramified) {
    // For a w-unit the b sqrt(m) part has odd, hence positive, valuation and
    // vanishes in the residue field F_p; the residue is a mod p.
    res.b = 0;
  }
  if (res.a == 0 && res.b == 0) {
    throw std::logic_error("quadfield: unit part reduced to zero");
  }
  return res;
}

void require_odd_finite(const QuadPlace& w, const char* who) {
  if (w.archimedean) throw UnsupportedError(std::string(who) + ": archimedean place");
  if (w.p == 2) throw UnsupportedError(std::string(who) + ": even place is out of scope");
}

}  // namespace

QuadFieldElem make_quadfield_elem(const Integer& m, const Rational& a, const Rational& b) {
  validate_m(m);
  return {m, a, b};
}

QuadFieldElem quad_mul(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (x.m != y.m) throw std::invalid_argument("quadfield: mixed fields");
  return {x.m, x.a * y.a + x.b * y.b * Rational(x.m), x.a * y.b + x.b * y.a};
}

QuadFieldElem quad_div(const QuadFieldElem& x, const QuadFieldElem& y) {
  if (x.m != y.m) throw std::invalid_argument("quadfield: mixed fields");
  Rational n = quad_norm(y);
  if (n == 0) throw std::domain_error("quadfield: division by zero");
  QuadFieldElem conj{y.m, y.a, -y.b};
  QuadFieldElem num = quad_mul(x, conj);
  return {x.m, num.a / n, num.b / n};
}

Rational quad_norm(const QuadFieldElem& x) { return x.a * x.a - Rational(x.m) * x.b * x.b; }

bool quad_is_zero(const QuadFieldElem& x) { return x.a == 0 && x.b == 0; }

SplitType splitting_type(const Integer& m, const Integer& p) {
  validate_m(m);
  if (!is_prime(p)) throw std::invalid_argument("quadfield: p must be prime");
  if (p == 2) {
    Integer r = mod_pos(m, 8);
    if (r == 1) return SplitType::Split;
    if (r == 5) return SplitType::Inert;
    return SplitType::Ramified;  // field discriminant 4m is even
  }
  if (m % p == 0) return SplitType::Ramified;
  return legendre(m, p) == 1 ? SplitType::Split : SplitType::Inert;
}

std::string QuadPlace::str() const {
  if (archimedean) return "arch";
  std::string s = p.get_str();
  switch (type) {
    case SplitType::Split:
      return s + (index == 0 ? "a" : "b");
    case SplitType::Inert:
      return s;
    case SplitType::Ramified:
      return s + "r";
  }
  return s;
}

QuadPlace quad_place_archimedean(const Integer& m) {
  validate_m(m);
  QuadPlace w;
  w.m = m;
  w.archimedean = true;
  return w;
}

std::vector<QuadPlace> places_over(const Integer& m, const Integer& p) {
  SplitType t = splitting_type(m, p);
  std::vector<QuadPlace> out;
  QuadPlace w;
  w.m = m;
  w.p = p;
  w.type = t;
  out.push_back(w);
  if (t == SplitType::Split) {
    w.index = 1;
    out.push_back(w);
  }
  return out;
}

bool is_square_in_completion(const QuadFieldElem& x, const QuadPlace& w) {
  validate_elem(x);
  if (x.m != w.m) throw std::invalid_argument("quadfield: element and place from different fields");
  require_odd_finite(w, "is_square_in_completion");
  if (quad_is_zero(x)) throw std::domain_error("quadfield: square test of zero");
  switch (w.type) {
    case SplitType::Split: {
      ValUnit vu = split_image(x, w.p, w.index);
      // Odd p: square iff the valuation is even and the unit residue is a QR.
      return vu.val % 2 == 0 && legendre(vu.unit, w.p) == 1;
    }
    case SplitType::Inert: {
      int v = place_valuation(x, w);
      if (mod_pos(v, 2) != 0) return false;
      return fp2_is_square(unit_residue(x, w), mod_pos(x.m, w.p), w.p);
    }
    case SplitType::Ramified: {
      int v = place_valuation(x, w);
      if (mod_pos(v, 2) != 0) return false;
      Fp2 r = unit_residue(x, w);
      return legendre(r.a, w.p) == 1;
    }
  }
  throw std::logic_error("quadfield: unreachable");
}

int tame_hilbert(const QuadFieldElem& x, const QuadFieldElem& y, const QuadPlace& w) {
  validate_elem(x);
  validate_elem(y);
  if (x.m != w.m || y.m != w.m) {
    throw std::invalid_argument("quadfield: element and place from different fields");
  }
  require_odd_finite(w, "tame_hilbert");
  if (quad_is_zero(x) || quad_is_zero(y)) throw std::domain_error("quadfield: symbol of zero");
  if (w.type == SplitType::Split) {
    // The completion is Q_p; push both arguments through the embedding.
    ValUnit vx = split_image(x, w.p, w.index);
    ValUnit vy = split_image(y, w.p, w.index);
    return hilbert_symbol_padic(vx.val, Integer(vx.unit), vy.val, Integer(vy.unit), w.p);
  }
  long a = place_valuation(x, w);
  long b = place_valuation(y, w);
  // Tame symbol: chi((-1)^(ab) x^b y^(-a)) with chi the quadratic character
  // of the residue field; the argument is a w-unit by construction.
  QuadFieldElem t = quad_mul(quad_pow(x, b), quad_pow(y, -a));
  if ((a & 1) && (b & 1)) {
    t.a = -t.a;
    t.b = -t.b;
  }
  Fp2 r = unit_residue(t, w);
  bool sq;
  if (w.type == SplitType::Inert) {
    sq = fp2_is_square(r, mod_pos(x.m, w.p), w.p);
  } else {
    sq = legendre(r.a, w.p) == 1;
  }
  return sq ? 1 : -1;
}

SmoothPointReport smooth_points_singular_quadric(const Integer& d) {
  if (mod_pos(d, 12) != 5) {
    throw std::invalid_argument("smooth_points_singular_quadric: d must be 5 mod 12");
  }
  if (!is_squarefree(d)) {
    throw std::invalid_argument("smooth_points_singular_quadric: d must be squarefree");
  }
  SmoothPointReport rep;
  rep.d = d;
  rep.m = -3;
  const Integer m = rep.m;
  if (splitting_type(m, 2) != SplitType::Inert) {
    throw std::logic_error("smooth_points_singular_quadric: expected 2 inert in Q(sqrt(-3))");
  }
  QuadFieldElem two{m, Rational(2), Rational(0)};
  QuadFieldElem sqm{m, Rational(0), Rational(1)};
  QuadFieldElem dd{m, Rational(d), Rational(0)};

  // Odd places where (2, sqrt(m))_w could differ from +1: both arguments are
  // units away from primes dividing 2, m, or the norms 4 and -m, so only the
  // place over 3 can contribute.  Places over primes dividing d are listed
  // too so the report covers every place where d is not obviously a unit.
  std::set<Integer> odd_primes;
  odd_primes.insert(3);
  for (const auto& [q, e] : factor_integer(d)) {
    if (q != 2) odd_primes.insert(q);
  }
  for (const Integer& q : odd_primes) {
    for (const QuadPlace& w : places_over(m, q)) {
      QuadPlaceRow row;
      row.place = w;
      row.d_is_square = is_square_in_completion(dd, w);
      row.symbol = tame_hilbert(two, sqm, w);
      row.fails = row.d_is_square && row.symbol == -1;
      row.justification = "computed";
      rep.rows.push_back(row);
      rep.odd_product *= row.symbol;
      if (row.fails) rep.failures.push_back(w);
    }
  }

  // Archimedean place: the field is imaginary, the completion is C, every
  // element is a square and every symbol is +1.
  QuadPlaceRow arch;
  arch.place = quad_place_archimedean(m);
  arch.d_is_square = true;
  arch.symbol = 1;
  arch.fails = false;
  arch.justification = "computed";
  rep.rows.push_back(arch);

  // Even place: 2 is inert, so there is a single place over 2 and the
  // product formula determines its symbol from the odd ones.
  rep.even_symbol = rep.odd_product;  // archimedean contribution is +1
  QuadPlaceRow even;
  even.place = places_over(m, 2).at(0);
  // d = 1 mod 4: an odd unit congruent to 1 mod 4 is a square in the
  // unramified quadratic extension of Q_2.
  even.d_is_square = mod_pos(d, 4) == 1;
  even.symbol = rep.even_symbol;
  even.fails = even.d_is_square && even.symbol == -1;
  even.justification = "reciprocity";
  rep.rows.push_back(even);
  if (even.fails) rep.failures.push_back(even.place);
  return rep;
}

}  // namespace dp4
