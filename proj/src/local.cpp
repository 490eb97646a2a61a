#include "dp4/local.hpp"

#include <algorithm>
#include <set>

#include "dp4/polymod.hpp"

namespace dp4 {

Place Place::finite(const Integer& p) {
  if (!is_prime(p)) throw std::invalid_argument("Place::finite: not a prime: " + to_string(p));
  return Place(p);
}

const Integer& Place::prime() const {
  if (arch_) throw std::invalid_argument("Place::prime: archimedean place");
  return p_;
}

bool Place::operator<(const Place& o) const {
  if (arch_ != o.arch_) return !arch_;  // finite first
  if (arch_) return false;
  return p_ < o.p_;
}

std::string Place::str() const { return arch_ ? "inf" : p_.get_str(); }

int valuation(const Rational& x, const Integer& p) {
  if (x == 0) throw std::invalid_argument("valuation: zero argument");
  int v = 0;
  if (x.get_num() % p == 0) v += valuation_int(x.get_num(), p);
  if (x.get_den() % p == 0) v -= valuation_int(x.get_den(), p);
  return v;
}

namespace {

// Unit part u with x = p^v * u (x a nonzero rational, u a p-unit rational).
Rational unit_part(const Rational& x, const Integer& p, int v) {
  Rational u = x;
  Integer pw = pow_int(p, static_cast<unsigned long>(v < 0 ? -v : v));
  if (v >= 0)
    u /= Rational(pw);
  else
    u *= Rational(pw);
  return u;
}

// Residue mod p^e of a p-integral rational.
Integer residue(const Rational& x, const Integer& pe) {
  Integer dinv;
  if (!mpz_invert(dinv.get_mpz_t(), x.get_den().get_mpz_t(), pe.get_mpz_t()))
    throw std::invalid_argument("residue: denominator not invertible");
  Integer r = (x.get_num() % pe) * dinv % pe;
  if (r < 0) r += pe;
  return r;
}

}  // namespace

bool is_local_square(const Rational& x, const Place& v) {
  if (x == 0) throw std::invalid_argument("is_local_square: zero argument");
  if (v.is_archimedean()) return x > 0;
  const Integer& p = v.prime();
  int val = valuation(x, p);
  if (val % 2) return false;
  Rational u = unit_part(x, p, val);
  if (p == 2) return residue(u, Integer(8)) == 1;
  return legendre(residue(u, p), p) == 1;
}

namespace {

int hilbert_int(Integer a, Integer b, const Place& v) {
  if (v.is_archimedean()) return (a < 0 && b < 0) ? -1 : 1;
  const Integer& p = v.prime();
  int alpha = valuation_int(a, p), beta = valuation_int(b, p);
  Integer u = a / pow_int(p, alpha), w = b / pow_int(p, beta);
  if (p == 2) {
    auto eps = [](const Integer& n) { return ((n - 1) / 2) % 2 != 0; };
    auto omega = [](const Integer& n) { return ((n * n - 1) / 8) % 2 != 0; };
    int e = 0;
    if (eps(u) && eps(w)) e ^= 1;
    if (alpha % 2 && omega(w)) e ^= 1;
    if (beta % 2 && omega(u)) e ^= 1;
    return e ? -1 : 1;
  }
  int r = 1;
  if (beta % 2) r *= legendre(u, p);
  if (alpha % 2) r *= legendre(w, p);
  if (alpha % 2 && beta % 2 && ((p - 1) / 2) % 2 != 0) r = -r;
  return r;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  // multiply by squares to reach integers
  Integer A = a.get_num() * a.get_den();
  Integer B = b.get_num() * b.get_den();
  return hilbert_int(A, B, v);
}

int hilbert_symbol_padic(int val_a, const Integer& unit_a, int val_b,
                         const Integer& unit_b, const Integer& p) {
  if (p == 2) throw UnsupportedError("hilbert_symbol_padic: even place not supported");
  if (unit_a % p == 0 || unit_b % p == 0)
    throw std::invalid_argument("hilbert_symbol_padic: unit argument divisible by p");
  int r = 1;
  if (val_b % 2) r *= legendre(unit_a, p);
  if (val_a % 2) r *= legendre(unit_b, p);
  if (val_a % 2 && val_b % 2 && ((p - 1) / 2) % 2 != 0) r = -r;
  return r;
}

std::vector<Place> hilbert_ramified_set(const Rational& a, const Rational& b) {
  std::set<Integer> primes{Integer(2)};
  for (auto& [p, e] : factor_integer(squarefree_part(a))) {
    (void)e;
    primes.insert(p);
  }
  for (auto& [p, e] : factor_integer(squarefree_part(b))) {
    (void)e;
    primes.insert(p);
  }
  primes.erase(Integer(1));
  std::vector<Place> out;
  for (const Integer& p : primes) {
    if (p < 2) continue;
    Place v = Place::finite(p);
    if (hilbert_symbol(a, b, v) == -1) out.push_back(v);
  }
  if (hilbert_symbol(a, b, Place::infinity()) == -1) out.push_back(Place::infinity());
  return out;
}

// ---------------------------------------------------------------------------
// p-adic roots
// ---------------------------------------------------------------------------

namespace {

using IntVec = std::vector<Integer>;

int vec_val(const Integer& x, const Integer& p) { return valuation_int(x, p); }

Integer eval_int(const IntVec& f, const Integer& x) {
  Integer acc = 0;
  for (size_t i = f.size(); i-- > 0;) acc = acc * x + f[i];
  return acc;
}

IntVec derivative_int(const IntVec& f) {
  if (f.size() <= 1) return {Integer(0)};
  IntVec out(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) out[i - 1] = Integer(i) * f[i];
  return out;
}

// Newton refinement of a root of f: starting from x0 with
// v(f(x0)) > 2 v(f'(x0)), lifts until v(f(x)) >= target.
Integer newton_refine(const IntVec& f, Integer x, const Integer& p, int target) {
  IntVec df = derivative_int(f);
  for (int iter = 0; iter < 200; ++iter) {
    Integer fx = eval_int(f, x);
    if (fx == 0) return x;
    int vf = vec_val(fx, p);
    if (vf >= target) {
      // canonical representative mod p^target
      Integer pk = pow_int(p, target);
      Integer r = x % pk;
      if (r < 0) r += pk;
      return r;
    }
    Integer dfx = eval_int(df, x);
    if (dfx == 0) throw std::logic_error("newton_refine: vanishing derivative");
    int w = vec_val(dfx, p);
    if (vf <= 2 * w) throw std::logic_error("newton_refine: Hensel condition violated");
    // x <- x - fx / dfx computed mod a comfortable power
    Integer pk = pow_int(p, target + 2 * w + 2);
    Integer du = dfx / pow_int(p, w);
    Integer duinv;
    if (!mpz_invert(duinv.get_mpz_t(), du.get_mpz_t(), pk.get_mpz_t()))
      throw std::logic_error("newton_refine: unit inversion failed");
    Integer step = (fx / pow_int(p, w)) % pk * duinv % pk;
    x = (x - step) % pk;
    if (x < 0) x += pk;
  }
  throw std::logic_error("newton_refine: no convergence");
}

struct HullSeg {
  Rational slope;
  int width;
};

std::vector<HullSeg> newton_hull(const IntVec& f, const Integer& p) {
  std::vector<std::pair<long, long>> pts;  // (i, v_p(f_i))
  for (size_t i = 0; i < f.size(); ++i)
    if (f[i] != 0) pts.emplace_back(static_cast<long>(i), vec_val(f[i], p));
  std::vector<std::pair<long, long>> hull;
  for (auto& pt : pts) {
    while (hull.size() >= 2) {
      auto& a = hull[hull.size() - 2];
      auto& b = hull[hull.size() - 1];
      // pop b unless it is strictly below segment a-pt
      long cross = (b.first - a.first) * (pt.second - a.second) -
                   (b.second - a.second) * (pt.first - a.first);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }
  std::vector<HullSeg> segs;
  for (size_t i = 0; i + 1 < hull.size(); ++i) {
    Rational s(hull[i + 1].second - hull[i].second, hull[i + 1].first - hull[i].first);
    s.canonicalize();
    segs.push_back({s, static_cast<int>(hull[i + 1].first - hull[i].first)});
  }
  return segs;
}

// Substitute x = p^m y and normalize so the minimum coefficient valuation is
// zero.  Returns the normalized polynomial and the extracted power mu with
// f(p^m y) = p^mu * h(y).
std::pair<IntVec, long> substitute_scale(const IntVec& f, const Integer& p, long m) {
  long mu = 0;
  bool first = true;
  std::vector<long> shift(f.size(), 0);
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    long s = vec_val(f[i], p) + m * static_cast<long>(i);
    if (first || s < mu) mu = s;
    first = false;
  }
  IntVec h(f.size(), Integer(0));
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    long e = m * static_cast<long>(i) - mu;
    // e >= -v_p(f_i), so the result is integral
    Integer c = f[i];
    if (e >= 0) {
      c *= pow_int(p, static_cast<unsigned long>(e));
    } else {
      c /= pow_int(p, static_cast<unsigned long>(-e));
    }
    h[i] = c;
  }
  return {h, mu};
}

IntVec shift_int(const IntVec& f, const Integer& c) {
  // f(x + c) by Horner
  IntVec acc{Integer(0)};
  for (size_t i = f.size(); i-- > 0;) {
    // acc = acc * (x + c) + f[i]
    IntVec next(acc.size() + 1, Integer(0));
    for (size_t j = 0; j < acc.size(); ++j) {
      next[j + 1] += acc[j];
      next[j] += acc[j] * c;
    }
    next[0] += f[i];
    while (next.size() > 1 && next.back() == 0) next.pop_back();
    acc = next;
  }
  return acc;
}

IntVec scale_arg_int(const IntVec& f, const Integer& c) {
  IntVec out = f;
  Integer pw = 1;
  for (size_t i = 0; i < out.size(); ++i) {
    out[i] *= pw;
    pw *= c;
  }
  return out;
}

struct RecOut {
  std::vector<std::pair<Rational, long>> roots;  // (approx, valuation)
  bool exact = true;
};

// Roots of g in Q_p (valuation >= 0 unless allow_neg), approximations with
// v_p(g(root)) >= target.
void qp_roots_rec(const IntVec& g, const Integer& p, int target, bool allow_neg,
                  int budget, RecOut& out) {
  std::set<long> vals;
  for (auto& seg : newton_hull(g, p)) {
    if (seg.slope.get_den() != 1) continue;  // no Q_p roots on this segment
    long m = -seg.slope.get_num().get_si();
    if (m < 0 && !allow_neg) continue;
    vals.insert(m);
  }
  for (long m : vals) {
    auto [h, mu] = substitute_scale(g, p, m);
    int htarget = std::max(target - static_cast<int>(mu), 1);
    ModPoly hbar = mp_reduce(h, p);
    // nonzero residues only: zero residues belong to other slope segments
    long pl = p.get_si();
    for (long r = 1; r < pl; ++r) {
      if (mp_eval(hbar, Integer(r), p) != 0) continue;
      // multiplicity of r in hbar
      ModPoly q = hbar;
      int mult = 0;
      while (mp_eval(q, Integer(r), p) == 0) {
        // divide by (y - r) mod p
        ModPoly lin{Integer((pl - r) % pl), Integer(1)};
        q = mp_divrem(q, lin, p).first;
        ++mult;
        if (q.empty()) break;
      }
      if (mult == 1) {
        Integer u = newton_refine(h, Integer(r), p, htarget);
        Rational root = m < 0 ? Rational(Rational(u) / Rational(pow_int(p, -m)))
                              : Rational(Rational(u) * Rational(pow_int(p, m)));
        out.roots.emplace_back(root, m);
      } else {
        if (budget <= 0) {
          out.exact = false;
          continue;
        }
        // u = r + p z; recurse on h(r + p z)
        IntVec h2 = scale_arg_int(shift_int(h, Integer(r)), p);
        auto [h3, mu2] = substitute_scale(h2, p, 0);  // normalize content power
        if (h3[0] == 0) {
          // exact integer root r of h
          Rational root = m < 0 ? Rational(Rational(r) / Rational(pow_int(p, -m)))
                                : Rational(Rational(r) * Rational(pow_int(p, m)));
          out.roots.emplace_back(root, m);
          // strip the factor z (squarefree input: multiplicity one)
          IntVec stripped(h3.begin() + 1, h3.end());
          h3 = stripped;
          if (h3.empty() || (h3.size() == 1 && h3[0] == 0)) continue;
        }
        RecOut sub;
        qp_roots_rec(h3, p, htarget - static_cast<int>(mu2), false, budget - 1, sub);
        if (!sub.exact) out.exact = false;
        for (auto& [zr, zv] : sub.roots) {
          (void)zv;
          Rational u = Rational(r) + Rational(p) * zr;
          Rational root = m < 0 ? Rational(u / Rational(pow_int(p, -m)))
                                : Rational(u * Rational(pow_int(p, m)));
          out.roots.emplace_back(root, m);
        }
      }
    }
  }
}

}  // namespace

LocalRootReport local_roots(const UniPoly& f, const Integer& p, int k) {
  if (f.degree() < 1) throw std::invalid_argument("local_roots: degree < 1");
  if (!is_prime(p)) throw std::invalid_argument("local_roots: p not prime");
  if (p > 100000) throw UnsupportedError("local_roots: prime beyond residue scan bound");
  if (k < 1) throw std::invalid_argument("local_roots: k < 1");
  if (gcd_poly(f, derivative(f)).degree() != 0)
    throw std::invalid_argument("local_roots: polynomial not squarefree");

  PrimitivePart pp = primitive_part(f);
  LocalRootReport rep;
  rep.exact = true;

  IntVec F = pp.coeffs;
  bool zero_root = false;
  if (F[0] == 0) {
    zero_root = true;
    F.erase(F.begin());
  }
  for (auto& seg : newton_hull(F, p)) rep.slopes.emplace_back(seg.slope, seg.width);

  int ctval = 0;
  if (pp.content != 0) {
    if (pp.content.get_num() % p == 0 || pp.content.get_den() % p == 0)
      ctval = valuation(pp.content, p);
  }
  int target = std::max(k - ctval, 1);

  if (F.size() > 1) {
    Rational disc = resultant(poly_from_int_coeffs(F), derivative(poly_from_int_coeffs(F)));
    int budget = 2;
    if (disc != 0) budget = std::abs(valuation(disc, p)) + 2;
    RecOut rec;
    qp_roots_rec(F, p, target, true, budget, rec);
    rep.exact = rec.exact;
    for (auto& [root, val] : rec.roots)
      rep.roots.push_back({root, static_cast<int>(val), false});
  }
  if (zero_root) rep.roots.push_back({Rational(0), 0, true});

  std::sort(rep.roots.begin(), rep.roots.end(), [](const LocalRoot& a, const LocalRoot& b) {
    if (a.is_zero != b.is_zero) return b.is_zero;
    if (a.valuation != b.valuation) return a.valuation < b.valuation;
    return a.approx < b.approx;
  });
  return rep;
}

bool residue_field_is_square(const UniPoly& h, const UniPoly& g, const Integer& p) {
  if (p == 2) throw UnsupportedError("residue_field_is_square: p = 2 not supported");
  if (!is_prime(p)) throw std::invalid_argument("residue_field_is_square: p not prime");
  PrimitivePart hp = primitive_part(h);
  ModPoly hbar = mp_reduce(hp.coeffs, p);
  if (mp_degree(hbar) != h.degree())
    throw std::invalid_argument("residue_field_is_square: leading coefficient vanishes mod p");
  hbar = mp_monic(hbar, p);
  std::mt19937_64 rng(12345);
  if (!mp_is_irreducible(hbar, p, rng))
    throw std::invalid_argument("residue_field_is_square: modulus reducible mod p");
  // clear denominators of g by a square
  Integer den = 1;
  for (const Rational& c : g.coeffs())
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  IntVec gi;
  for (const Rational& c : g.coeffs()) {
    Rational scaled = c * den * den;
    gi.push_back(scaled.get_num());
  }
  ModPoly z = mp_divrem(mp_reduce(gi, p), hbar, p).second;
  if (mp_is_zero(z))
    throw std::invalid_argument("residue_field_is_square: non-unit argument");
  int d = mp_degree(hbar);
  Integer q = pow_int(p, d);
  ModPoly w = mp_powmod(z, (q - 1) / 2, hbar, p);
  if (mp_degree(w) != 0) throw std::logic_error("residue_field_is_square: power not scalar");
  if (w[0] == 1) return true;
  if (w[0] == p - 1) return false;
  throw std::logic_error("residue_field_is_square: unexpected power value");
}

}  // namespace dp4
