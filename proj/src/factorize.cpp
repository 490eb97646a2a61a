#include "dp4/factorize.hpp"

#include <algorithm>
#include <cmath>

#include "dp4/polymod.hpp"

namespace dp4 {

namespace {

Integer sym_rep(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  if (2 * r > m) r -= m;
  return r;
}

ModPoly sym_reduce(const ModPoly& f, const Integer& m) {
  ModPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = sym_rep(f[i], m);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// One linear Hensel step for f == g*h (mod p^j) -> (mod p^(j+1)), with g
// monic and t*h == 1 (mod p, g); the g-cofactor is recovered by exact
// division instead of a second Bezout multiplier.
struct HenselPair {
  ModPoly g, h;
};

HenselPair hensel_step(const ModPoly& f, ModPoly g, ModPoly h, const ModPoly& t,
                       const Integer& p, const Integer& pj, const Integer& pj1) {
  // e = (f - g h) / p^j
  ModPoly gh = mp_mul(g, h, pj1);
  ModPoly e(std::max(f.size(), gh.size()), Integer(0));
  for (size_t i = 0; i < e.size(); ++i) {
    Integer fi = i < f.size() ? f[i] : Integer(0);
    Integer gi = i < gh.size() ? gh[i] : Integer(0);
    Integer d = (fi - gi) % pj1;
    if (d < 0) d += pj1;
    e[i] = d / pj;  // exact: f == gh mod p^j
  }
  mp_trim(e);
  ModPoly emod = mp_reduce(e, p);
  // u = t e mod g, w = (e - u h) / g  (all mod p), then update.
  ModPoly u = mp_divrem(mp_mul(t, emod, p), mp_reduce(g, p), p).second;
  ModPoly uh = mp_mul(u, mp_reduce(h, p), p);
  ModPoly num = mp_sub(emod, uh, p);
  auto [w, rem] = mp_divrem(num, mp_reduce(g, p), p);
  if (!rem.empty()) throw std::logic_error("hensel_step: division not exact");
  ModPoly gnew = g, hnew = h;
  gnew.resize(std::max(g.size(), u.size() + 0), Integer(0));
  for (size_t i = 0; i < u.size(); ++i) gnew[i] = (gnew[i] + pj * u[i]) % pj1;
  hnew.resize(std::max(h.size(), w.size() + 0), Integer(0));
  for (size_t i = 0; i < w.size(); ++i) hnew[i] = (hnew[i] + pj * w[i]) % pj1;
  mp_trim(gnew);
  mp_trim(hnew);
  return {gnew, hnew};
}

// Lifts the factorization f == lc * prod(factors) from mod p to mod p^k.
// Input factors are monic mod p and pairwise coprime; output factors are
// monic mod p^k with the same reductions.
std::vector<ModPoly> hensel_lift_list(const ModPoly& f, std::vector<ModPoly> factors,
                                      const Integer& p, int k) {
  if (factors.size() == 1) {
    ModPoly out = f;  // the factor is f normalized monic mod p^k
    Integer pk = pow_int(p, k);
    return {mp_monic(mp_reduce(out, pk), pk)};
  }
  // split list in two halves, pair-lift, recurse
  size_t half = factors.size() / 2;
  ModPoly g{Integer(1)};
  for (size_t i = 0; i < half; ++i) g = mp_mul(g, factors[i], p);
  ModPoly h{f.back() % p};
  for (size_t i = half; i < factors.size(); ++i) h = mp_mul(h, factors[i], p);
  // Bezout s g + t h == 1 mod p
  ModPoly r0 = g, r1 = h;
  ModPoly s0{Integer(1)}, s1{}, t0{}, t1{Integer(1)};
  while (!r1.empty()) {
    auto [q, r] = mp_divrem(r0, r1, p);
    ModPoly s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    ModPoly t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    r0 = r1; r1 = r;
    s0 = s1; s1 = s2;
    t0 = t1; t1 = t2;
  }
  if (mp_degree(r0) != 0) throw std::logic_error("hensel_lift_list: factors not coprime");
  Integer c = r0[0];
  Integer cinv;
  mpz_invert(cinv.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
  ModPoly t = mp_scalar(cinv, t0, p);
  // lift the pair (g, h) level by level
  Integer pj = p, pj1 = p * p;
  ModPoly G = g, H = h;
  for (int j = 1; j < k; ++j) {
    auto pr = hensel_step(f, G, H, t, p, pj, pj1);
    G = pr.g;
    H = pr.h;
    pj = pj1;
    pj1 *= p;
  }
  // recurse on both halves against their lifted products
  std::vector<ModPoly> left(factors.begin(), factors.begin() + half);
  std::vector<ModPoly> right(factors.begin() + half, factors.end());
  std::vector<ModPoly> out = hensel_lift_list(G, left, p, k);
  std::vector<ModPoly> out2 = hensel_lift_list(H, right, p, k);
  out.insert(out.end(), out2.begin(), out2.end());
  return out;
}

// Mignotte-style bound: any integer factor of f has coefficients bounded by
// 2^n * l2norm(f); recombination also multiplies by |lc|.
Integer coefficient_bound(const std::vector<Integer>& f) {
  Integer sq = 0;
  for (const Integer& c : f) sq += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), sq.get_mpz_t());
  root += 1;
  int n = static_cast<int>(f.size()) - 1;
  return (root << n) * abs(f.back());
}

bool int_poly_divides(const std::vector<Integer>& d, const std::vector<Integer>& f) {
  // exact division test in Z[x]
  if (d.empty()) return false;
  std::vector<Integer> r = f;
  int dd = static_cast<int>(d.size()) - 1;
  int df = static_cast<int>(r.size()) - 1;
  if (df < dd) return false;
  for (int i = df; i >= dd; --i) {
    if (r[i] == 0) continue;
    if (r[i] % d[dd] != 0) return false;
    Integer q = r[i] / d[dd];
    for (int j = 0; j <= dd; ++j) r[i - dd + j] -= q * d[j];
  }
  for (const Integer& c : r)
    if (c != 0) return false;
  return true;
}

std::vector<Integer> make_primitive(std::vector<Integer> v) {
  Integer g = 0;
  for (const Integer& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return v;
  if (v.back() < 0) g = -g;
  for (auto& c : v) c /= g;
  return v;
}

// Zassenhaus factorization of a primitive squarefree integer polynomial
// with positive leading coefficient; returns primitive irreducible factors.
std::vector<std::vector<Integer>> zassenhaus(const std::vector<Integer>& f,
                                             std::mt19937_64& rng) {
  int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  // good prime: odd, not dividing lc, squarefree reduction
  Integer p = 0;
  for (long cand : small_primes()) {
    if (cand == 2) continue;
    Integer q(cand);
    if (f.back() % q == 0) continue;
    ModPoly fm = mp_reduce(f, q);
    if (mp_degree(fm) != n) continue;
    ModPoly g = mp_gcd(fm, mp_derivative(fm, q), q);
    if (mp_degree(g) == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) throw std::logic_error("zassenhaus: no good prime found");

  ModPoly fm = mp_reduce(f, p);
  auto modular = mp_factor(fm, p, rng);
  std::vector<ModPoly> parts;
  for (auto& [g, e] : modular) {
    if (e != 1) throw std::logic_error("zassenhaus: non-squarefree mod good prime");
    parts.push_back(g);
  }
  if (parts.size() == 1) return {f};

  Integer bound = 2 * coefficient_bound(f) + 1;
  int k = 1;
  Integer pk = p;
  while (pk < bound) {
    pk *= p;
    ++k;
  }
  std::vector<ModPoly> lifted = hensel_lift_list(mp_reduce(f, pk), parts, p, k);

  // subset recombination
  std::vector<std::vector<Integer>> out;
  std::vector<Integer> rem = f;
  std::vector<int> live(lifted.size());
  for (size_t i = 0; i < live.size(); ++i) live[i] = static_cast<int>(i);
  int s = 1;
  while (2 * s <= static_cast<int>(live.size())) {
    bool found = false;
    std::vector<int> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ModPoly prod{rem.back() % pk};
      for (int i : idx) prod = mp_mul(prod, lifted[live[i]], pk);
      std::vector<Integer> cand = sym_reduce(prod, pk);
      cand = make_primitive(cand);
      if (!cand.empty() && int_poly_divides(cand, rem)) {
        out.push_back(cand);
        // remove used modular factors and divide rem
        std::vector<int> nl;
        for (size_t i = 0; i < live.size(); ++i)
          if (std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end())
            nl.push_back(live[i]);
        live = nl;
        std::vector<Integer> q(rem.size() - cand.size() + 1, Integer(0));
        {
          std::vector<Integer> r = rem;
          int dd = static_cast<int>(cand.size()) - 1;
          for (int i = static_cast<int>(r.size()) - 1; i >= dd; --i) {
            if (r[i] == 0) continue;
            Integer qq = r[i] / cand[dd];
            q[i - dd] = qq;
            for (int j = 0; j <= dd; ++j) r[i - dd + j] -= qq * cand[j];
          }
        }
        while (q.size() > 1 && q.back() == 0) q.pop_back();
        rem = q;
        found = true;
        break;
      }
      // next subset of current size over live indices
      int i = s - 1;
      while (i >= 0 && idx[i] == static_cast<int>(live.size()) - s + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (static_cast<int>(rem.size()) - 1 > 0) out.push_back(make_primitive(rem));
  return out;
}

bool unipoly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

}  // namespace

RationalFactorization factor_poly_rational(const UniPoly& f, unsigned long seed) {
  if (f.is_zero()) throw std::invalid_argument("factor_poly_rational: zero polynomial");
  if (f.degree() > 8) throw UnsupportedError("factor_poly_rational: degree > 8");
  RationalFactorization out;
  if (f.degree() == 0) {
    out.content = f.coeff(0);
    return out;
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  PrimitivePart pp = primitive_part(f);
  out.content = pp.content;

  // strip powers of T
  std::vector<Integer> base = pp.coeffs;
  int tpow = 0;
  while (base.size() > 1 && base[0] == 0) {
    base.erase(base.begin());
    ++tpow;
  }
  if (tpow > 0) out.factors.emplace_back(UniPoly::from_ints({0, 1}), tpow);

  UniPoly g0 = poly_from_int_coeffs(base);
  for (auto& [sq, mult] : squarefree_decomposition(g0)) {
    PrimitivePart sp = primitive_part(sq);
    for (auto& fac : zassenhaus(sp.coeffs, rng))
      out.factors.emplace_back(poly_from_int_coeffs(fac), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return unipoly_less(a.first, b.first); });

  // content bookkeeping: f == content * prod(primitive factors^mult)
  UniPoly prod = UniPoly::constant(1);
  for (auto& [fac, mult] : out.factors)
    for (int i = 0; i < mult; ++i) prod = prod * fac;
  out.content = f.leading() / prod.leading();
  return out;
}

bool is_irreducible_rational(const UniPoly& f, unsigned long seed) {
  if (f.degree() < 1) return false;
  auto fac = factor_poly_rational(f, seed);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::vector<Rational> rational_roots(const UniPoly& f, unsigned long seed) {
  std::vector<Rational> out;
  for (auto& [fac, mult] : factor_poly_rational(f, seed).factors) {
    (void)mult;
    if (fac.degree() == 1) out.push_back(-fac.coeff(0) / fac.coeff(1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dp4
