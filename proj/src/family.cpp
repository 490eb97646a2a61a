#include "dp4/family.hpp"

#include <random>
#include <stdexcept>

#include "dp4/brauer.hpp"
#include "dp4/local.hpp"
#include "dp4/polymod.hpp"

namespace dp4 {

namespace {

Mat zero5() { return Mat(5, std::vector<Rational>(5, Rational(0))); }

UniPoly modpoly_to_unipoly(const ModPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.size());
  for (const Integer& x : f) c.emplace_back(x);
  return UniPoly(std::move(c));
}

ModPoly unipoly_to_modpoly(const UniPoly& f, const Integer& p) {
  std::vector<Integer> v;
  v.reserve(f.coeffs().size());
  for (const Rational& c : f.coeffs()) {
    Integer den = c.get_den();
    Integer inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
      throw std::invalid_argument("reduction mod p: denominator not invertible");
    Integer num = c.get_num() % p;
    v.push_back(((num * inv) % p + p) % p);
  }
  return mp_reduce(v, p);
}

}  // namespace

SurfaceXd xd_forms(const Integer& d) {
  if (d == 0) throw std::invalid_argument("xd_forms: d must be nonzero");
  Rational dr{d};
  Mat m0 = zero5();
  m0[0][0] = dr;
  m0[1][1] = Rational(-3) * dr;
  m0[2][2] = 6;
  m0[2][3] = m0[3][2] = 3;
  m0[3][4] = m0[4][3] = -3;
  Mat mi = zero5();
  mi[0][1] = mi[1][0] = -dr;
  mi[2][2] = 1;
  mi[2][4] = mi[4][2] = -1;
  mi[3][3] = -3;
  mi[4][4] = -1;
  return {d, make_form(std::move(m0)), make_form(std::move(mi))};
}

UniPoly family_f2() { return UniPoly::from_ints({3, 0, 1}); }
UniPoly family_f3() { return UniPoly::from_ints({-9, 3, 3, 1}); }

ConditionIIReport thm_d_condition_ii(const Integer& d) {
  if (d == 0 || gcd(d, Integer(6)) != 1)
    throw std::invalid_argument("thm_d_condition_ii: need nonzero d with gcd(d, 6) = 1");
  UniPoly f3 = family_f3();
  Rational disc = discriminant(f3);
  Integer disc_num = disc.get_num();  // integer: f3 is monic with integer coeffs
  ConditionIIReport rep;
  for (const auto& pe : factor_integer(d)) {
    const Integer& v = pe.first;
    ConditionIIPrime entry;
    entry.v = v;
    if (v == 2 || v == 3)
      throw UnsupportedError("condition (ii): place " + to_string(v) + " unsupported");
    if (disc_num % v == 0) {
      if (v != 5)
        throw UnsupportedError("condition (ii): ramified prime " + to_string(v) +
                               " unsupported");
      // f3(T - 1) = T^3 - 10 is Eisenstein at 5: the extension is totally
      // ramified, the root is a unit congruent to -1, and a unit of an odd
      // ramified extension is a square iff its residue is one in F_5.
      UniPoly shifted = shift_poly(f3, Rational(-1));
      if (shifted != UniPoly::from_ints({-10, 0, 0, 1}))
        throw UnsupportedError("condition (ii): unexpected ramified shape at 5");
      entry.method = "eisenstein-shift";
      entry.holds = legendre(Integer(-1), v) == 1;
    } else {
      entry.method = "unramified-residue-field";
      std::mt19937_64 rng(2024);
      ModPoly fm = unipoly_to_modpoly(f3, v);
      bool ok = true;
      for (const auto& hm : mp_factor(fm, v, rng)) {
        if (hm.second > 1)
          throw std::logic_error("condition (ii): repeated factor at unramified prime");
        if (!residue_field_is_square(modpoly_to_unipoly(hm.first), UniPoly::monomial(1), v))
          ok = false;
      }
      entry.holds = ok;
    }
    if (!entry.holds) rep.all_hold = false;
    rep.primes.push_back(std::move(entry));
  }
  return rep;
}

LocalPointResult local_points_dp4(const SurfaceXd& x, const Integer& p, int max_level) {
  if (max_level < 2)
    throw std::invalid_argument("local_points_dp4: max_level must be >= 2");
  LiftResult r = lift_search({x.q0, x.qinf}, p, max_level);
  LocalPointResult out;
  out.status = r.status;
  out.p = p;
  out.level = r.level;
  out.witness = r.witness;
  out.minor_valuation = r.minor_valuation;
  return out;
}

std::vector<Integer> qualifying_primes(long prime_bound) {
  std::vector<Integer> out;
  UniPoly f3 = family_f3();
  for (const Integer& p : primes_up_to(prime_bound)) {
    if (p % 12 != 1) continue;
    std::mt19937_64 rng(7);
    std::vector<Integer> roots = mp_roots(unipoly_to_modpoly(f3, p), p, rng);
    if (roots.size() != 3) continue;
    bool all_square = true;
    for (const Integer& r : roots)
      if (r == 0 || legendre(r, p) != 1) {
        all_square = false;
        break;
      }
    if (all_square) out.push_back(p);
  }
  return out;
}

std::vector<Integer> enumerate_valid_d(long prime_bound, int max_factors) {
  std::vector<Integer> qs = qualifying_primes(prime_bound);
  std::vector<Integer> out;
  std::vector<std::vector<size_t>> subsets{{}};
  // subsets of size 1..max_factors in (size, lexicographic) order
  for (int s = 1; s <= max_factors; ++s) {
    std::vector<size_t> idx(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    if (static_cast<size_t>(s) > qs.size()) break;
    while (true) {
      subsets.push_back(idx);
      int pos = s - 1;
      while (pos >= 0 && idx[pos] == qs.size() - (s - pos)) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  for (const auto& subset : subsets) {
    Integer d(-7);
    for (size_t i : subset) d *= qs[i];
    CertifyResult c = certify_obstruction(d);
    if (c.ok()) out.push_back(d);
  }
  return out;
}

bool nonisomorphic(const Integer& d, const Integer& dprime) {
  if (d == 0 || dprime == 0)
    throw std::invalid_argument("nonisomorphic: parameters must be nonzero");
  Rational prod = Rational(d) * Rational(dprime);
  return !is_rational_square(prod) && !is_rational_square(Rational(-3) * prod);
}

}  // namespace dp4
