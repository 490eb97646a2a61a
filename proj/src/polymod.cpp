#include "dp4/polymod.hpp"

#include <algorithm>

namespace dp4 {

namespace {

Integer mod_norm(const Integer& x, const Integer& m) {
  Integer r = x % m;
  if (r < 0) r += m;
  return r;
}

Integer inv_mod(const Integer& x, const Integer& m) {
  Integer r;
  if (!mpz_invert(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t()))
    throw std::invalid_argument("inv_mod: non-invertible element");
  return r;
}

}  // namespace

ModPoly mp_reduce(const std::vector<Integer>& f, const Integer& m) {
  ModPoly out(f.size());
  for (size_t i = 0; i < f.size(); ++i) out[i] = mod_norm(f[i], m);
  mp_trim(out);
  return out;
}

void mp_trim(ModPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int mp_degree(const ModPoly& f) { return static_cast<int>(f.size()) - 1; }

bool mp_is_zero(const ModPoly& f) { return f.empty(); }

ModPoly mp_add(const ModPoly& a, const ModPoly& b, const Integer& m) {
  ModPoly out(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  for (auto& x : out) x = mod_norm(x, m);
  mp_trim(out);
  return out;
}

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, const Integer& m) {
  ModPoly out(std::max(a.size(), b.size()), Integer(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  for (auto& x : out) x = mod_norm(x, m);
  mp_trim(out);
  return out;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ModPoly out(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  for (auto& x : out) x = mod_norm(x, m);
  mp_trim(out);
  return out;
}

ModPoly mp_scalar(const Integer& s, const ModPoly& a, const Integer& m) {
  ModPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = mod_norm(s * a[i], m);
  mp_trim(out);
  return out;
}

std::pair<ModPoly, ModPoly> mp_divrem(const ModPoly& a, const ModPoly& b, const Integer& m) {
  if (b.empty()) throw std::invalid_argument("mp_divrem: zero divisor");
  int db = mp_degree(b);
  ModPoly r = a;
  if (mp_degree(a) < db) return {{}, r};
  Integer linv = inv_mod(b.back(), m);
  ModPoly q(a.size() - b.size() + 1, Integer(0));
  for (int i = mp_degree(a); i >= db; --i) {
    if (r[i] == 0) continue;
    Integer f = mod_norm(r[i] * linv, m);
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] = mod_norm(r[i - db + j] - f * b[j], m);
  }
  mp_trim(q);
  mp_trim(r);
  return {q, r};
}

ModPoly mp_monic(const ModPoly& f, const Integer& m) {
  if (f.empty()) return f;
  if (f.back() == 1) return f;
  return mp_scalar(inv_mod(f.back(), m), f, m);
}

ModPoly mp_gcd(const ModPoly& a, const ModPoly& b, const Integer& p) {
  ModPoly x = a, y = b;
  while (!y.empty()) {
    ModPoly r = mp_divrem(x, y, p).second;
    x = y;
    y = r;
  }
  if (x.empty()) return x;
  return mp_monic(x, p);
}

ModPoly mp_powmod(const ModPoly& base, const Integer& e, const ModPoly& f, const Integer& m) {
  if (e < 0) throw std::invalid_argument("mp_powmod: negative exponent");
  ModPoly result{Integer(1)};
  ModPoly b = mp_divrem(base, f, m).second;
  Integer n = e;
  while (n > 0) {
    if (mpz_odd_p(n.get_mpz_t())) result = mp_divrem(mp_mul(result, b, m), f, m).second;
    b = mp_divrem(mp_mul(b, b, m), f, m).second;
    n >>= 1;
  }
  return result;
}

Integer mp_eval(const ModPoly& f, const Integer& x, const Integer& m) {
  Integer acc = 0;
  for (int i = mp_degree(f); i >= 0; --i) acc = mod_norm(acc * x + f[i], m);
  return acc;
}

ModPoly mp_derivative(const ModPoly& f, const Integer& m) {
  if (f.size() <= 1) return {};
  ModPoly out(f.size() - 1);
  for (size_t i = 1; i < f.size(); ++i) out[i - 1] = mod_norm(Integer(i) * f[i], m);
  mp_trim(out);
  return out;
}

namespace {

// f = h(x^p) with h_j = f_{jp} (Frobenius on F_p fixes coefficients).
ModPoly pth_root(const ModPoly& f, const Integer& p) {
  unsigned long pl = p.get_ui();
  ModPoly h;
  for (size_t i = 0; i < f.size(); i += pl) h.push_back(f[i]);
  mp_trim(h);
  return h;
}

std::vector<std::pair<ModPoly, int>> squarefree_mod(const ModPoly& fin, const Integer& p) {
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly f = mp_monic(fin, p);
  if (mp_degree(f) <= 0) return out;
  ModPoly fp = mp_derivative(f, p);
  if (fp.empty()) {
    for (auto& [g, e] : squarefree_mod(pth_root(f, p), p))
      out.emplace_back(g, e * static_cast<int>(p.get_ui()));
    return out;
  }
  ModPoly c = mp_gcd(f, fp, p);
  ModPoly w = mp_divrem(f, c, p).first;
  int i = 1;
  while (mp_degree(w) > 0) {
    ModPoly y = mp_gcd(w, c, p);
    ModPoly z = mp_divrem(w, y, p).first;
    if (mp_degree(z) > 0) out.emplace_back(mp_monic(z, p), i);
    ++i;
    w = y;
    c = mp_divrem(c, y, p).first;
  }
  if (mp_degree(c) > 0) {
    for (auto& [g, e] : squarefree_mod(pth_root(c, p), p))
      out.emplace_back(g, e * static_cast<int>(p.get_ui()));
  }
  return out;
}

ModPoly random_poly(int max_deg, const Integer& p, std::mt19937_64& rng) {
  ModPoly out(max_deg + 1);
  for (auto& c : out) {
    Integer v = 0;
    // build a uniform-ish value from 64-bit draws
    int bits = static_cast<int>(mpz_sizeinbase(p.get_mpz_t(), 2));
    for (int b = 0; b <= bits; b += 60) {
      v <<= 60;
      v += Integer(static_cast<unsigned long>(rng() & ((1ull << 60) - 1)));
    }
    c = v % p;
  }
  mp_trim(out);
  return out;
}

// Equal-degree factorization of a monic squarefree product of degree-d
// irreducibles (Cantor-Zassenhaus, odd p).
void edf(const ModPoly& f, int d, const Integer& p, std::mt19937_64& rng,
         std::vector<ModPoly>& out) {
  int n = mp_degree(f);
  if (n == d) {
    out.push_back(f);
    return;
  }
  if (p == 2) throw UnsupportedError("edf: p = 2 not supported");
  Integer q = 1;
  for (int i = 0; i < d; ++i) q *= p;
  Integer e = (q - 1) / 2;
  while (true) {
    ModPoly a = random_poly(n - 1, p, rng);
    if (mp_degree(a) < 1) continue;
    ModPoly g = mp_gcd(a, f, p);
    if (mp_degree(g) > 0 && mp_degree(g) < n) {
      edf(g, d, p, rng, out);
      edf(mp_divrem(f, g, p).first, d, p, rng, out);
      return;
    }
    ModPoly b = mp_powmod(a, e, f, p);
    ModPoly b1 = mp_sub(b, ModPoly{Integer(1)}, p);
    g = mp_gcd(b1, f, p);
    if (mp_degree(g) > 0 && mp_degree(g) < n) {
      edf(g, d, p, rng, out);
      edf(mp_divrem(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

// Distinct-degree factorization of monic squarefree f.
std::vector<std::pair<ModPoly, int>> ddf(const ModPoly& fin, const Integer& p) {
  std::vector<std::pair<ModPoly, int>> out;  // (product of irreducibles, degree)
  ModPoly f = fin;
  const ModPoly x{Integer(0), Integer(1)};
  ModPoly h = x;
  int d = 0;
  while (2 * (d + 1) <= mp_degree(f)) {
    ++d;
    h = mp_powmod(h, p, f, p);
    ModPoly g = mp_gcd(mp_sub(h, x, p), f, p);
    if (mp_degree(g) > 0) {
      out.emplace_back(g, d);
      f = mp_divrem(f, g, p).first;
      if (mp_degree(f) <= 0) return out;
      h = mp_divrem(h, f, p).second;
    }
  }
  if (mp_degree(f) > 0) out.emplace_back(f, mp_degree(f));
  return out;
}

bool modpoly_less(const ModPoly& a, const ModPoly& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

}  // namespace

std::vector<std::pair<ModPoly, int>> mp_factor(const ModPoly& fin, const Integer& p,
                                               std::mt19937_64& rng) {
  ModPoly f = mp_reduce(fin, p);
  if (f.empty()) throw std::invalid_argument("mp_factor: zero polynomial");
  std::vector<std::pair<ModPoly, int>> out;
  for (auto& [sq, mult] : squarefree_mod(f, p)) {
    for (auto& [prod, d] : ddf(sq, p)) {
      if (mp_degree(prod) == d) {
        out.emplace_back(prod, mult);
        continue;
      }
      std::vector<ModPoly> irr;
      if (d == 1 && p < 100000) {
        // direct root scan keeps small-prime behavior deterministic
        long pl = p.get_si();
        for (long r = 0; r < pl; ++r)
          if (mp_eval(prod, Integer(r), p) == 0)
            irr.push_back(ModPoly{mod_norm(Integer(-r), p), Integer(1)});
      } else {
        edf(prod, d, p, rng, irr);
      }
      for (auto& g : irr) out.emplace_back(g, mult);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return modpoly_less(a.first, b.first); });
  return out;
}

bool mp_is_irreducible(const ModPoly& f, const Integer& p, std::mt19937_64& rng) {
  ModPoly g = mp_reduce(f, p);
  if (mp_degree(g) <= 0) return false;
  auto fac = mp_factor(g, p, rng);
  return fac.size() == 1 && fac[0].second == 1;
}

std::vector<Integer> mp_roots(const ModPoly& f, const Integer& p, std::mt19937_64& rng) {
  ModPoly g = mp_reduce(f, p);
  if (g.empty()) throw std::invalid_argument("mp_roots: zero polynomial");
  std::vector<Integer> roots;
  if (p < 100000) {
    long pl = p.get_si();
    for (long r = 0; r < pl; ++r)
      if (mp_eval(g, Integer(r), p) == 0) roots.emplace_back(r);
    return roots;
  }
  for (auto& [h, mult] : mp_factor(g, p, rng)) {
    (void)mult;
    if (mp_degree(h) == 1) roots.push_back(mod_norm(-h[0], p));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace dp4
