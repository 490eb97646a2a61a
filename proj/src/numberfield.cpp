#include "dp4/numberfield.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "dp4/factorize.hpp"
#include "dp4/ints.hpp"
#include "dp4/quadform.hpp"

namespace dp4 {

namespace {

UniPoly monic_modulus(const UniPoly& modulus) {
  if (modulus.degree() < 1 || modulus.degree() > 5)
    throw std::invalid_argument("number field: modulus degree must be 1..5");
  return monic(modulus);
}

Rational rational_sqrt(const Rational& r) {
  // Assumes r is a square of a rational.
  Integer num = sqrt(r.get_num());
  Integer den = sqrt(r.get_den());
  return Rational(num) / Rational(den);
}

// --- polynomials over K = Q[T]/(f), used for gcds of small degree ---

using KPoly = std::vector<UniPoly>;  // coefficient of Z^i at index i, reduced

void kp_trim(KPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

KPoly kp_rem(KPoly a, const KPoly& b, const UniPoly& f) {
  kp_trim(a);
  UniPoly inv_lead = nf_inv(b.back(), f);
  while (a.size() >= b.size() && !a.empty()) {
    UniPoly q = nf_mul(a.back(), inv_lead, f);
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i)
      a[shift + i] = nf_sub(a[shift + i], nf_mul(q, b[i], f), f);
    kp_trim(a);
  }
  return a;
}

KPoly kp_gcd(KPoly a, KPoly b, const UniPoly& f) {
  kp_trim(a);
  kp_trim(b);
  while (!b.empty()) {
    KPoly r = kp_rem(a, b, f);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    UniPoly il = nf_inv(a.back(), f);
    for (auto& c : a) c = nf_mul(c, il, f);
  }
  return a;
}

}  // namespace

UniPoly nf_reduce(const UniPoly& a, const UniPoly& modulus) {
  return divrem(a, monic_modulus(modulus)).second;
}

UniPoly nf_add(const UniPoly& a, const UniPoly& b, const UniPoly& modulus) {
  return nf_reduce(a + b, modulus);
}

UniPoly nf_sub(const UniPoly& a, const UniPoly& b, const UniPoly& modulus) {
  return nf_reduce(a - b, modulus);
}

UniPoly nf_mul(const UniPoly& a, const UniPoly& b, const UniPoly& modulus) {
  return nf_reduce(a * b, modulus);
}

UniPoly nf_neg(const UniPoly& a, const UniPoly& modulus) {
  return nf_reduce(-a, modulus);
}

UniPoly nf_inv(const UniPoly& a, const UniPoly& modulus) {
  UniPoly f = monic_modulus(modulus);
  UniPoly r = divrem(a, f).second;
  if (r.is_zero()) throw std::domain_error("nf_inv: zero element");
  XgcdResult x = xgcd_poly(r, f);
  if (x.g.degree() != 0)
    throw std::domain_error("nf_inv: element not invertible (reducible modulus)");
  return divrem(x.u, f).second;
}

UniPoly nf_div(const UniPoly& a, const UniPoly& b, const UniPoly& modulus) {
  return nf_mul(a, nf_inv(b, modulus), modulus);
}

UniPoly nf_charpoly(const UniPoly& x, const UniPoly& modulus) {
  UniPoly f = monic_modulus(modulus);
  const int n = f.degree();
  UniPoly cur = divrem(x, f).second;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, Rational(0)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= cur.degree(); ++i) a[i][j] = cur.coeff(i);
    cur = divrem(cur * UniPoly::monomial(1), f).second;
  }
  std::vector<Rational> pts, vals;
  for (int k = 0; k <= n; ++k) {
    std::vector<std::vector<Rational>> zim(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) zim[i][j] = (i == j ? Rational(k) : Rational(0)) - a[i][j];
    pts.emplace_back(k);
    vals.push_back(rational_det(std::move(zim)));
  }
  return interpolate_poly(pts, vals);
}

Rational nf_norm(const UniPoly& x, const UniPoly& modulus) {
  UniPoly c = nf_charpoly(x, modulus);
  const int n = c.degree();
  Rational c0 = c.coeff(0);
  return (n % 2 == 0) ? c0 : -c0;
}

Rational nf_trace(const UniPoly& x, const UniPoly& modulus) {
  UniPoly c = nf_charpoly(x, modulus);
  return -c.coeff(c.degree() - 1);
}

std::optional<UniPoly> nf_sqrt(const UniPoly& x0, const UniPoly& modulus) {
  UniPoly f = monic_modulus(modulus);
  const int n = f.degree();
  UniPoly x = divrem(x0, f).second;
  if (x.is_zero()) return UniPoly{};
  if (n == 1) {
    Rational c = x.coeff(0);
    if (!is_rational_square(c)) return std::nullopt;
    return UniPoly::constant(rational_sqrt(c));
  }
  if (!is_irreducible_rational(f))
    throw std::invalid_argument("nf_sqrt: modulus must be irreducible");

  auto verified = [&](const UniPoly& y) -> std::optional<UniPoly> {
    if (nf_mul(y, y, f) == x) return y;
    return std::nullopt;
  };

  if (n == 2) {
    // f = T^2 + b T + c with root theta; y = s + t theta, y^2 = x = u + v theta
    // splits into s^2 - c t^2 = u and 2 s t - b t^2 = v.
    Rational b = f.coeff(1), c = f.coeff(0);
    Rational u = x.coeff(0);
    Rational v = x.degree() >= 1 ? x.coeff(1) : Rational(0);
    if (v == 0) {
      if (is_rational_square(u)) return UniPoly::constant(rational_sqrt(u));
      // t != 0 forces s = b t / 2 and t^2 (b^2/4 - c) = u.
      Rational q = u / (b * b / Rational(4) - c);
      if (is_rational_square(q)) {
        Rational t = rational_sqrt(q);
        auto y = verified(UniPoly(std::vector<Rational>{b * t / Rational(2), t}));
        if (y) return y;
      }
      return std::nullopt;
    }
    // t != 0; with sigma = s/t: v sigma^2 - 2u sigma + (u b - v c) = 0.
    Rational disc = Rational(4) * (u * u - u * v * b + v * v * c);
    if (!is_rational_square(disc)) return std::nullopt;
    Rational sq = rational_sqrt(disc);
    for (int pick = 0; pick < 2; ++pick) {
      Rational sigma = (Rational(2) * u + (pick == 0 ? sq : -sq)) / (Rational(2) * v);
      Rational den = Rational(2) * sigma - b;
      if (den == 0) continue;
      Rational t2 = v / den;
      if (!is_rational_square(t2)) continue;
      Rational t = rational_sqrt(t2);
      auto y = verified(UniPoly(std::vector<Rational>{sigma * t, t}));
      if (y) return y;
    }
    return std::nullopt;
  }

  // Degree >= 3: any square root y of x is a root of N(Z) = charpoly_x(Z^2);
  // scan rational irreducible factors h of N and compute gcd_K(h, Z^2 - x).
  if (2 * n > 8) throw UnsupportedError("nf_sqrt: modulus degree 5 unsupported");
  UniPoly cp = nf_charpoly(x, f);
  std::vector<Rational> nc(2 * n + 1, Rational(0));
  for (int i = 0; i <= cp.degree(); ++i) nc[2 * i] = cp.coeff(i);
  UniPoly bigN{nc};
  RationalFactorization fac = factor_poly_rational(bigN);
  bool saw_quadratic = false;
  for (const auto& fh : fac.factors) {
    const UniPoly& h = fh.first;
    if (h.degree() < 1) continue;
    KPoly hk;
    for (int i = 0; i <= h.degree(); ++i) hk.push_back(UniPoly::constant(h.coeff(i)));
    KPoly zsq{nf_neg(x, f), UniPoly{}, UniPoly::constant(Rational(1))};
    KPoly g = kp_gcd(hk, zsq, f);
    if (static_cast<int>(g.size()) - 1 == 1) {
      auto y = verified(nf_neg(g[0], f));
      if (y) return y;
    } else if (static_cast<int>(g.size()) - 1 == 2) {
      saw_quadratic = true;
    }
  }
  if (n % 2 == 0 && saw_quadratic)
    throw UnsupportedError("nf_sqrt: square class undecided in even-degree field");
  // For odd-degree fields the irreducible factor scan is complete: a minimal
  // polynomial of odd degree cannot contain both y and -y among its roots, so
  // a square root always surfaces as a linear gcd.
  return std::nullopt;
}

}  // namespace dp4
