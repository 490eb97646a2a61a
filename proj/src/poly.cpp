#include "dp4/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace dp4 {

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly UniPoly::from_ints(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long x : coeffs) v.emplace_back(x);
  return UniPoly(std::move(v));
}

UniPoly UniPoly::monomial(int deg, const Rational& coeff) {
  std::vector<Rational> v(deg + 1, Rational(0));
  v[deg] = coeff;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::constant(const Rational& v) { return UniPoly({v}); }

const Rational& UniPoly::coeff(int i) const {
  static const Rational zero(0);
  if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
  return c_[i];
}

const Rational& UniPoly::leading() const {
  if (c_.empty()) throw std::invalid_argument("leading of zero polynomial");
  return c_.back();
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& a = c_[i];
    if (a == 0) continue;
    Rational mag = abs(a);
    if (first) {
      if (a < 0) os << "-";
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
    }
    bool unit = (mag == 1);
    if (i == 0 || !unit) os << to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) v[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) v[i] += b.coeffs()[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs().size(), b.coeffs().size()), Rational(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i) v[i] += a.coeffs()[i];
  for (size_t i = 0; i < b.coeffs().size(); ++i) v[i] -= b.coeffs()[i];
  return UniPoly(std::move(v));
}

UniPoly operator-(const UniPoly& a) {
  std::vector<Rational> v = a.coeffs();
  for (auto& x : v) x = -x;
  return UniPoly(std::move(v));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> v(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
  for (size_t i = 0; i < a.coeffs().size(); ++i)
    for (size_t j = 0; j < b.coeffs().size(); ++j) v[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& s, const UniPoly& a) {
  std::vector<Rational> v = a.coeffs();
  for (auto& x : v) x *= s;
  return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> divrem(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divrem: division by zero polynomial");
  std::vector<Rational> r = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {UniPoly(), a};
  std::vector<Rational> q(a.degree() - db + 1, Rational(0));
  const Rational& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    if (r[i] == 0) continue;
    Rational f = r[i] / lb;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeffs()[j];
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

bool divides(const UniPoly& b, const UniPoly& a) {
  if (a.is_zero()) return true;
  if (b.is_zero()) return false;
  return divrem(a, b).second.is_zero();
}

UniPoly monic(const UniPoly& f) {
  if (f.is_zero()) return f;
  return (Rational(1) / f.leading()) * f;
}

UniPoly gcd_poly(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divrem(x, y).second;
    x = y;
    y = monic(r);  // normalize to tame coefficient growth
  }
  return monic(x);
}

XgcdResult xgcd_poly(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b;
  UniPoly u0 = UniPoly::constant(1), u1;
  UniPoly v0, v1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = r1;
    r1 = r;
    UniPoly u2 = u0 - q * u1, v2 = v0 - q * v1;
    u0 = u1;
    u1 = u2;
    v0 = v1;
    v1 = v2;
  }
  if (r0.is_zero()) return {r0, u0, v0};
  Rational s = Rational(1) / r0.leading();
  return {s * r0, s * u0, s * v0};
}

UniPoly derivative(const UniPoly& f) {
  if (f.degree() <= 0) return UniPoly();
  std::vector<Rational> v(f.degree());
  for (int i = 1; i <= f.degree(); ++i) v[i - 1] = Rational(i) * f.coeff(i);
  return UniPoly(std::move(v));
}

Rational eval_poly(const UniPoly& f, const Rational& x) {
  Rational acc(0);
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + f.coeff(i);
  return acc;
}

Rational eval_homogeneous(const UniPoly& f, const Rational& a, const Rational& b,
                          int top_degree) {
  if (top_degree < f.degree())
    throw std::invalid_argument("eval_homogeneous: top_degree below degree");
  Rational acc(0);
  // sum f_i a^i b^(top_degree - i)
  for (int i = 0; i <= f.degree(); ++i) {
    Rational term = f.coeff(i);
    for (int k = 0; k < i; ++k) term *= a;
    for (int k = 0; k < top_degree - i; ++k) term *= b;
    acc += term;
  }
  return acc;
}

UniPoly shift_poly(const UniPoly& f, const Rational& c) {
  // Horner on f viewed at T + c.
  UniPoly acc;
  UniPoly lin({c, Rational(1)});
  for (int i = f.degree(); i >= 0; --i) acc = acc * lin + UniPoly::constant(f.coeff(i));
  return acc;
}

UniPoly scale_arg_poly(const UniPoly& f, const Rational& c) {
  std::vector<Rational> v = f.coeffs();
  Rational pw(1);
  for (size_t i = 0; i < v.size(); ++i) {
    v[i] *= pw;
    pw *= c;
  }
  return UniPoly(std::move(v));
}

PrimitivePart primitive_part(const UniPoly& f) {
  if (f.is_zero()) return {Rational(0), {}};
  Integer den_lcm = 1;
  for (const Rational& a : f.coeffs())
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), a.get_den().get_mpz_t());
  std::vector<Integer> ints(f.coeffs().size());
  Integer g = 0;
  for (size_t i = 0; i < ints.size(); ++i) {
    Rational scaled = f.coeffs()[i] * den_lcm;
    ints[i] = scaled.get_num();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[i].get_mpz_t());
  }
  if (ints.back() < 0) g = -g;
  for (auto& x : ints) x /= g;
  return {Rational(g) / den_lcm, std::move(ints)};
}

UniPoly poly_from_int_coeffs(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const Integer& x : coeffs) v.emplace_back(x);
  return UniPoly(std::move(v));
}

UniPoly squarefree_radical(const UniPoly& f) {
  if (f.degree() <= 0) return monic(f);
  UniPoly g = gcd_poly(f, derivative(f));
  return monic(divrem(f, g).first);
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& f) {
  // Yun's algorithm (characteristic zero).
  std::vector<std::pair<UniPoly, int>> out;
  if (f.degree() <= 0) return out;
  UniPoly a = monic(f);
  UniPoly da = derivative(a);
  UniPoly g = gcd_poly(a, da);
  UniPoly w = divrem(a, g).first;
  UniPoly y = divrem(da, g).first;
  UniPoly z = y - derivative(w);
  int i = 1;
  while (!z.is_zero()) {
    UniPoly h = gcd_poly(w, z);
    if (h.degree() > 0) out.emplace_back(h, i);
    w = divrem(w, h).first;
    y = divrem(z, h).first;
    z = y - derivative(w);
    ++i;
  }
  if (w.degree() > 0) out.emplace_back(monic(w), i);
  return out;
}

UniPoly interpolate_poly(const std::vector<Rational>& points,
                         const std::vector<Rational>& values) {
  if (points.size() != values.size())
    throw std::invalid_argument("interpolate_poly: size mismatch");
  UniPoly acc;
  for (size_t k = 0; k < points.size(); ++k) {
    UniPoly basis = UniPoly::constant(Rational(1));
    Rational denom(1);
    for (size_t j = 0; j < points.size(); ++j) {
      if (j == k) continue;
      basis = basis * UniPoly(std::vector<Rational>{-points[j], Rational(1)});
      denom *= points[k] - points[j];
    }
    acc = acc + (values[k] / denom) * basis;
  }
  return acc;
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  // Euclidean resultant with explicit degree bookkeeping.
  if (a.is_zero() || b.is_zero()) return Rational(0);
  UniPoly f = a, g = b;
  Rational res(1);
  while (g.degree() > 0) {
    UniPoly r = divrem(f, g).second;
    int df = f.degree(), dg = g.degree(), dr = r.is_zero() ? -1 : r.degree();
    // Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
    Rational lc = g.leading();
    Rational pw(1);
    for (int i = 0; i < df - (dr < 0 ? 0 : dr); ++i) pw *= lc;
    if ((df % 2) && (dg % 2)) res = -res;
    if (r.is_zero()) {
      if (dg > 0) return Rational(0);
      return res * pw;
    }
    res *= pw;
    f = g;
    g = r;
  }
  // g is a nonzero constant
  Rational lc = g.leading();
  Rational pw(1);
  for (int i = 0; i < f.degree(); ++i) pw *= lc;
  return res * pw;
}

Rational discriminant(const UniPoly& f) {
  if (f.degree() < 1) throw std::invalid_argument("discriminant: degree < 1");
  int n = f.degree();
  Rational r = resultant(f, derivative(f)) / f.leading();
  if (((n * (n - 1)) / 2) % 2) r = -r;
  return r;
}

}  // namespace dp4
