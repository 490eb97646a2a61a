#include "dp4/quadform.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "dp4/symdiag.hpp"

namespace dp4 {

QuadraticForm make_form(Mat gram) {
  int n = static_cast<int>(gram.size());
  if (n < 1 || n > 6) throw std::invalid_argument("make_form: need 1 <= n <= 6");
  for (auto& row : gram)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("make_form: not square");
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j)
      if (gram[i][j] != gram[j][i]) throw std::invalid_argument("make_form: not symmetric");
  return {n, std::move(gram)};
}

Rational rational_det(Mat m) {
  const int n = static_cast<int>(m.size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("rational_det: not square");
  Rational det(1);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return Rational(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

QuadraticForm diagonal_form(const std::vector<Rational>& entries) {
  int n = static_cast<int>(entries.size());
  Mat g(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) g[i][i] = entries[i];
  return make_form(std::move(g));
}

Rational evaluate_form(const QuadraticForm& q, const std::vector<Rational>& x) {
  if (static_cast<int>(x.size()) != q.n)
    throw std::invalid_argument("evaluate_form: dimension mismatch");
  Rational acc(0);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) acc += q.gram[i][j] * x[i] * x[j];
  return acc;
}

namespace {

struct RatOps {
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  bool is_zero(const Rational& x) const { return x == 0; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational sub(const Rational& a, const Rational& b) const { return a - b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
  Rational div(const Rational& a, const Rational& b) const { return a / b; }
  Rational neg(const Rational& a) const { return -a; }
};

}  // namespace

DiagonalForm diagonalize(const QuadraticForm& q) {
  auto res = symmetric_diagonalize<Rational>(q.gram, RatOps{});
  return {std::move(res.entries), std::move(res.transform)};
}

QuadraticForm random_congruence(const QuadraticForm& q, unsigned long seed) {
  std::mt19937_64 rng(seed);
  int n = q.n;
  Mat m = q.gram;
  auto colrow = [&](int dst, int src, long c) {
    for (int r = 0; r < n; ++r) m[r][dst] += Rational(c) * m[r][src];
    for (int cc = 0; cc < n; ++cc) m[dst][cc] += Rational(c) * m[src][cc];
  };
  for (int step = 0; step < 8 * n; ++step) {
    int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
    if (i == j) continue;
    long c = static_cast<long>(rng() % 5) - 2;
    if (c == 0) c = 1;
    colrow(i, j, c);
  }
  return make_form(std::move(m));
}

FormInvariants form_invariants(const DiagonalForm& d) {
  FormInvariants inv;
  Rational det(1);
  for (const Rational& e : d.entries) {
    if (e == 0) continue;
    ++inv.rank;
    det *= e;
    if (e > 0)
      ++inv.sig_pos;
    else
      ++inv.sig_neg;
  }
  inv.disc = inv.rank == 0 ? Integer(1) : squarefree_part(det);
  return inv;
}

int hasse_invariant(const DiagonalForm& d, const Place& v) {
  std::vector<Rational> nz;
  for (const Rational& e : d.entries)
    if (e != 0) nz.push_back(e);
  int h = 1;
  for (size_t i = 0; i < nz.size(); ++i)
    for (size_t j = i + 1; j < nz.size(); ++j) h *= hilbert_symbol(nz[i], nz[j], v);
  return h;
}

std::vector<Integer> critical_primes(const DiagonalForm& d) {
  std::set<Integer> ps{Integer(2)};
  for (const Rational& e : d.entries) {
    if (e == 0) continue;
    Integer s = squarefree_part(e);
    for (auto& [p, m] : factor_integer(s)) {
      (void)m;
      if (p > 1) ps.insert(p);
    }
  }
  return {ps.begin(), ps.end()};
}

namespace {

// Data determining isotropy of a diagonal form at one place.
struct LocalData {
  int rank;
  Integer disc;   // signed squarefree
  int hasse;      // at the fixed place
  int pos, neg;   // signature (archimedean decisions)
};

bool isotropic_from_data(const LocalData& d, const Place& v) {
  if (d.rank <= 1) return false;
  if (v.is_archimedean()) return d.pos >= 1 && d.neg >= 1;
  switch (d.rank) {
    case 2:
      return is_local_square(Rational(-d.disc), v);
    case 3:
      return hilbert_symbol(Rational(-1), Rational(-d.disc), v) == d.hasse;
    case 4:
      return !is_local_square(Rational(d.disc), v) ||
             d.hasse == hilbert_symbol(Rational(-1), Rational(-1), v);
    default:
      return true;  // rank >= 5 at a finite place
  }
}

int witt_from_data(LocalData d, const Place& v) {
  int w = 0;
  while (d.rank >= 2 && isotropic_from_data(d, v)) {
    // split off a hyperbolic plane: disc -> -disc, hasse picks up (-1, -disc)
    int adj = hilbert_symbol(Rational(-1), Rational(-d.disc), v);
    d.hasse *= adj;
    d.disc = squarefree_part(Rational(-d.disc));
    d.rank -= 2;
    d.pos -= 1;
    d.neg -= 1;
    ++w;
  }
  return w;
}

LocalData local_data(const DiagonalForm& diag, const Place& v) {
  FormInvariants inv = form_invariants(diag);
  return {inv.rank, inv.disc, hasse_invariant(diag, v), inv.sig_pos, inv.sig_neg};
}

}  // namespace

bool is_isotropic_local(const QuadraticForm& q, const Place& v) {
  DiagonalForm d = diagonalize(q);
  return isotropic_from_data(local_data(d, v), v);
}

int witt_index_local(const QuadraticForm& q, const Place& v) {
  DiagonalForm d = diagonalize(q);
  return witt_from_data(local_data(d, v), v);
}

bool is_isotropic_global(const QuadraticForm& q) {
  DiagonalForm d = diagonalize(q);
  FormInvariants inv = form_invariants(d);
  if (inv.rank <= 1) return false;
  if (inv.rank == 2) {
    Rational prod(1);
    int seen = 0;
    for (const Rational& e : d.entries)
      if (e != 0) {
        prod *= e;
        ++seen;
      }
    (void)seen;
    return is_rational_square(-prod);
  }
  if (!isotropic_from_data(local_data(d, Place::infinity()), Place::infinity())) return false;
  if (inv.rank >= 5) return true;  // isotropic at every finite place
  for (const Integer& p : critical_primes(d)) {
    Place v = Place::finite(p);
    if (!isotropic_from_data(local_data(d, v), v)) return false;
  }
  return true;
}

int witt_index_global(const QuadraticForm& q) {
  DiagonalForm d = diagonalize(q);
  FormInvariants inv = form_invariants(d);
  if (inv.rank == 0) return 0;
  // global Witt index = min of local Witt indices over the critical places
  // (Hasse-Minkowski applied to the split stages; places outside are inert)
  int w = witt_from_data(local_data(d, Place::infinity()), Place::infinity());
  if (inv.rank == 2) {
    // rank 2: hyperbolic iff -disc is a global square
    Rational prod(1);
    for (const Rational& e : d.entries)
      if (e != 0) prod *= e;
    return is_rational_square(-prod) ? 1 : 0;
  }
  for (const Integer& p : critical_primes(d)) {
    Place v = Place::finite(p);
    w = std::min(w, witt_from_data(local_data(d, v), v));
    if (w == 0) break;
  }
  return w;
}

bool quadric_contains_line(const QuadraticForm& q, const std::optional<Place>& scope) {
  DiagonalForm d = diagonalize(q);
  FormInvariants inv = form_invariants(d);
  if (q.n != 5 || inv.rank != 5)
    throw std::invalid_argument("quadric_contains_line: rank-5 form required");
  if (scope.has_value()) return witt_from_data(local_data(d, *scope), *scope) >= 2;
  if (witt_from_data(local_data(d, Place::infinity()), Place::infinity()) < 2) return false;
  for (const Integer& p : critical_primes(d)) {
    Place v = Place::finite(p);
    if (witt_from_data(local_data(d, v), v) < 2) return false;
  }
  return true;
}

bool conic_has_local_point(const Rational& a, const Rational& b, const Rational& c,
                           const Place& v) {
  if (a == 0 || b == 0 || c == 0)
    throw std::invalid_argument("conic_has_local_point: zero coefficient");
  return hilbert_symbol(-a * c, -b * c, v) == 1;
}

}  // namespace dp4
