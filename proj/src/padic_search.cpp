#include "dp4/padic_search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>

#include "dp4/ints.hpp"

namespace dp4 {

namespace {

using i128 = __int128;

constexpr long kEntryBound = (1L << 40);

struct IntForm {
  int n = 0;
  std::array<std::array<long long, 6>, 6> m{};
};

// Clears denominators and divides by the integer content; the zero set over
// Q_p is unchanged and entries stay small enough for __int128 accumulators.
IntForm to_int_form(const QuadraticForm& q) {
  Integer den(1);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      Integer d = q.gram[i][j].get_den();
      den = den / gcd(den, d) * d;
    }
  std::vector<std::vector<Integer>> z(q.n, std::vector<Integer>(q.n));
  Integer content(0);
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      Rational v = q.gram[i][j] * Rational(den);
      z[i][j] = v.get_num();
      content = gcd(content, z[i][j]);
    }
  if (content == 0) throw std::invalid_argument("lift_search: zero form");
  IntForm f;
  f.n = q.n;
  for (int i = 0; i < q.n; ++i)
    for (int j = 0; j < q.n; ++j) {
      Integer e = z[i][j] / content;
      if (abs(e) >= kEntryBound)
        throw UnsupportedError("lift_search: Gram entry too large");
      f.m[i][j] = e.get_si();
    }
  return f;
}

struct Node {
  std::array<long long, 6> x{};
  int lead = 0;
};

i128 eval_int_form(const IntForm& f, const std::array<long long, 6>& x) {
  i128 acc = 0;
  for (int i = 0; i < f.n; ++i)
    for (int j = 0; j < f.n; ++j) acc += i128(f.m[i][j]) * x[i] * x[j];
  return acc;
}

// Exact gradient (2 M x) as __int128 entries.
std::array<i128, 6> gradient(const IntForm& f, const std::array<long long, 6>& x) {
  std::array<i128, 6> g{};
  for (int i = 0; i < f.n; ++i) {
    i128 acc = 0;
    for (int j = 0; j < f.n; ++j) acc += i128(f.m[i][j]) * x[j];
    g[i] = 2 * acc;
  }
  return g;
}

int val128(i128 v, long long p) {
  if (v < 0) v = -v;
  int k = 0;
  while (v % p == 0) {
    v /= p;
    ++k;
  }
  return k;
}

// Smallest valuation among the 1x1 (single form) or 2x2 (two forms) Jacobian
// minors at x, or -1 if all relevant minors vanish identically.
int jacobian_minor_valuation(const std::vector<IntForm>& forms,
                             const std::array<long long, 6>& x, long long p) {
  int n = forms[0].n;
  int best = -1;
  if (forms.size() == 1) {
    auto g = gradient(forms[0], x);
    for (int i = 0; i < n; ++i) {
      if (g[i] == 0) continue;
      int v = val128(g[i], p);
      if (best < 0 || v < best) best = v;
    }
    return best;
  }
  auto g1 = gradient(forms[0], x);
  auto g2 = gradient(forms[1], x);
  for (int i = 0; i < n; ++i)
    for (int k = i + 1; k < n; ++k) {
      i128 minor = g1[i] * g2[k] - g1[k] * g2[i];
      if (minor == 0) continue;
      int v = val128(minor, p);
      if (best < 0 || v < best) best = v;
    }
  return best;
}

long long mod_pos(i128 v, long long p) {
  long long r = static_cast<long long>(v % p);
  return r < 0 ? r + p : r;
}

long long pow_mod_ll(long long a, long long e, long long p) {
  long long r = 1 % p;
  a %= p;
  if (a < 0) a += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>(i128(r) * a % p);
    a = static_cast<long long>(i128(a) * a % p);
    e >>= 1;
  }
  return r;
}

// Affine solution set of (up to two) linear equations over F_p in m unknowns.
struct LinearSystem {
  int m = 0;
  long long p = 0;
  int nrows = 0;
  std::array<std::array<long long, 7>, 2> rows{};  // columns 0..m-1, rhs at m
  bool consistent = true;
  int rank = 0;
  std::array<int, 2> pivot_col{};

  void reduce() {
    rank = 0;
    for (int col = 0; col < m && rank < nrows; ++col) {
      int sel = -1;
      for (int r = rank; r < nrows; ++r)
        if (rows[r][col] != 0) {
          sel = r;
          break;
        }
      if (sel < 0) continue;
      std::swap(rows[rank], rows[sel]);
      long long inv = pow_mod_ll(rows[rank][col], p - 2, p);
      for (int c = col; c <= m; ++c)
        rows[rank][c] = static_cast<long long>(i128(rows[rank][c]) * inv % p);
      for (int r = 0; r < nrows; ++r) {
        if (r == rank || rows[r][col] == 0) continue;
        long long f = rows[r][col];
        for (int c = col; c <= m; ++c) {
          rows[r][c] = (rows[r][c] - static_cast<long long>(i128(f) * rows[rank][c] % p) + p) % p;
        }
      }
      pivot_col[rank] = col;
      ++rank;
    }
    for (int r = rank; r < nrows; ++r)
      if (rows[r][m] != 0) consistent = false;
  }

  // Invokes fn(delta) for every solution vector delta in [0,p)^m.
  template <typename Fn>
  bool for_each_solution(Fn&& fn) const {
    if (!consistent) return true;
    std::array<bool, 6> is_pivot{};
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m; ++c)
      if (!is_pivot[c]) free_cols.push_back(c);
    std::vector<long long> counter(free_cols.size(), 0);
    std::array<long long, 6> delta{};
    while (true) {
      for (size_t i = 0; i < free_cols.size(); ++i) delta[free_cols[i]] = counter[i];
      for (int r = 0; r < rank; ++r) {
        i128 acc = rows[r][m];
        for (int c : free_cols) acc -= i128(rows[r][c]) * delta[c];
        delta[pivot_col[r]] = mod_pos(acc, p);
      }
      if (!fn(delta)) return false;
      size_t idx = 0;
      while (idx < counter.size() && ++counter[idx] == p) counter[idx++] = 0;
      if (idx == counter.size() && !counter.empty()) break;
      if (counter.empty()) break;
    }
    return true;
  }
};

}  // namespace

LiftResult lift_search(const std::vector<QuadraticForm>& forms, const Integer& p,
                       int max_level, size_t max_frontier) {
  if (forms.empty() || forms.size() > 2)
    throw std::invalid_argument("lift_search: expected one or two forms");
  int n = forms[0].n;
  for (const auto& q : forms)
    if (q.n != n) throw std::invalid_argument("lift_search: mixed variable counts");
  if (!is_prime(p)) throw std::invalid_argument("lift_search: p must be prime");
  if (max_level < 1) throw std::invalid_argument("lift_search: max_level must be >= 1");
  if (p >= Integer(1) << 31) throw UnsupportedError("lift_search: prime too large");
  long long pp = p.get_si();

  std::vector<IntForm> ifs;
  for (const auto& q : forms) ifs.push_back(to_int_form(q));

  // Cap the level so coordinates stay below 2^31 (__int128-safe products).
  int levels = 0;
  long long cap = 1;
  while (levels < max_level && cap < (1LL << 31) / pp) {
    cap *= pp;
    ++levels;
  }
  if (levels == 0) levels = 1;

  LiftResult res;
  std::vector<Node> frontier;

  auto hensel_check = [&](const Node& node, int level) -> bool {
    int v = jacobian_minor_valuation(ifs, node.x, pp);
    if (v >= 0 && 2 * v < level) {
      res.status = LiftStatus::PointFound;
      res.level = level;
      res.minor_valuation = v;
      res.witness.assign(n, Integer(0));
      for (int i = 0; i < n; ++i)
        res.witness[i] = Integer(static_cast<long>(node.x[i]));
      return true;
    }
    return false;
  };

  // Level 1: primitive solutions mod p, normalized so the first unit
  // coordinate equals 1 and earlier coordinates vanish.
  for (int lead = 0; lead < n; ++lead) {
    int tail = n - 1 - lead;
    std::vector<long long> counter(tail, 0);
    while (true) {
      Node node;
      node.lead = lead;
      node.x[lead] = 1;
      for (int i = 0; i < tail; ++i) node.x[lead + 1 + i] = counter[i];
      bool ok = true;
      for (const auto& f : ifs)
        if (mod_pos(eval_int_form(f, node.x), pp) != 0) {
          ok = false;
          break;
        }
      if (ok) {
        if (hensel_check(node, 1)) return res;
        frontier.push_back(node);
        if (frontier.size() > max_frontier) {
          res.status = LiftStatus::Unknown;
          res.level = 1;
          return res;
        }
      }
      size_t idx = 0;
      while (idx < counter.size() && ++counter[idx] == pp) counter[idx++] = 0;
      if (counter.empty() || idx == counter.size()) break;
    }
  }
  if (frontier.empty()) {
    res.status = LiftStatus::Empty;
    res.level = 1;
    return res;
  }

  long long pj = pp;  // p^j for the current level j
  for (int j = 1; j < levels; ++j) {
    std::vector<Node> next;
    for (const Node& node : frontier) {
      // F(x + p^j d) = F(x) + p^j (2 x^T M d) mod p^(j+1): one linear
      // condition on d per form, in the coordinates other than the lead.
      LinearSystem sys;
      sys.m = n - 1;
      sys.p = pp;
      sys.nrows = static_cast<int>(ifs.size());
      for (size_t fi = 0; fi < ifs.size(); ++fi) {
        i128 value = eval_int_form(ifs[fi], node.x);
        long long c = mod_pos(value / pj, pp);
        auto g = gradient(ifs[fi], node.x);
        int col = 0;
        for (int i = 0; i < n; ++i) {
          if (i == node.lead) continue;
          sys.rows[fi][col++] = mod_pos(g[i], pp);
        }
        sys.rows[fi][sys.m] = (pp - c) % pp;
      }
      sys.reduce();
      bool within_cap = sys.for_each_solution([&](const std::array<long long, 6>& delta) {
        Node child = node;
        int col = 0;
        for (int i = 0; i < n; ++i) {
          if (i == node.lead) continue;
          child.x[i] += pj * delta[col++];
        }
        if (hensel_check(child, j + 1)) return false;
        next.push_back(child);
        return next.size() <= max_frontier;
      });
      if (res.status == LiftStatus::PointFound) return res;
      if (!within_cap) {
        res.status = LiftStatus::Unknown;
        res.level = j + 1;
        return res;
      }
    }
    if (next.empty()) {
      res.status = LiftStatus::Empty;
      res.level = j + 1;
      return res;
    }
    frontier.swap(next);
    pj *= pp;
  }

  res.status = LiftStatus::Unknown;
  res.level = levels;
  return res;
}

}  // namespace dp4
