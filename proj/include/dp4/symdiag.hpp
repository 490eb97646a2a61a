#pragma once

// Symmetric Gaussian diagonalization by congruence, generic over the
// coefficient field.  Ops must provide: zero(), one(), is_zero(x),
// add(a,b), sub(a,b), mul(a,b), div(a,b), neg(a).

#include <vector>

namespace dp4 {

template <class F>
struct SymDiagResult {
  std::vector<F> entries;                  // diagonal of P^T M P (zeros kept in place)
  std::vector<std::vector<F>> transform;   // P, invertible over the field
};

template <class F, class Ops>
SymDiagResult<F> symmetric_diagonalize(std::vector<std::vector<F>> m, const Ops& ops) {
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<F>> p(n, std::vector<F>(n, ops.zero()));
  for (int i = 0; i < n; ++i) p[i][i] = ops.one();

  auto col_op = [&](int dst, int src, const F& c) {
    // col_dst += c * col_src, then the matching row op; update P columns.
    for (int r = 0; r < n; ++r) m[r][dst] = ops.add(m[r][dst], ops.mul(c, m[r][src]));
    for (int cidx = 0; cidx < n; ++cidx)
      m[dst][cidx] = ops.add(m[dst][cidx], ops.mul(c, m[src][cidx]));
    for (int r = 0; r < n; ++r) p[r][dst] = ops.add(p[r][dst], ops.mul(c, p[r][src]));
  };
  auto swap_op = [&](int a, int b) {
    for (int r = 0; r < n; ++r) std::swap(m[r][a], m[r][b]);
    for (int c = 0; c < n; ++c) std::swap(m[a][c], m[b][c]);
    for (int r = 0; r < n; ++r) std::swap(p[r][a], p[r][b]);
  };

  for (int i = 0; i < n; ++i) {
    if (ops.is_zero(m[i][i])) {
      int jswap = -1, jadd = -1;
      for (int j = i + 1; j < n; ++j) {
        if (jswap < 0 && !ops.is_zero(m[j][j])) jswap = j;
        if (jadd < 0 && !ops.is_zero(m[i][j])) jadd = j;
      }
      if (jswap >= 0) {
        swap_op(i, jswap);
      } else if (jadd >= 0) {
        // all remaining diagonal entries vanish; m[i][i] becomes 2 m[i][jadd]
        col_op(i, jadd, ops.one());
      } else {
        continue;  // radical direction
      }
    }
    for (int j = i + 1; j < n; ++j) {
      if (ops.is_zero(m[i][j])) continue;
      F c = ops.neg(ops.div(m[i][j], m[i][i]));
      col_op(j, i, c);
    }
  }
  SymDiagResult<F> out;
  out.entries.reserve(n);
  for (int i = 0; i < n; ++i) out.entries.push_back(m[i][i]);
  out.transform = std::move(p);
  return out;
}

}  // namespace dp4
