#pragma once

// Quadratic forms over Q in at most 6 variables: diagonalization,
// classical invariants, local and global isotropy, Witt indices, and the
// line criterion for four-dimensional quadrics.

#include <optional>

#include "dp4/local.hpp"
#include "dp4/poly.hpp"

namespace dp4 {

using Mat = std::vector<std::vector<Rational>>;

struct QuadraticForm {
  int n = 0;
  Mat gram;  // symmetric n x n
};

// Validates symmetry and size (n <= 6).
QuadraticForm make_form(Mat gram);

// Exact determinant of a square rational matrix (Gaussian elimination).
Rational rational_det(Mat m);

QuadraticForm diagonal_form(const std::vector<Rational>& entries);

Rational evaluate_form(const QuadraticForm& q, const std::vector<Rational>& x);

struct DiagonalForm {
  std::vector<Rational> entries;  // includes zeros of the radical
  Mat transform;                  // P with P^T M P = diag(entries)
};

DiagonalForm diagonalize(const QuadraticForm& q);

// Congruence by a random unimodular integer matrix (for cross-checks).
QuadraticForm random_congruence(const QuadraticForm& q, unsigned long seed);

struct FormInvariants {
  int rank = 0;
  Integer disc = 1;  // signed squarefree class of det of the nondegenerate part
  int sig_pos = 0, sig_neg = 0;
};

FormInvariants form_invariants(const DiagonalForm& d);

// Hasse invariant prod_{i<j} (a_i, a_j)_v over the nonzero diagonal entries.
int hasse_invariant(const DiagonalForm& d, const Place& v);

// Odd primes dividing some nonzero entry's square class, plus 2.
std::vector<Integer> critical_primes(const DiagonalForm& d);

bool is_isotropic_local(const QuadraticForm& q, const Place& v);

int witt_index_local(const QuadraticForm& q, const Place& v);

// Hasse-Minkowski: isotropy over Q decided at the critical places.
bool is_isotropic_global(const QuadraticForm& q);

// Global Witt index (0, 1 or 2+ collapsed at 2 is enough for callers that
// need lines; full value returned for completeness).
int witt_index_global(const QuadraticForm& q);

// Rank-5 forms only: whether the projective quadric contains a line over
// the completion at v (scope = place) or over Q (scope = nullopt).
bool quadric_contains_line(const QuadraticForm& q, const std::optional<Place>& scope);

// Conic a x^2 + b y^2 + c z^2 = 0 with abc != 0.
bool conic_has_local_point(const Rational& a, const Rational& b, const Rational& c,
                           const Place& v);

}  // namespace dp4
