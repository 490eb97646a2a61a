#pragma once

// Construction of two quadrics in u_0..u_4 from a quintic f2*f3 and a
// square-norm multiplier, via coefficient functionals of eps * s(theta)^2 in
// the product algebra Q[T]/(f2) x Q[T]/(f3); pencil-invariant verification;
// and the candidate search driver over (f2, f3, d, eps) data.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dp4/brauer.hpp"
#include "dp4/numberfield.hpp"
#include "dp4/pencil.hpp"

namespace dp4 {

enum class BasisMode { Power, Block };

struct FlynnDatum {
  UniPoly f2;    // monic irreducible, degree 2, integer coefficients
  UniPoly f3;    // monic irreducible, degree 3, integer coefficients
  Integer d;     // nonzero squarefree
  UniPoly eps3;  // element of Q[T]/(f3) with nonzero square rational norm
  BasisMode mode = BasisMode::Block;
};

// The datum reproducing the X_d family: (T^2+3, T^3+3T^2+3T-9, d, theta).
FlynnDatum family_flynn_datum(const Integer& d, BasisMode mode = BasisMode::Block);

// The two u-only quadrics, oriented as a pencil pair (Q0, Qinf) whose
// characteristic form vanishes exactly over the roots of f2*f3: with
// c3, c4 the theta^3 and theta^4 coefficient functionals of
// eps * (sum_i u_i b_i)^2 and a4 the T^4-coefficient of f2*f3, the pair is
// (a4*c4 - c3, c4).  In block mode both Gram matrices are 2+3 block
// diagonal.  Throws std::invalid_argument on violated datum invariants.
std::pair<QuadraticForm, QuadraticForm> flynn_quadrics(const FlynnDatum& datum);

struct PencilMatchReport {
  bool radical_match = false;  // radical of the char form = c * f2 * f3
  bool disc2_match = false;    // disc class at the f2-factor = [d]
  bool disc3_match = false;    // disc class at the f3-factor = [eps3]
  std::string detail;
  bool ok() const { return radical_match && disc2_match && disc3_match; }
};

PencilMatchReport verify_pencil_match(const FlynnDatum& datum,
                                      const QuadricPencil& pencil);

struct SearchConfig {
  std::vector<UniPoly> f2_list;
  std::vector<UniPoly> f3_list;
  long d_min = -100;
  long d_max = -1;
  // Pool generators for eps (elements of Q[T]/(f3)); products of subsets are
  // filtered to nonzero square norm.  The empty product 1 is always tried.
  std::vector<UniPoly> eps_generators;
  std::vector<Integer> s_primes;  // extra primes to sample beyond the forced ones
  long height_bound = 30;
  unsigned long seed = 0;
};

struct CandidateReport {
  long index = 0;
  UniPoly f2, f3, eps3;
  Integer d;
  std::string status;  // "rational-line" | "flagged" | "not-flagged" | "error: ..."
  bool has_rational_line = false;
  std::optional<std::pair<Integer, Integer>> line_t;  // smallest-height witness
  std::vector<EvaluationReport> evaluations;          // at the sampled bad places
  bool all_constant = false;
  int half_count = 0;  // places with constant invariant 1/2
  bool flagged = false;  // no rational line + all constant + odd half count
};

// Expands the configured data, builds each surface, scans for a small-height
// rational line, samples the evaluation maps when none is found, and flags
// candidates whose maps are all constant with an odd number of 1/2s.
// Reports are ordered by candidate index regardless of worker count.
std::vector<CandidateReport> search_candidates(const SearchConfig& config,
                                               int workers = 1);

// The configuration replaying the X_d family scan.
SearchConfig family_search_config(long d_min, long d_max, long height_bound);

}  // namespace dp4
