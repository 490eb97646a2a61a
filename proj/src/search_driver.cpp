#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "dp4/flynn.hpp"

namespace dp4 {
namespace {

struct Candidate {
  UniPoly f2, f3, eps;
  Integer d;
};

std::string poly_key(const UniPoly& f) {
  std::string s;
  for (const Rational& c : f.coeffs()) s += c.get_str() + ",";
  return s;
}

// Subset products of the generators with nonzero square norm, deduplicated,
// in subset-mask order so the empty product 1 comes first.
std::vector<UniPoly> eps_pool(const std::vector<UniPoly>& generators, const UniPoly& f3) {
  if (generators.size() > 12) {
    throw std::invalid_argument("search_candidates: too many eps generators");
  }
  std::vector<UniPoly> out;
  std::set<std::string> seen;
  for (unsigned long mask = 0; mask < (1ul << generators.size()); ++mask) {
    UniPoly prod = UniPoly::constant(Rational(1));
    for (size_t i = 0; i < generators.size(); ++i) {
      if (mask & (1ul << i)) prod = nf_mul(prod, generators[i], f3);
    }
    prod = nf_reduce(prod, f3);
    if (prod.is_zero()) continue;
    Rational n = nf_norm(prod, f3);
    if (n == 0 || !is_rational_square(n)) continue;
    if (seen.insert(poly_key(prod)).second) out.push_back(prod);
  }
  return out;
}

// The places a class could ramify at for this candidate: 2, 3, odd primes of
// the quintic's discriminant, primes of d, and any extra configured primes.
std::vector<Place> bad_places(const Candidate& c, const std::vector<Integer>& extra) {
  std::set<Integer> primes{2, 3};
  Rational disc = discriminant(c.f2 * c.f3);
  for (const Integer& x : {disc.get_num(), disc.get_den(), Integer(c.d)}) {
    if (x == 0) continue;
    for (const auto& [q, e] : factor_integer(x)) primes.insert(q);
  }
  for (const Integer& q : extra) {
    if (q > 1 && is_prime(q)) primes.insert(q);
  }
  std::vector<Place> out;
  out.push_back(Place::infinity());
  for (const Integer& q : primes) out.push_back(Place::finite(q));
  return out;
}

CandidateReport evaluate_candidate(long index, const Candidate& c, const SearchConfig& cfg) {
  CandidateReport rep;
  rep.index = index;
  rep.f2 = c.f2;
  rep.f3 = c.f3;
  rep.eps3 = c.eps;
  rep.d = c.d;
  try {
    FlynnDatum datum{c.f2, c.f3, c.d, c.eps, BasisMode::Block};
    auto [q0, qinf] = flynn_quadrics(datum);
    QuadricPencil pencil = pencil_new(q0, qinf);

    // Smallest-height rational line on a smooth fiber, if any.
    for (long h = 1; h <= cfg.height_bound && !rep.has_rational_line; ++h) {
      for (long b = 0; b <= h && !rep.has_rational_line; ++b) {
        for (long a = -h; a <= h; ++a) {
          if (std::max(std::abs(a), b) != h) continue;
          if (b == 0 && a != 1) continue;
          if (std::gcd(std::abs(a), b) != 1) continue;
          Integer ia(a), ib(b);
          if (eval_homogeneous(pencil.phi, Rational(ia), Rational(ib), 5) == 0) continue;
          if (quadric_contains_line(fiber(pencil, ia, ib), std::nullopt)) {
            rep.has_rational_line = true;
            rep.line_t = std::make_pair(ia, ib);
            break;
          }
        }
      }
    }
    if (rep.has_rational_line) {
      rep.status = "rational-line";
      return rep;
    }

    BrauerClassSpec spec{c.d, c.f2};
    bool all_constant = true;
    int halves = 0;
    for (const Place& v : bad_places(c, cfg.s_primes)) {
      EvaluationReport ev = sample_evaluation(spec, pencil, v, cfg.height_bound);
      all_constant = all_constant && ev.constant;
      if (ev.observed.size() == 1 && ev.observed[0] == HalfInt::Half) ++halves;
      rep.evaluations.push_back(std::move(ev));
    }
    rep.all_constant = all_constant;
    rep.half_count = halves;
    rep.flagged = all_constant && (halves % 2 == 1);
    rep.status = rep.flagged ? "flagged" : "not-flagged";
  } catch (const std::exception& e) {
    rep.status = std::string("error: ") + e.what();
  }
  return rep;
}

}  // namespace

std::vector<CandidateReport> search_candidates(const SearchConfig& config, int workers) {
  if (workers < 1 || workers > 64) {
    throw std::invalid_argument("search_candidates: workers must be in 1..64");
  }
  if (config.height_bound < 1) {
    throw std::invalid_argument("search_candidates: height bound must be positive");
  }
  if (config.f2_list.empty() || config.f3_list.empty()) {
    throw std::invalid_argument("search_candidates: empty factor lists");
  }

  std::vector<Candidate> candidates;
  for (const UniPoly& f2 : config.f2_list) {
    for (const UniPoly& f3 : config.f3_list) {
      std::vector<UniPoly> eps = eps_pool(config.eps_generators, f3);
      for (long d = config.d_min; d <= config.d_max; ++d) {
        if (d == 0 || !is_squarefree(Integer(d))) continue;
        for (const UniPoly& e : eps) candidates.push_back({f2, f3, e, Integer(d)});
      }
    }
  }

  std::vector<CandidateReport> reports(candidates.size());
  small_primes();  // warm the shared sieve before spawning workers
  int w = static_cast<int>(std::min<size_t>(workers, std::max<size_t>(candidates.size(), 1)));
  if (w <= 1) {
    for (size_t i = 0; i < candidates.size(); ++i) {
      reports[i] = evaluate_candidate(static_cast<long>(i), candidates[i], config);
    }
  } else {
    std::vector<std::thread> pool;
    for (int r = 0; r < w; ++r) {
      pool.emplace_back([&, r]() {
        for (size_t i = static_cast<size_t>(r); i < candidates.size(); i += static_cast<size_t>(w)) {
          reports[i] = evaluate_candidate(static_cast<long>(i), candidates[i], config);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }
  return reports;
}

SearchConfig family_search_config(long d_min, long d_max, long height_bound) {
  SearchConfig cfg;
  cfg.f2_list = {family_f2()};
  cfg.f3_list = {family_f3()};
  cfg.d_min = d_min;
  cfg.d_max = d_max;
  cfg.eps_generators = {UniPoly::monomial(1)};
  cfg.height_bound = height_bound;
  return cfg;
}

}  // namespace dp4
