#include <algorithm>
#include <random>

#include "doctest.h"
#include "dp4/polymod.hpp"

using namespace dp4;

namespace {

ModPoly random_mod_poly(std::mt19937_64& rng, const Integer& p, int max_deg) {
  std::vector<Integer> c;
  int deg = static_cast<int>(rng() % (max_deg + 1));
  for (int i = 0; i <= deg; ++i) c.emplace_back(static_cast<long>(rng() % 1000));
  return mp_reduce(c, p);
}

}  // namespace

TEST_CASE("mod-p ring identities") {
  std::mt19937_64 rng(11);
  for (const Integer& p : {Integer(2), Integer(3), Integer(13)}) {
    for (int t = 0; t < 40; ++t) {
      ModPoly a = random_mod_poly(rng, p, 6);
      ModPoly b = random_mod_poly(rng, p, 4);
      if (mp_is_zero(b)) continue;
      auto [q, r] = mp_divrem(a, b, p);
      ModPoly back = mp_add(mp_mul(q, b, p), r, p);
      CHECK(back == a);
      CHECK((mp_is_zero(r) || mp_degree(r) < mp_degree(b)));
    }
  }
}

TEST_CASE("gcd divides both arguments") {
  std::mt19937_64 rng(12);
  const Integer p = 7;
  for (int t = 0; t < 40; ++t) {
    ModPoly a = random_mod_poly(rng, p, 6);
    ModPoly b = random_mod_poly(rng, p, 6);
    if (mp_is_zero(a) || mp_is_zero(b)) continue;
    ModPoly g = mp_gcd(a, b, p);
    REQUIRE(!mp_is_zero(g));
    CHECK(mp_is_zero(mp_divrem(a, g, p).second));
    CHECK(mp_is_zero(mp_divrem(b, g, p).second));
  }
}

TEST_CASE("factorization multiplies back with irreducible factors") {
  std::mt19937_64 rng(13);
  for (const Integer& p : {Integer(2), Integer(3), Integer(13)}) {
    for (int t = 0; t < 25; ++t) {
      ModPoly f = random_mod_poly(rng, p, 7);
      if (mp_is_zero(f) || mp_degree(f) < 1) continue;
      std::mt19937_64 fr(1000 + t);
      auto factors = mp_factor(f, p, fr);
      ModPoly prod{f.back()};  // unit = leading coefficient
      for (const auto& [g, e] : factors) {
        std::mt19937_64 ir(5);
        REQUIRE(mp_is_irreducible(g, p, ir));
        REQUIRE(g.back() == 1);  // monic
        for (int i = 0; i < e; ++i) prod = mp_mul(prod, g, p);
      }
      CHECK(prod == f);
    }
  }
}

TEST_CASE("known factorization shapes") {
  std::mt19937_64 rng(14);
  // T^4 + 1 = (T + 1)^4 mod 2
  auto f = mp_reduce({1, 0, 0, 0, 1}, 2);
  auto fac = mp_factor(f, 2, rng);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == mp_reduce({1, 1}, 2));
  CHECK(fac[0].second == 4);
  // T^2 + 1 mod 3 is irreducible
  std::mt19937_64 rng2(15);
  CHECK(mp_is_irreducible(mp_reduce({1, 0, 1}, 3), 3, rng2));
  CHECK(!mp_is_irreducible(mp_reduce({2, 0, 1}, 3), 3, rng2));  // T^2 + 2 = (T - 1)(T + 1) mod 3
}

TEST_CASE("roots match exhaustive scans") {
  std::mt19937_64 rng(16);
  for (const Integer& p : {Integer(3), Integer(5), Integer(11)}) {
    for (int t = 0; t < 20; ++t) {
      ModPoly f = random_mod_poly(rng, p, 5);
      if (mp_is_zero(f) || mp_degree(f) < 1) continue;
      std::mt19937_64 rr(t);
      auto roots = mp_roots(f, p, rr);
      std::vector<Integer> want;
      for (Integer x = 0; x < p; ++x) {
        if (mp_eval(f, x, p) == 0) want.push_back(x);
      }
      std::sort(roots.begin(), roots.end());
      std::sort(want.begin(), want.end());
      CHECK(roots == want);
    }
  }
}
