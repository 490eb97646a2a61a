#include "dp4/ints.hpp"

#include <algorithm>
#include <sstream>

namespace dp4 {

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("rational_from_string: empty string");
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/'))
      throw std::invalid_argument("rational_from_string: bad character in '" + s + "'");
  }
  Rational x;
  if (x.set_str(s, 10) != 0)
    throw std::invalid_argument("rational_from_string: cannot parse '" + s + "'");
  if (x.get_den() == 0) throw std::invalid_argument("rational_from_string: zero denominator");
  x.canonicalize();
  return x;
}

Integer pow_int(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

int valuation_int(const Integer& n, const Integer& p) {
  if (n == 0) throw std::invalid_argument("valuation_int: zero argument");
  Integer rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

namespace {

bool miller_rabin_witness(const Integer& n, const Integer& a, const Integer& d, int s) {
  Integer x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (int i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // composite witness
}

}  // namespace

bool is_prime(const Integer& n) {
  static const Integer kBound("3317044064679887385961981");  // 12-base MR limit
  if (n >= kBound) throw UnsupportedError("is_prime: input beyond deterministic bound");
  if (n < 2) return false;
  static const long bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (long b : bases) {
    if (n == b) return true;
    if (n % b == 0) return false;
  }
  Integer d = n - 1;
  int s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  for (long b : bases)
    if (miller_rabin_witness(n, Integer(b), d, s)) return false;
  return true;
}

namespace {

Integer pollard_rho(const Integer& n, unsigned long seed) {
  // Brent's variant; n odd composite, not a prime power of a tiny prime.
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(seed);
  while (true) {
    Integer y = rng.get_z_range(n - 3) + 2;
    Integer c = rng.get_z_range(n - 2) + 1;
    Integer x = y, d = 1, q = 1, ys = y;
    unsigned long r = 1, m = 128;
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          Integer diff = x > y ? x - y : y - x;
          q = (q * diff) % n;
        }
        mpz_gcd(d.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += lim;
      }
      r *= 2;
    }
    if (d == n) {
      // backtrack one step at a time
      d = 1;
      while (d == 1) {
        ys = (ys * ys + c) % n;
        Integer diff = x > ys ? x - ys : ys - x;
        mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      }
    }
    if (d != n && d != 1) return d;
    ++seed;
    if (seed > 64) throw UnsupportedError("factor_integer: Pollard rho gave up");
  }
}

void factor_rec(Integer n, std::map<Integer, int>& out, unsigned long seed) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer d = pollard_rho(n, seed);
  factor_rec(d, out, seed + 1);
  factor_rec(n / d, out, seed + 1);
}

}  // namespace

std::map<Integer, int> factor_integer(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factor_integer: zero argument");
  std::map<Integer, int> out;
  Integer m = abs(n);
  for (long p : small_primes()) {
    if (m == 1) break;
    if (Integer(p) * p > m) break;
    while (m % p == 0) {
      out[Integer(p)] += 1;
      m /= p;
    }
  }
  if (m > 1) {
    if (is_prime(m))
      out[m] += 1;
    else
      factor_rec(m, out, 1);
  }
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (auto& [p, e] : factor_integer(n))
    if (e > 1) return false;
  return true;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::invalid_argument("squarefree_part: zero argument");
  Integer r = n < 0 ? -1 : 1;
  for (auto& [p, e] : factor_integer(n))
    if (e % 2) r *= p;
  return r;
}

Integer squarefree_part(const Rational& x) {
  if (x == 0) throw std::invalid_argument("squarefree_part: zero argument");
  return squarefree_part(Integer(x.get_num() * x.get_den()));
}

bool is_rational_square(const Rational& x) {
  if (x < 0) return false;
  return mpz_perfect_square_p(x.get_num().get_mpz_t()) &&
         mpz_perfect_square_p(x.get_den().get_mpz_t());
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

int kronecker(const Integer& a, const Integer& n) {
  return mpz_kronecker(a.get_mpz_t(), n.get_mpz_t());
}

const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    const long bound = 100000;
    std::vector<bool> sieve(bound + 1, true);
    std::vector<long> out;
    for (long i = 2; i <= bound; ++i) {
      if (!sieve[i]) continue;
      out.push_back(i);
      for (long j = 2 * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
  }();
  return primes;
}

std::vector<Integer> primes_up_to(long bound) {
  std::vector<Integer> out;
  for (long p : small_primes()) {
    if (p > bound) break;
    out.emplace_back(p);
  }
  if (bound > 100000) throw UnsupportedError("primes_up_to: bound beyond sieve");
  return out;
}

}  // namespace dp4
