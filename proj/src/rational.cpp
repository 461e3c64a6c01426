#include "witt/rational.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace witt {

std::string to_text(const Integer& x) { return x.get_str(); }

std::string to_text(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  r.canonicalize();
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw std::domain_error("isqrt of negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!is_square(q.get_num()) || !is_square(q.get_den())) return std::nullopt;
  Rational r(isqrt(q.get_num()), isqrt(q.get_den()));
  r.canonicalize();
  return r;
}

bool is_probable_prime(const Integer& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

namespace {

Integer pollard_brent(const Integer& n, unsigned long seed) {
  if (n % 2 == 0) return 2;
  std::mt19937_64 rng(seed);
  while (true) {
    Integer y = Integer(static_cast<unsigned long>(rng() % 1000003)) % n;
    Integer c = Integer(static_cast<unsigned long>(rng() % 1000003 + 1)) % n;
    Integer g = 1, r = 1, q = 1, x, ys;
    const unsigned long m = 128;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      return Integer(w % n);
    };
    while (g == 1) {
      x = y;
      for (Integer i = 0; i < r; ++i) y = f(y);
      Integer k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < m && k + i < r; ++i) {
          y = f(y);
          Integer d = x - y;
          if (d < 0) d = -d;
          q = (q * d) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        Integer d = x - ys;
        if (d < 0) d = -d;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_rec(const Integer& n, std::vector<Integer>& out, unsigned long seed) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out.push_back(n);
    return;
  }
  if (is_square(n)) {
    Integer r = isqrt(n);
    factor_rec(r, out, seed);
    factor_rec(r, out, seed);
    return;
  }
  Integer d = pollard_brent(n, seed);
  factor_rec(d, out, seed + 1);
  factor_rec(Integer(n / d), out, seed + 2);
}

Integer powm(const Integer& b, const Integer& e, const Integer& m) {
  Integer r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

// p prime, p = 1 mod 4.
std::pair<Integer, Integer> prime_two_squares(const Integer& p) {
  if (p == 2) return {1, 1};
  Integer c = 2, x;
  const Integer e = (p - 1) / 4;
  while (true) {
    x = powm(c, e, p);
    if ((x * x) % p == p - 1) break;
    ++c;
  }
  Integer a = p, b = x;
  while (b * b > p) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  Integer rest = p - b * b;
  return {b, isqrt(rest)};
}

// Gaussian-integer composition; nullopt if n is not a sum of two squares.
std::optional<std::pair<Integer, Integer>> two_squares_factored(
    const std::vector<std::pair<Integer, int>>& fac) {
  Integer re = 1, im = 0;
  for (const auto& [p, e] : fac) {
    if (p % 4 == 3) {
      if (e % 2 != 0) return std::nullopt;
      Integer s;
      mpz_pow_ui(s.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e / 2));
      re *= s;
      im *= s;
      continue;
    }
    auto [x, y] = prime_two_squares(p);
    for (int k = 0; k < e; ++k) {
      Integer nr = re * x - im * y;
      Integer ni = re * y + im * x;
      re = nr;
      im = ni;
    }
  }
  if (re < 0) re = -re;
  if (im < 0) im = -im;
  return std::make_pair(re, im);
}

std::optional<std::pair<Integer, Integer>> two_squares(const Integer& n, bool allow_factoring) {
  if (n == 0) return std::make_pair(Integer(0), Integer(0));
  if (is_square(n)) return std::make_pair(isqrt(n), Integer(0));
  if (n % 4 == 1 && is_probable_prime(n)) return prime_two_squares(n);
  if (!allow_factoring) return std::nullopt;
  return two_squares_factored(factor_integer(n));
}

std::vector<Integer> nonzero(std::vector<Integer> v) {
  std::vector<Integer> out;
  for (auto& x : v)
    if (x != 0) out.push_back(x < 0 ? Integer(-x) : x);
  return out;
}

}  // namespace

std::vector<std::pair<Integer, int>> factor_integer(Integer n) {
  if (n == 0) throw std::domain_error("factor_integer(0)");
  if (n < 0) n = -n;
  // Witness constructions factor the same entries many times over.
  thread_local std::map<Integer, std::vector<std::pair<Integer, int>>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  if (cache.size() > 4096) cache.clear();
  const Integer key = n;
  std::vector<Integer> primes;
  for (unsigned long p : {2ul, 3ul, 5ul}) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  for (unsigned long p = 7; p < 20000 && Integer(p) * p <= n; p += 2) {
    while (n % p == 0) {
      primes.emplace_back(p);
      n /= p;
    }
  }
  factor_rec(n, primes, 12345);
  std::sort(primes.begin(), primes.end());
  std::vector<std::pair<Integer, int>> out;
  for (const auto& p : primes) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  cache.emplace(key, out);
  return out;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) throw std::domain_error("squarefree_part(0)");
  Integer out = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factor_integer(n))
    if (e % 2 == 1) out *= p;
  return out;
}

Integer squarefree_part(const Rational& q) {
  Integer a = squarefree_part(q.get_num()), b = squarefree_part(q.get_den());
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return Integer(a / g) * Integer(b / g);
}

std::vector<Integer> sum_of_squares(const Integer& n) {
  if (n < 0) throw std::domain_error("sum_of_squares of negative integer");
  if (n == 0) return {};
  if (is_square(n)) return {isqrt(n)};
  const bool small = mpz_sizeinbase(n.get_mpz_t(), 2) <= 96;
  if (auto two = two_squares(n, small)) return nonzero({two->first, two->second});

  // Not of the form 4^a(8b+7): three squares exist; look for n - w^2 = x^2 + y^2.
  Integer m = n;
  while (m % 4 == 0) m /= 4;
  if (m % 8 != 7) {
    Integer w = isqrt(n);
    for (int tries = 0; tries < 200 && w >= 0; ++tries, --w) {
      if (auto two = two_squares(Integer(n - w * w), small && tries < 40))
        return nonzero({w, two->first, two->second});
    }
  }

  // Four squares (Rabin-Shallit): strip 4^a, then n - w1^2 - w2^2 prime = 1 mod 4.
  Integer scale = 1;
  m = n;
  while (m % 4 == 0) {
    m /= 4;
    scale *= 2;
  }
  if (m < 100000) {
    const long mm = m.get_si();
    for (long a = 0; a * a <= mm; ++a)
      for (long b = a; a * a + b * b <= mm; ++b)
        for (long c = b; a * a + b * b + c * c <= mm; ++c) {
          const long rest = mm - a * a - b * b - c * c;
          const Integer r = isqrt(Integer(rest));
          if (r * r == rest)
            return nonzero({scale * a, scale * b, scale * c, Integer(scale * r)});
        }
  }
  std::mt19937_64 rng(0x5eed);
  const Integer root = isqrt(m);
  gmp_randclass gen(gmp_randinit_default);
  gen.seed(static_cast<unsigned long>(rng()));
  while (true) {
    Integer w1 = gen.get_z_range(root + 1);
    Integer w2 = gen.get_z_range(root + 1);
    const int want = static_cast<int>(Integer(m % 4).get_si());
    // Need m - w1^2 - w2^2 = 1 mod 4.
    const int par = (want + 3) % 4;  // w1^2 + w2^2 mod 4
    if (par == 3) continue;
    if (par == 0) {
      if (w1 % 2 != 0) ++w1;
      if (w2 % 2 != 0) ++w2;
    } else if (par == 1) {
      if (w1 % 2 == 0) ++w1;
      if (w2 % 2 != 0) ++w2;
    } else {
      if (w1 % 2 == 0) ++w1;
      if (w2 % 2 == 0) ++w2;
    }
    Integer p = m - w1 * w1 - w2 * w2;
    if (p <= 0 || !is_probable_prime(p)) continue;
    auto [x, y] = prime_two_squares(p);
    return nonzero({scale * w1, scale * w2, scale * x, scale * y});
  }
}

std::vector<Rational> sum_of_squares(const Rational& q) {
  if (q < 0) throw std::domain_error("sum_of_squares of negative rational");
  std::vector<Rational> out;
  for (const auto& w : sum_of_squares(Integer(q.get_num() * q.get_den()))) {
    Rational r(w, q.get_den());
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

int legendre(const Integer& a, const Integer& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Simplest rational in (lo, hi) with lo >= 0; hi_inf marks an unbounded interval.
Rational simplest_positive(const Rational& lo, const Rational& hi, bool hi_inf) {
  Integer n = floor_q(lo);
  Rational cand(n + 1);
  if (hi_inf || cand < hi) return cand;
  // No integer strictly inside: lo in [n, n+1), hi <= n+1.
  if (lo == n) {
    Rational y = simplest_positive(Rational(1) / (hi - n), Rational(0), true);
    return Rational(n) + Rational(1) / y;
  }
  Rational y = simplest_positive(Rational(1) / (hi - n), Rational(1) / (lo - n), false);
  return Rational(n) + Rational(1) / y;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::invalid_argument("simplest_between: empty interval");
  if (lo < 0 && hi > 0) return Rational(0);
  if (lo >= 0) return simplest_positive(lo, hi, false);
  return -simplest_positive(-hi, -lo, false);
}

}  // namespace witt
