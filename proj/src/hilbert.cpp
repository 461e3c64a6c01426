#include "witt/hilbert.hpp"

#include <algorithm>
#include <set>

namespace witt {

namespace {

// x = p^v * u with u a p-adic unit (as a rational with numerator and denominator prime to p).
int split_p(const Rational& x, const Integer& p, Rational& unit) {
  Integer num = x.get_num(), den = x.get_den();
  int v = 0;
  while (num % p == 0) {
    num /= p;
    ++v;
  }
  while (den % p == 0) {
    den /= p;
    --v;
  }
  unit = Rational(num, den);
  return v;
}

// Unit rational u = n/d with n, d odd: value mod 8 of n*d (same class modulo squares of units).
long mod8(const Rational& u) {
  Integer m = u.get_num() * u.get_den();
  Integer r = m % 8;
  if (r < 0) r += 8;
  return r.get_si();
}

int legendre_unit(const Rational& u, const Integer& p) {
  Integer m = u.get_num() * u.get_den();
  return legendre(m, p);
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Integer& p) {
  if (a == 0 || b == 0) throw std::domain_error("Hilbert symbol of zero");
  if (p == 0) return (a < 0 && b < 0) ? -1 : 1;
  Rational u, w;
  const int alpha = split_p(a, p, u);
  const int beta = split_p(b, p, w);
  if (p == 2) {
    const long um = mod8(u), wm = mod8(w);
    const long eu = ((um - 1) / 2) % 2, ew = ((wm - 1) / 2) % 2;
    const long ou = ((um * um - 1) / 8) % 2, ow = ((wm * wm - 1) / 8) % 2;
    const long e = (eu * ew + alpha * ow + beta * ou) % 2;
    return (e % 2 == 0) ? 1 : -1;
  }
  int s = 1;
  const Integer pm4 = p % 4;
  if ((alpha * beta) % 2 != 0 && pm4 == 3) s = -s;
  if (beta % 2 != 0) s *= legendre_unit(u, p);
  if (alpha % 2 != 0) s *= legendre_unit(w, p);
  return s;
}

std::vector<Integer> relevant_primes(const std::vector<Rational>& entries) {
  std::set<Integer> ps{Integer(2)};
  for (const auto& e : entries) {
    for (const Integer* n : {&e.get_num(), &e.get_den()}) {
      if (*n == 0 || *n == 1 || *n == -1) continue;
      for (const auto& [p, k] : factor_integer(*n)) ps.insert(p);
    }
  }
  return {ps.begin(), ps.end()};
}

bool is_local_square(const Rational& x, const Integer& p) {
  if (x == 0) return true;
  if (p == 0) return x > 0;
  Rational u;
  const int v = split_p(x, p, u);
  if (v % 2 != 0) return false;
  if (p == 2) return mod8(u) == 1;
  return legendre_unit(u, p) == 1;
}

bool locally_isotropic(const std::vector<Rational>& entries, const Integer& p) {
  const std::size_t n = entries.size();
  if (p == 0) {
    bool pos = false, neg = false;
    for (const auto& e : entries) (e > 0 ? pos : neg) = true;
    return pos && neg;
  }
  if (n <= 1) return false;
  if (n == 2) return is_local_square(-entries[0] * entries[1], p);
  if (n == 3) {
    const Rational& a = entries[0];
    return hilbert_symbol(-a * entries[1], -a * entries[2], p) == 1;
  }
  if (n == 4) {
    Rational d = 1;
    for (const auto& e : entries) d *= e;
    if (!is_local_square(d, p)) return true;
    int eps = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) eps *= hilbert_symbol(entries[i], entries[j], p);
    return eps == hilbert_symbol(Rational(-1), Rational(-1), p);
  }
  return true;
}

bool isotropic_over_Q(const QForm& q) {
  const auto nf = normalize(q);
  const auto& e = nf.form.entries();
  if (e.size() <= 1) return false;
  if (!locally_isotropic(e, Integer(0))) return false;
  if (e.size() >= 5) return true;
  if (e.size() == 2) return rational_sqrt(-e[0] * e[1]).has_value();
  for (const auto& p : relevant_primes(e))
    if (!locally_isotropic(e, p)) return false;
  return true;
}

std::optional<Integer> sqrt_mod_prime(const Integer& a_in, const Integer& p) {
  Integer a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return Integer(0);
  if (p == 2) return a;
  if (legendre(a, p) != 1) return std::nullopt;
  Integer r;
  if (p % 4 == 3) {
    const Integer e = (p + 1) / 4;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return r;
  }
  // Tonelli-Shanks.
  Integer q = p - 1;
  unsigned long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  Integer z = 2;
  while (legendre(z, p) != -1) ++z;
  Integer c, t, x, tmp;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  tmp = (q + 1) / 2;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), tmp.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    Integer tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    Integer b = c;
    for (unsigned long k = 0; k + i + 1 < m; ++k) b = (b * b) % p;
    x = (x * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return x;
}

namespace {

// sqrt of a modulo squarefree |n| via CRT, |result| <= |n|/2.
std::optional<Integer> sqrt_mod_squarefree(const Integer& a, const Integer& n_in) {
  Integer n = abs(n_in);
  if (n == 1) return Integer(0);
  Integer r = 0, mod = 1;
  for (const auto& [p, k] : factor_integer(n)) {
    auto s = sqrt_mod_prime(a, p);
    if (!s) return std::nullopt;
    // combine r mod `mod` with s mod p
    Integer inv;
    mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), p.get_mpz_t());
    Integer diff = (*s - r) % p;
    if (diff < 0) diff += p;
    Integer step = (diff * inv) % p;
    r += mod * step;
    mod *= p;
  }
  r %= n;
  if (r > n / 2) r -= n;
  return r;
}

// Integer solution of x^2 = a y^2 + b z^2 for squarefree integers a, b; Lagrange descent.
std::optional<std::array<Integer, 3>> legendre_int(Integer a, Integer b) {
  if (a < 0 && b < 0) return std::nullopt;
  if (a == 1) return std::array<Integer, 3>{1, 1, 0};
  if (b == 1) return std::array<Integer, 3>{1, 0, 1};
  if (a + b == 0) return std::array<Integer, 3>{0, 1, 1};
  bool swapped = false;
  if (abs(a) > abs(b)) {
    std::swap(a, b);
    swapped = true;
  }
  auto finish = [&](std::array<Integer, 3> s) -> std::optional<std::array<Integer, 3>> {
    if (swapped) std::swap(s[1], s[2]);
    return s;
  };
  if (abs(b) <= 1) {
    // |a| <= |b| <= 1, not both negative, a != 1, b != 1: a = b = -1 excluded; a=-1,b=1 handled.
    return std::nullopt;
  }
  auto r = sqrt_mod_squarefree(a, b);
  if (!r) return std::nullopt;
  Integer k = (*r * *r - a) / b;
  if (k == 0) {
    // r^2 = a: a is a square.
    return finish({*r, 1, 0});
  }
  // k = k0 * m^2, k0 squarefree.
  const Integer k0 = squarefree_part(k);
  const Integer m = isqrt(k / k0);
  auto sub = legendre_int(a, k0);
  if (!sub) return std::nullopt;
  const auto& [x1, y1, z1] = *sub;
  // (r + sqrt a)(x1 + y1 sqrt a) has norm b * (k0 m z1)^2
  Integer X = *r * x1 + a * y1;
  Integer Y = *r * y1 + x1;
  Integer Z = k0 * m * z1;
  Integer g = 0;
  mpz_gcd(g.get_mpz_t(), X.get_mpz_t(), Y.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Z.get_mpz_t());
  if (g > 1) {
    X /= g;
    Y /= g;
    Z /= g;
  }
  return finish({X, Y, Z});
}

}  // namespace

std::optional<std::array<Rational, 3>> solve_legendre(const Rational& a, const Rational& b) {
  if (a == 0 || b == 0) throw std::domain_error("solve_legendre with zero coefficient");
  const Integer sa = squarefree_part(a), sb = squarefree_part(b);
  const Rational ua = *rational_sqrt(a / Rational(sa)), ub = *rational_sqrt(b / Rational(sb));
  auto s = legendre_int(sa, sb);
  if (!s) return std::nullopt;
  // x^2 = sa y^2 + sb z^2 = a (y/ua)^2 + b (z/ub)^2
  std::array<Rational, 3> out{Rational((*s)[0]), Rational((*s)[1]) / ua, Rational((*s)[2]) / ub};
  for (auto& v : out) v.canonicalize();
  if (out[0] * out[0] != a * out[1] * out[1] + b * out[2] * out[2]) throw std::logic_error("Legendre solution check failed");
  return out;
}

namespace {

std::optional<std::vector<Rational>> iso3(const std::vector<Rational>& e) {
  // e0 x^2 + e1 y^2 + e2 z^2 = 0  <=>  x^2 = (-e1/e0) y^2 + (-e2/e0) z^2
  auto s = solve_legendre(-e[1] / e[0], -e[2] / e[0]);
  if (!s) return std::nullopt;
  return std::vector<Rational>{(*s)[0], (*s)[1], (*s)[2]};
}

std::vector<Rational> embed(const std::vector<Rational>& sub, const std::vector<std::size_t>& idx, std::size_t n) {
  std::vector<Rational> v(n, Rational(0));
  for (std::size_t i = 0; i < idx.size(); ++i) v[idx[i]] = sub[i];
  return v;
}

std::optional<std::vector<Rational>> subform_vector(const std::vector<Rational>& e, std::size_t size) {
  const std::size_t n = e.size();
  std::vector<std::size_t> idx(size);
  std::optional<std::vector<Rational>> found;
  auto rec = [&](auto&& self, std::size_t start, std::size_t depth) -> void {
    if (found) return;
    if (depth == size) {
      std::vector<Rational> sub;
      for (auto i : idx) sub.push_back(e[i]);
      std::optional<std::vector<Rational>> v;
      if (size == 2) {
        auto r = rational_sqrt(-sub[1] / sub[0]);
        if (r) v = std::vector<Rational>{*r, Rational(1)};
      } else {
        v = iso3(sub);
      }
      if (v) found = embed(*v, idx, n);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[depth] = i;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return found;
}

// t with <left, -t> and <right, t> both isotropic (left of dim 2, right of dim 2 or 3), for an
// isotropic form left + right. A local square class t_p is fixed at each bad place, then
// t = sign * P * q with q a fresh prime; reciprocity settles the place q.
Rational split_value(const std::vector<Rational>& left, const std::vector<Rational>& right) {
  std::vector<Rational> all = left;
  all.insert(all.end(), right.begin(), right.end());
  auto ok_at = [&](const Rational& t, const Integer& p) {
    std::vector<Rational> l = left, r = right;
    l.push_back(-t);
    r.push_back(t);
    return locally_isotropic(l, p) && locally_isotropic(r, p);
  };
  Rational sign = 1;
  if (!ok_at(sign, Integer(0))) sign = -1;
  if (!ok_at(sign, Integer(0))) throw std::logic_error("split_value: no real sign");
  const auto primes = relevant_primes(all);
  std::vector<Rational> classes;
  Integer P = 1;
  for (const auto& p : primes) {
    std::vector<Rational> cand;
    if (p == 2) {
      for (long c : {1, 3, 5, 7, 2, 6, 10, 14}) cand.emplace_back(c);
    } else {
      Integer n = 2;
      while (legendre(n, p) != -1) ++n;
      cand = {Rational(1), Rational(n), Rational(p), Rational(n * p)};
    }
    bool found = false;
    for (const auto& c : cand) {
      if (!ok_at(sign * c, p)) continue;
      classes.push_back(sign * c);
      if (c.get_num() % p == 0) P *= p;
      found = true;
      break;
    }
    if (!found) throw std::logic_error("split_value: no local class");
  }
  auto matches = [&](const Rational& t) {
    for (std::size_t i = 0; i < primes.size(); ++i)
      if (!is_local_square(t / classes[i], primes[i])) return false;
    return true;
  };
  const Rational base = sign * Rational(P);
  if (matches(base)) return base;
  Integer q = 2;
  for (long iter = 0; iter < 2000000; ++iter) {
    mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
    if (std::binary_search(primes.begin(), primes.end(), q)) continue;
    const Rational t = base * Rational(q);
    if (matches(t)) return t;
  }
  throw std::runtime_error("split_value: prime search exhausted");
}

std::optional<std::vector<Rational>> iso4(const std::vector<Rational>& e) {
  // No isotropic 2- or 3-subform: e0 x0^2 + e1 x1^2 = t z^2 and e2 x2^2 + e3 x3^2 = -t w^2.
  const Rational t = split_value({e[0], e[1]}, {e[2], e[3]});
  auto l = iso3({e[0], e[1], -t});
  auto r = iso3({e[2], e[3], t});
  if (!l || !r || (*l)[2] == 0 || (*r)[2] == 0) throw std::logic_error("iso4: local-global split failed");
  const Rational z = (*l)[2], w = (*r)[2];
  return std::vector<Rational>{(*l)[0] * w, (*l)[1] * w, (*r)[0] * z, (*r)[1] * z};
}

}  // namespace

std::optional<std::vector<Rational>> isotropic_vector_Q(const std::vector<Rational>& entries) {
  for (const auto& x : entries)
    if (x == 0) throw NonsingularRequired();
  const std::size_t n = entries.size();
  if (n < 2) return std::nullopt;
  if (!isotropic_over_Q(QForm(entries))) return std::nullopt;
  if (auto v = subform_vector(entries, 2)) return v;
  if (n >= 3)
    if (auto v = subform_vector(entries, 3)) return v;
  if (n == 3) throw std::logic_error("isotropic ternary form without a Legendre solution");
  if (n == 4) {
    if (auto v = iso4(entries)) return v;
    throw std::runtime_error("quaternary isotropic vector search exhausted");
  }
  // n >= 5: choose five entries of mixed sign and use <e0,e1> + <e2,e3,e4>.
  std::vector<std::size_t> pos, neg;
  for (std::size_t i = 0; i < n; ++i) (entries[i] > 0 ? pos : neg).push_back(i);
  std::vector<std::size_t> pick;
  pick.push_back(pos[0]);
  pick.push_back(neg[0]);
  for (std::size_t i = 0; i < n && pick.size() < 5; ++i)
    if (i != pos[0] && i != neg[0]) pick.push_back(i);
  std::vector<Rational> e;
  for (auto i : pick) e.push_back(entries[i]);
  // A 4-dimensional isotropic subform among the five, if any.
  for (std::size_t skip = 0; skip < 5; ++skip) {
    std::vector<Rational> sub;
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < 5; ++i)
      if (i != skip) {
        sub.push_back(e[i]);
        idx.push_back(pick[i]);
      }
    if (!isotropic_over_Q(QForm(sub))) continue;
    if (auto v = iso4(sub)) return embed(*v, idx, n);
  }
  // All 4-subforms anisotropic: e0 x0^2 + e1 x1^2 = t z^2 and <e2, e3, e4, t> isotropic.
  const Rational t = split_value({e[0], e[1]}, {e[2], e[3], e[4]});
  auto l = iso3({e[0], e[1], -t});
  auto r = isotropic_vector_Q({e[2], e[3], e[4], t});
  if (l && r && (*l)[2] != 0 && (*r)[3] != 0) {
    const Rational z = (*l)[2], w = (*r)[3];
    return embed({(*l)[0] * w, (*l)[1] * w, (*r)[0] * z, (*r)[1] * z, (*r)[2] * z}, pick, n);
  }
  throw std::runtime_error("isotropic vector search exhausted");
}

std::optional<std::vector<Rational>> represent_Q(const std::vector<Rational>& entries, const Rational& c) {
  if (c == 0) throw std::domain_error("represent_Q of zero");
  std::vector<Rational> ext = entries;
  ext.push_back(-c);
  auto v = isotropic_vector_Q(ext);
  if (!v) return std::nullopt;
  const Rational last = v->back();
  v->pop_back();
  if (last != 0) {
    for (auto& x : *v) x /= last;
    return v;
  }
  // The form itself is isotropic (v is isotropic for it), hence universal.
  std::size_t j = 0;
  while ((*v)[j] == 0) ++j;
  std::vector<Rational> w(entries.size(), Rational(0));
  w[j] = 1;
  const Rational bvw = entries[j] * (*v)[j];
  const Rational qw = entries[j];
  const Rational alpha = (c - qw) / (2 * bvw);
  for (std::size_t i = 0; i < w.size(); ++i) w[i] += alpha * (*v)[i];
  return w;
}

}  // namespace witt
