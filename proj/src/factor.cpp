#include "witt/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>

namespace witt {

namespace {

// ---- polynomials over Z/p, p < 2^31, low degree first ----
using u64 = std::uint64_t;
using ModPoly = std::vector<u64>;

void mp_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

u64 mod_pow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 mod_inv(u64 a, u64 p) { return mod_pow(a, p - 2, p); }

ModPoly mp_sub(const ModPoly& a, const ModPoly& b, u64 p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  mp_trim(r);
  return r;
}

ModPoly mp_mul(const ModPoly& a, const ModPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  mp_trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mp_divmod(ModPoly a, const ModPoly& b, u64 p) {
  if (b.empty()) throw std::domain_error("mod-p division by zero");
  if (a.size() < b.size()) return {{}, a};
  ModPoly q(a.size() - b.size() + 1, 0);
  const u64 inv = mod_inv(b.back(), p);
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const u64 c = a.back() * inv % p;
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] = (a[i + shift] + p - c * b[i] % p) % p;
    a.pop_back();
    mp_trim(a);
  }
  mp_trim(q);
  return {q, a};
}

ModPoly mp_monic(ModPoly a, u64 p) {
  if (a.empty()) return a;
  const u64 inv = mod_inv(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly mp_gcd(ModPoly a, ModPoly b, u64 p) {
  while (!b.empty()) {
    auto r = mp_divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return mp_monic(a, p);
}

ModPoly mp_powmod(ModPoly base, Integer e, const ModPoly& m, u64 p) {
  ModPoly r{1};
  base = mp_divmod(base, m, p).second;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = mp_divmod(mp_mul(r, base, p), m, p).second;
    base = mp_divmod(mp_mul(base, base, p), m, p).second;
    e /= 2;
  }
  return r;
}

ModPoly mp_derivative(const ModPoly& a, u64 p) {
  ModPoly r;
  for (std::size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  mp_trim(r);
  return r;
}

// Equal-degree splitting (Cantor-Zassenhaus, odd p) of a monic squarefree product of degree-d factors.
void edf(const ModPoly& f, int d, u64 p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n == d) {
    out.push_back(f);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  while (true) {
    ModPoly a(static_cast<std::size_t>(n), 0);
    for (auto& c : a) c = rng() % p;
    mp_trim(a);
    if (a.size() < 2) continue;
    ModPoly b = mp_powmod(a, e, f, p);
    b = mp_sub(b, ModPoly{1}, p);
    ModPoly g = mp_gcd(f, b, p);
    const int dg = static_cast<int>(g.size()) - 1;
    if (dg > 0 && dg < n) {
      edf(g, d, p, rng, out);
      edf(mp_divmod(f, g, p).first, d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(ModPoly f, u64 p) {
  std::mt19937_64 rng(p * 7919 + f.size());
  std::vector<ModPoly> out;
  ModPoly h{0, 1};
  const ModPoly x{0, 1};
  for (int i = 1; 2 * i <= static_cast<int>(f.size()) - 1; ++i) {
    h = mp_powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = mp_gcd(f, mp_sub(h, x, p), p);
    if (g.size() > 1) {
      edf(g, i, p, rng, out);
      f = mp_divmod(f, g, p).first;
      h = mp_divmod(h, f, p).second;
    }
  }
  if (f.size() > 1) out.push_back(mp_monic(f, p));
  return out;
}

// ---- integer polynomials modulo M ----
using ZPoly = std::vector<Integer>;

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer modn(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

ZPoly zp_mod(ZPoly a, const Integer& m) {
  for (auto& c : a) c = modn(c, m);
  zp_trim(a);
  return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return zp_mod(r, m);
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  zp_trim(r);
  return r;
}

ZPoly to_z(const ModPoly& a) {
  ZPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

ModPoly to_mod(const ZPoly& a, u64 p) {
  ModPoly r;
  const Integer P(static_cast<unsigned long>(p));
  for (const auto& c : a) r.push_back(modn(c, P).get_ui());
  mp_trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> mp_bezout(const ModPoly& g, const ModPoly& h, u64 p) {
  // s*g + t*h = 1 mod p
  ModPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mp_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s2 = mp_sub(s0, mp_mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    auto t2 = mp_sub(t0, mp_mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const u64 inv = mod_inv(r0.back(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  return {s0, t0};
}

// Linear Hensel lifting of monic f = g*h (mod p) to modulus p^k.
std::pair<ZPoly, ZPoly> hensel_two(const ZPoly& f, const ModPoly& g0, const ModPoly& h0, u64 p, int k) {
  auto [s, t] = mp_bezout(g0, h0, p);
  ZPoly g = to_z(g0), h = to_z(h0);
  const Integer P(static_cast<unsigned long>(p));
  Integer pj = P;
  for (int j = 1; j < k; ++j) {
    const Integer next = pj * P;
    ZPoly e = zp_sub(f, zp_mul(g, h, next));
    e = zp_mod(e, next);
    for (auto& c : e) c /= pj;
    ModPoly em = to_mod(e, p);
    ModPoly dg = mp_divmod(mp_mul(em, t, p), g0, p).second;
    ModPoly dh = mp_divmod(mp_sub(em, mp_mul(dg, h0, p), p), g0, p).first;
    for (std::size_t i = 0; i < dg.size(); ++i) g[i] += pj * Integer(static_cast<unsigned long>(dg[i]));
    if (h.size() < dh.size()) h.resize(dh.size(), Integer(0));
    for (std::size_t i = 0; i < dh.size(); ++i) h[i] += pj * Integer(static_cast<unsigned long>(dh[i]));
    g = zp_mod(g, next);
    h = zp_mod(h, next);
    pj = next;
  }
  return {g, h};
}

void hensel_multi(const ZPoly& f, const std::vector<ModPoly>& facs, std::size_t lo, std::size_t hi,
                  u64 p, int k, const Integer& m, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zp_mod(f, m));
    return;
  }
  const std::size_t mid = (lo + hi) / 2;
  ModPoly g0{1}, h0{1};
  for (std::size_t i = lo; i < mid; ++i) g0 = mp_mul(g0, facs[i], p);
  for (std::size_t i = mid; i < hi; ++i) h0 = mp_mul(h0, facs[i], p);
  auto [g, h] = hensel_two(f, g0, h0, p, k);
  hensel_multi(g, facs, lo, mid, p, k, m, out);
  hensel_multi(h, facs, mid, hi, p, k, m, out);
}

ZPoly symmetric(ZPoly a, const Integer& m) {
  const Integer half = m / 2;
  for (auto& c : a) {
    c = modn(c, m);
    if (c > half) c -= m;
  }
  zp_trim(a);
  return a;
}

ZPoly primitive(ZPoly a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

// Exact division over Z; nullopt if b does not divide a.
std::optional<ZPoly> z_exact_div(ZPoly a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  while (!a.empty() && a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    if (a.back() % b.back() != 0) return std::nullopt;
    const Integer c = a.back() / b.back();
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    zp_trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

bool is_small_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Irreducible factors of a primitive squarefree integer polynomial with positive lc.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  const Integer lc = f.back();

  u64 best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (u64 p = 3; good < 5; p += 2) {
    if (!is_small_prime(p)) continue;
    if (lc % static_cast<unsigned long>(p) == 0) continue;
    ModPoly fm = to_mod(f, p);
    if (mp_gcd(fm, mp_derivative(fm, p), p).size() != 1) continue;
    auto facs = factor_mod_p(mp_monic(fm, p), p);
    ++good;
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1) return {f};
  }
  const u64 p = best_p;

  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer bound = abs(lc) * (isqrt(norm2) + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<unsigned long>(n));
  bound *= 2;
  int k = 1;
  Integer m(static_cast<unsigned long>(p));
  while (m <= bound) {
    m *= static_cast<unsigned long>(p);
    ++k;
  }

  // Monic associate modulo p^k.
  Integer inv;
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), m.get_mpz_t());
  ZPoly fmonic = f;
  for (auto& c : fmonic) c = modn(c * inv, m);

  std::vector<ZPoly> lifted;
  hensel_multi(fmonic, best, 0, best.size(), p, k, m, lifted);

  std::vector<ZPoly> result;
  ZPoly rest = f;
  std::vector<ZPoly> pool = lifted;
  std::size_t size = 1;
  while (2 * size <= pool.size()) {
    std::vector<std::size_t> idx(size);
    std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) -> bool {
      if (depth == size) {
        ZPoly cand{rest.back()};
        for (std::size_t i : idx) cand = zp_mul(cand, pool[i], m);
        cand = primitive(symmetric(cand, m));
        if (cand.size() < 2) return false;
        auto q = z_exact_div(rest, cand);
        if (!q) return false;
        result.push_back(cand);
        rest = *q;
        std::vector<ZPoly> next;
        for (std::size_t i = 0; i < pool.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) next.push_back(pool[i]);
        pool = std::move(next);
        return true;
      }
      for (std::size_t i = start; i < pool.size(); ++i) {
        idx[depth] = i;
        if (rec(i + 1, depth + 1)) return true;
      }
      return false;
    };
    if (!rec(0, 0)) ++size;
  }
  if (rest.size() > 1) result.push_back(primitive(rest));
  return result;
}

QPoly monic_q(const ZPoly& z) { return from_integer_coeffs(z).monic(); }

}  // namespace

bool poly_less(const QPoly& a, const QPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto ca = a.coeff(static_cast<std::size_t>(i)), cb = b.coeff(static_cast<std::size_t>(i));
    if (ca != cb) return ca < cb;
  }
  return false;
}

std::vector<std::pair<QPoly, int>> squarefree_decomposition(const QPoly& p) {
  std::vector<std::pair<QPoly, int>> out;
  if (p.degree() <= 0) return out;
  QPoly a = p.monic();
  QPoly b = gcd(a, a.derivative());
  QPoly c = a / b;
  QPoly d = a.derivative() / b - c.derivative();
  int i = 1;
  while (c.degree() > 0) {
    QPoly g = gcd(c, d);
    if (g.degree() > 0) out.emplace_back(g, i);
    c = c / g;
    d = d / g - c.derivative();
    ++i;
  }
  return out;
}

Factorization factor(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("factor of zero polynomial");
  Factorization out{p.lc(), {}};
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (const auto& z : zassenhaus(primitive_integer_coeffs(part))) out.factors.emplace_back(monic_q(z), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return poly_less(x.first, y.first); });
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() <= 0) return false;
  const auto f = factor(p);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

}  // namespace witt
