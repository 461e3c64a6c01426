#include "witt/witness.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <functional>
#include <set>

#include "witt/factor.hpp"
#include "witt/hilbert.hpp"
#include "witt/places.hpp"
#include "witt/real_roots.hpp"
#include "witt/simplex.hpp"

namespace witt {

namespace {

constexpr std::size_t kEnumerationCap = 250000;

// Values 0, p1, -p1, p2, -p2, ... ; odd indices are the "positive" representatives.
template <class E>
std::vector<E> signed_values(const E& zero, const std::vector<E>& positives) {
  std::vector<E> v{zero};
  for (const auto& p : positives) {
    v.push_back(p);
    v.push_back(-p);
  }
  return v;
}

// Exhaustive search over n x q with coordinates from growing value lists. levels[k] is the size of
// the value prefix allowed at level k; vectors already covered by level k-1 are skipped. The last
// coordinate is most significant and the first nonzero coordinate is a positive representative.
template <class E>
std::optional<std::pair<std::size_t, std::vector<E>>> enumerate(const std::vector<E>& entries,
                                                                 const std::vector<E>& values,
                                                                 const std::vector<std::size_t>& levels,
                                                                 std::size_t max_copies, const Deadline& deadline) {
  const std::size_t dim = entries.size();
  std::vector<std::vector<E>> table(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (const auto& v : values) table[i].push_back(entries[i] * v * v);
  std::size_t steps = 0;
  for (std::size_t n = 1; n <= max_copies; ++n) {
    const std::size_t N = n * dim;
    std::size_t prev = 1;
    for (std::size_t s : levels) {
      double total = 1;
      for (std::size_t k = 0; k < N; ++k) total *= static_cast<double>(s);
      if (total > static_cast<double>(kEnumerationCap)) break;
      std::vector<std::size_t> idx(N, 0);
      while (true) {
        // advance the counter (coordinate 0 least significant)
        std::size_t k = 0;
        while (k < N && ++idx[k] == s) idx[k++] = 0;
        if (k == N) break;
        if (++steps % 4096 == 0) deadline.check();
        bool fresh = false;
        for (auto i : idx)
          if (i >= prev) fresh = true;
        if (!fresh) continue;
        std::size_t first = 0;
        while (idx[first] == 0) ++first;
        if (idx[first] % 2 == 0) continue;
        E acc = table[0][0];
        for (std::size_t c = 0; c < N; ++c)
          if (idx[c]) acc = acc + table[c % dim][idx[c]];
        if (detail::elem_is_zero(acc)) {
          std::vector<E> x;
          for (auto i : idx) x.push_back(values[i]);
          return std::make_pair(n, x);
        }
      }
      prev = s;
    }
  }
  return std::nullopt;
}

std::vector<Rational> integer_values(long h) {
  std::vector<Rational> pos;
  for (long k = 1; k <= h; ++k) pos.emplace_back(k);
  return signed_values(Rational(0), pos);
}

std::vector<std::size_t> integer_levels(long h) {
  std::vector<std::size_t> lv;
  for (long k = 1; k <= h; ++k) lv.push_back(static_cast<std::size_t>(2 * k + 1));
  return lv;
}

// Scale a rational vector to coprime integers.
std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer den = 1, g = 0;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (auto& x : v) {
    x *= den;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
  }
  if (g != 0)
    for (auto& x : v) x /= g;
  return v;
}

// Witness for n x <entries> with squarefree-normalized rational entries.
std::optional<std::pair<std::size_t, std::vector<Rational>>> rational_witness(const std::vector<Rational>& e,
                                                                             const WitnessBounds& b) {
  if (auto hit = enumerate(e, integer_values(b.height_bound), integer_levels(b.height_bound), b.max_copies,
                           b.deadline))
    return hit;
  bool pos = false, neg = false;
  for (const auto& x : e) (x > 0 ? pos : neg) = true;
  if (!pos || !neg) return std::nullopt;
  for (std::size_t n = 1; n <= b.max_copies; ++n) {
    b.deadline.check();
    std::vector<Rational> ne;
    for (std::size_t k = 0; k < n; ++k) ne.insert(ne.end(), e.begin(), e.end());
    if (auto v = isotropic_vector_Q(ne)) return std::make_pair(n, primitive(*v));
  }
  return std::nullopt;
}

}  // namespace

std::optional<IsotropyWitness<Rational>> witness_search(const QForm& q, const WitnessBounds& bounds) {
  try {
    const auto nf = normalize(q);
    auto hit = rational_witness(nf.form.entries(), bounds);
    if (!hit) return std::nullopt;
    IsotropyWitness<Rational> w{hit->first, hit->second};
    for (std::size_t c = 0; c < w.vectors.size(); ++c) w.vectors[c] /= nf.scales[c % q.dim()];
    w.vectors = primitive(w.vectors);
    if (!verify_witness(q, w)) throw std::logic_error("rational witness failed verification");
    return w;
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

std::optional<IsotropyWitness<NFElem>> witness_search(const NFForm& q, const WitnessBounds& bounds) {
  try {
    NFPtr K;
    bool all_rational = true;
    for (const auto& e : q.entries()) {
      if (e.field()) K = e.field();
      if (!e.is_rational()) all_rational = false;
    }
    auto lift = [&](const std::pair<std::size_t, std::vector<Rational>>& hit) {
      IsotropyWitness<NFElem> w;
      w.copies = hit.first;
      for (const auto& x : hit.second) w.vectors.emplace_back(K, x);
      return w;
    };
    if (all_rational) {
      std::vector<Rational> e;
      for (const auto& x : q.entries()) e.push_back(x.rational_value());
      auto w = witness_search(QForm(e), bounds);
      if (!w) return std::nullopt;
      return lift({w->copies, w->vectors});
    }
    const std::size_t dim = q.dim();
    // A pair with -e_i/e_j a square in K or a positive rational.
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = i + 1; j < dim; ++j) {
        const NFElem r = -(q[i] / q[j]);
        if (auto s = r.sqrt()) {
          IsotropyWitness<NFElem> w{1, std::vector<NFElem>(dim, NFElem(K, Rational(0)))};
          w.vectors[i] = NFElem(K, Rational(1));
          w.vectors[j] = *s;
          return w;
        }
        if (r.is_rational() && r.rational_value() > 0) {
          const auto sq = sum_of_squares(r.rational_value());
          if (sq.size() > bounds.max_copies) continue;
          IsotropyWitness<NFElem> w{sq.size(), std::vector<NFElem>(sq.size() * dim, NFElem(K, Rational(0)))};
          w.vectors[i] = NFElem(K, Rational(1));
          for (std::size_t k = 0; k < sq.size(); ++k) w.vectors[k * dim + j] = NFElem(K, sq[k]);
          return w;
        }
      }
    // Bounded enumeration over small integral combinations of the power basis.
    const int deg = K->degree();
    std::vector<NFElem> pos;
    std::vector<std::size_t> levels;
    for (long h = 1; h <= bounds.height_bound; ++h) {
      std::vector<long> c(static_cast<std::size_t>(deg), -h);
      while (true) {
        long m = 0;
        for (long x : c) m = std::max(m, std::abs(x));
        long lead = 0;
        for (long x : c)
          if (x != 0) lead = x;
        if (m == h && lead > 0) {
          std::vector<Rational> r;
          for (long x : c) r.emplace_back(x);
          pos.emplace_back(K, QPoly(r, Rational(0)));
        }
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > h) c[k++] = -h;
        if (k == c.size()) break;
      }
      levels.push_back(2 * pos.size() + 1);
    }
    auto values = signed_values(NFElem(K, Rational(0)), pos);
    auto hit = enumerate(q.entries(), values, levels, bounds.max_copies, bounds.deadline);
    if (!hit) return std::nullopt;
    IsotropyWitness<NFElem> w{hit->first, hit->second};
    if (!verify_witness(q, w)) throw std::logic_error("number-field witness failed verification");
    return w;
  } catch (const BudgetExhausted&) {
    return std::nullopt;
  }
}

namespace {

using Quat = std::array<Rational, 4>;  // a + b i + c j + d k

Quat qmul(const Quat& x, const Quat& y) {
  return {x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3], x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2],
          x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1], x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]};
}

Quat quat_of_norm(const Rational& d) {
  const auto s = sum_of_squares(d);
  Quat q{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (std::size_t k = 0; k < s.size(); ++k) q[k] = s[k];
  return q;
}

// Imaginary quaternion of norm c, when c is a sum of three rational squares.
std::optional<Quat> imaginary_of_norm(const Rational& c) {
  Integer m = c.get_num() * c.get_den();
  while (m % 4 == 0) m /= 4;
  if (m % 8 == 7) return std::nullopt;
  const auto s = sum_of_squares(c);
  if (s.size() > 3) return std::nullopt;
  Quat q{Rational(0), Rational(0), Rational(0), Rational(0)};
  for (std::size_t k = 0; k < s.size(); ++k) q[k + 1] = s[k];
  return q;
}

Rational qnorm(const Quat& x) { return x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]; }

void put(std::vector<Rational>& v, std::size_t off, const Quat& q) {
  for (std::size_t k = 0; k < 4; ++k) v[off + k] = q[k];
}

}  // namespace

// Q^8 = H + H. Left multiplication by a quaternion a scales inner products by |a|^2, so
// {a, a y} is orthogonal with norms |a|^2, |a|^2 |y|^2 for y imaginary, and {a z, a y z} (z an
// imaginary unit direction orthogonal to y) spans the rest of that block. Two weights share a block
// when their ratio is a sum of three squares; among any three weights some pair qualifies.
std::optional<std::vector<std::vector<Rational>>> orthogonal_representation(const std::vector<Rational>& d,
                                                                             std::size_t max_n) {
  for (const auto& x : d)
    if (x <= 0) throw std::domain_error("orthogonal_representation needs positive weights");
  const std::size_t r = d.size();
  if (r == 0) return std::vector<std::vector<Rational>>{};
  // Disjoint coordinate blocks from sums of squares.
  std::vector<std::vector<Rational>> blocks;
  std::size_t used = 0;
  for (const auto& x : d) {
    blocks.push_back(sum_of_squares(x));
    used += blocks.back().size();
  }
  if (used <= max_n) {
    std::vector<std::vector<Rational>> out;
    std::size_t off = 0;
    for (const auto& bl : blocks) {
      std::vector<Rational> w(used, Rational(0));
      for (std::size_t k = 0; k < bl.size(); ++k) w[off + k] = bl[k];
      off += bl.size();
      out.push_back(std::move(w));
    }
    return out;
  }
  if (max_n < 8 || r > 4) return std::nullopt;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      auto y = imaginary_of_norm(d[j] / d[i]);
      if (!y) continue;
      std::vector<std::size_t> rest;
      for (std::size_t k = 0; k < r; ++k)
        if (k != i && k != j) rest.push_back(k);
      std::vector<std::vector<Rational>> out(r, std::vector<Rational>(8, Rational(0)));
      const Quat a = quat_of_norm(d[i]);
      put(out[i], 0, a);
      put(out[j], 0, qmul(a, *y));
      if (rest.empty()) return out;
      const Quat b = quat_of_norm(d[rest[0]]);
      put(out[rest[0]], 4, b);
      if (rest.size() == 1) return out;
      // Last weight: represent it on the orthogonal complement of the three placed vectors.
      Quat z{Rational(0), Rational(0), Rational(0), Rational(0)};
      for (std::size_t m = 1; m <= 3; ++m) {
        Quat e{Rational(0), Rational(0), Rational(0), Rational(0)};
        e[m] = 1;
        z = qmul(*y, e);
        z[0] = 0;  // imaginary part of y e is y x e, orthogonal to y
        if (qnorm(z) != 0) break;
      }
      std::vector<std::vector<Rational>> basis;
      std::vector<Rational> norms;
      auto add = [&](std::size_t off, const Quat& q) {
        std::vector<Rational> v(8, Rational(0));
        put(v, off, q);
        norms.push_back(qnorm(q));
        basis.push_back(std::move(v));
      };
      add(0, qmul(a, z));
      add(0, qmul(a, qmul(*y, z)));
      for (std::size_t m = 1; m <= 3; ++m) {
        Quat e{Rational(0), Rational(0), Rational(0), Rational(0)};
        e[m] = 1;
        add(4, qmul(b, e));
      }
      auto c = represent_Q(norms, d[rest[1]]);
      if (!c) continue;
      for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t t = 0; t < 8; ++t) out[rest[1]][t] += (*c)[k] * basis[k][t];
      return out;
    }
  return std::nullopt;
}

namespace {

// Polynomial values for the Q(t) enumeration: integer coefficients, degree <= d, height <= h.
void polynomial_values(int max_deg, long max_h, std::vector<QPoly>& pos, std::vector<std::size_t>& levels) {
  for (int d = 0; d <= max_deg; ++d)
    for (long h = 1; h <= max_h; ++h) {
      std::vector<long> c(static_cast<std::size_t>(d + 1), -h);
      while (true) {
        long m = 0;
        for (long x : c) m = std::max(m, std::abs(x));
        if (m == h && c.back() > 0) {
          bool seen = false;
          QPoly p = from_integer_coeffs(std::vector<Integer>(c.begin(), c.end()));
          for (const auto& old : pos)
            if (old == p) seen = true;
          if (!seen) pos.push_back(p);
        }
        std::size_t k = 0;
        while (k < c.size() && ++c[k] > h) c[k++] = -h;
        if (k == c.size()) break;
      }
      levels.push_back(2 * pos.size() + 1);
    }
}

// Base factors for sum-of-squares generators: (t - r) over a rational grid around the breakpoints
// and the irreducible factors of the entries of degree >= 2.
std::vector<QPoly> generator_factors(const std::vector<QPoly>& entries) {
  std::set<Rational> grid{Rational(0), Rational(1), Rational(-1)};
  auto roots = breakpoints(entries);
  for (auto& r : roots) {
    if (r.is_rational()) {
      grid.insert(r.rational_value());
      continue;
    }
    while (r.hi() - r.lo() > Rational(1, 16)) r.refine();
    grid.insert(simplest_between(r.lo(), r.hi()));
  }
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
    const Rational a = roots[i].hi(), b = roots[i + 1].lo();
    if (a < b) grid.insert(simplest_between(a, b));
  }
  if (!roots.empty()) {
    Integer lo, hi;
    mpz_fdiv_q(lo.get_mpz_t(), roots.front().lo().get_num_mpz_t(), roots.front().lo().get_den_mpz_t());
    mpz_cdiv_q(hi.get_mpz_t(), roots.back().hi().get_num_mpz_t(), roots.back().hi().get_den_mpz_t());
    grid.insert(Rational(lo - 1));
    grid.insert(Rational(hi + 1));
  }
  std::vector<QPoly> out;
  for (const auto& r : grid) out.push_back(QPoly(std::vector<Rational>{-r, Rational(1)}, Rational(0)));
  std::set<std::vector<Rational>> seen;
  for (const auto& e : entries)
    for (const auto& [f, m] : factor(e).factors)
      if (f.degree() >= 2 && seen.insert(f.coeffs()).second) out.push_back(f);
  return out;
}

// Products of base factors with total degree exactly deg (multisets, deterministic order).
void products_of_degree(const std::vector<QPoly>& base, int deg, std::size_t cap, std::vector<QPoly>& out) {
  std::function<void(std::size_t, int, const QPoly&)> rec = [&](std::size_t from, int left, const QPoly& acc) {
    if (out.size() >= cap) return;
    if (left == 0) {
      out.push_back(acc);
      return;
    }
    for (std::size_t i = from; i < base.size(); ++i)
      if (base[i].degree() <= left) rec(i, left - base[i].degree(), acc * base[i]);
  };
  rec(0, deg, QPoly::constant(Rational(1)));
}

struct WeightedSquare {
  Rational weight;
  QPoly poly;
};

// sigma = sum_j lambda_j g_j^2 rewritten as sum d_k q_k^2 with at most deg+1 terms (LDL of the Gram matrix).
std::vector<WeightedSquare> ldl_squares(const std::vector<std::pair<Rational, QPoly>>& terms) {
  int deg = 0;
  for (const auto& [l, g] : terms) deg = std::max(deg, g.degree());
  const std::size_t m = static_cast<std::size_t>(deg + 1);
  std::vector<std::vector<Rational>> G(m, std::vector<Rational>(m, Rational(0)));
  for (const auto& [l, g] : terms)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) G[i][j] += l * g.coeff(i) * g.coeff(j);
  std::vector<WeightedSquare> out;
  for (std::size_t k = 0; k < m; ++k) {
    if (G[k][k] == 0) continue;  // positive semidefinite: the whole row vanishes
    const Rational d = G[k][k];
    std::vector<Rational> l(m, Rational(0));
    for (std::size_t i = k; i < m; ++i) l[i] = G[i][k] / d;
    for (std::size_t i = k; i < m; ++i)
      for (std::size_t j = k; j < m; ++j) G[i][j] -= d * l[i] * l[j];
    out.push_back({d, QPoly(l, Rational(0))});
  }
  if (out.size() > terms.size()) {
    out.clear();
    for (const auto& [l, g] : terms) out.push_back({l, g});
  }
  return out;
}

// Witness for normalized polynomial entries via a certificate sum e_i sigma_i = 0 with sigma_i sums
// of squares of generator polynomials, found by exact linear programming.
std::optional<std::pair<std::size_t, std::vector<QPoly>>> lp_witness(const std::vector<QPoly>& e,
                                                                    const WitnessBounds& b) {
  const std::size_t dim = e.size();
  const auto base = generator_factors(e);
  int emax = 0;
  for (const auto& x : e) emax = std::max(emax, x.degree());
  std::vector<QPoly> gens;
  const int top = std::min(3, b.degree_bound);  // rank <= 4 per entry
  for (int D = 0; D <= top; ++D) {
    const std::size_t cap = D <= 2 ? 2000 : 700;
    const std::size_t before = gens.size();
    products_of_degree(base, D, before + cap, gens);
    if (D > 0 && gens.size() == before) continue;
    b.deadline.check();
    const std::size_t rows = static_cast<std::size_t>(emax + 2 * D + 1);
    std::vector<std::vector<Rational>> A(rows + 1);
    std::vector<std::pair<std::size_t, std::size_t>> cols;  // (entry, generator)
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        const QPoly p = e[i] * gens[j] * gens[j];
        for (std::size_t r = 0; r < rows; ++r) A[r].push_back(p.coeff(r));
        A[rows].push_back(Rational(1));
        cols.emplace_back(i, j);
      }
    std::vector<Rational> rhs(rows + 1, Rational(0));
    rhs[rows] = 1;
    auto lam = feasible_point(A, rhs, b.deadline);
    if (!lam) continue;

    std::vector<std::vector<std::pair<Rational, QPoly>>> per(dim);
    for (std::size_t c = 0; c < cols.size(); ++c)
      if ((*lam)[c] != 0) per[cols[c].first].emplace_back((*lam)[c], gens[cols[c].second]);
    std::vector<std::vector<WeightedSquare>> squares(dim);
    std::vector<std::vector<std::vector<Rational>>> reps(dim);
    std::size_t n = 1;
    bool ok = true;
    for (std::size_t i = 0; i < dim && ok; ++i) {
      if (per[i].empty()) continue;
      squares[i] = ldl_squares(per[i]);
      std::vector<Rational> d;
      for (const auto& s : squares[i]) d.push_back(s.weight);
      auto r = orthogonal_representation(d, b.max_copies);
      if (!r) {
        ok = false;
        break;
      }
      reps[i] = *r;
      if (!r->empty()) n = std::max(n, r->front().size());
    }
    if (!ok) continue;
    std::vector<QPoly> x(n * dim, QPoly());
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t k = 0; k < squares[i].size(); ++k)
        for (std::size_t l = 0; l < reps[i][k].size(); ++l)
          if (reps[i][k][l] != 0) x[l * dim + i] += reps[i][k][l] * squares[i][k].poly;
    return std::make_pair(n, x);
  }
  return std::nullopt;
}

}  // namespace

std::optional<IsotropyWitness<RationalFunction>> witness_search(const TForm& q, const WitnessBounds& bounds) {
  const auto nf = normalize(q);
  const std::size_t dim = q.dim();
  std::vector<QPoly> e;
  for (const auto& x : nf.form.entries()) {
    if (!x.is_polynomial()) throw std::logic_error("normalized entry is not a polynomial");
    e.push_back(x.num());
  }
  auto finish = [&](std::size_t n, const std::vector<QPoly>& xs) -> std::optional<IsotropyWitness<RationalFunction>> {
    IsotropyWitness<RationalFunction> w;
    w.copies = n;
    for (std::size_t c = 0; c < xs.size(); ++c) w.vectors.push_back(RationalFunction(xs[c]) / nf.scales[c % dim]);
    QPoly den = QPoly::constant(Rational(1));
    for (const auto& x : w.vectors) den = den / gcd(den, x.den()) * x.den();
    std::vector<QPoly> polys;
    for (const auto& x : w.vectors) polys.push_back((x * RationalFunction(den)).num());
    // Clear rational content.
    Integer l = 1, g = 0;
    for (const auto& p : polys)
      for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (auto& p : polys) {
      p = Rational(l) * p;
      for (const auto& c : p.coeffs()) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
    }
    const Rational inv = Rational(1) / Rational(g);
    for (std::size_t c = 0; c < polys.size(); ++c) w.vectors[c] = RationalFunction(inv * polys[c]);
    if (!verify_witness(q, w)) throw std::logic_error("Q(t) witness failed verification");
    for (const auto& x : w.vectors)
      if (x.num().degree() > bounds.degree_bound) return std::nullopt;
    return w;
  };
  try {
    // Constant entries of both signs give a witness over Q.
    std::vector<std::size_t> cidx;
    std::vector<Rational> cvals;
    for (std::size_t i = 0; i < dim; ++i)
      if (e[i].degree() == 0) {
        cidx.push_back(i);
        cvals.push_back(e[i].coeff(0));
      }
    if (!cvals.empty())
      if (auto hit = rational_witness(cvals, bounds)) {
        std::vector<QPoly> xs(hit->first * dim, QPoly());
        for (std::size_t c = 0; c < hit->second.size(); ++c)
          xs[(c / cidx.size()) * dim + cidx[c % cidx.size()]] = QPoly::constant(hit->second[c]);
        if (auto w = finish(hit->first, xs)) return w;
      }
    std::vector<QPoly> pos;
    std::vector<std::size_t> levels;
    polynomial_values(std::min(1, bounds.degree_bound), std::min<long>(bounds.height_bound, 2), pos, levels);
    auto values = signed_values(QPoly(), pos);
    if (auto hit = enumerate(e, values, levels, std::min<std::size_t>(bounds.max_copies, 2), bounds.deadline))
      if (auto w = finish(hit->first, hit->second)) return w;
    if (auto hit = lp_witness(e, bounds))
      if (auto w = finish(hit->first, hit->second)) return w;
  } catch (const BudgetExhausted&) {
  }
  return std::nullopt;
}

}  // namespace witt
