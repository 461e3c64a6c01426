#include "witt/poly.hpp"

#include <sstream>

namespace witt {

QPoly qpoly(std::initializer_list<long> low_first) {
  std::vector<Rational> v;
  for (long c : low_first) v.emplace_back(c);
  return QPoly(std::move(v), Rational(0));
}

std::string to_text(const QPoly& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p.coeff(static_cast<std::size_t>(d));
    if (c == 0) continue;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? "-" : "+");
    }
    first = false;
    if (d == 0) {
      out << to_text(c);
      continue;
    }
    if (c != 1) out << to_text(c) << "*";
    out << var;
    if (d > 1) out << "^" << d;
  }
  return out.str();
}

std::vector<Integer> primitive_integer_coeffs(const QPoly& p) {
  std::vector<Integer> out;
  if (p.is_zero()) return out;
  Integer den = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Integer g = 0;
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& v : out) v /= g;
  return out;
}

QPoly from_integer_coeffs(const std::vector<Integer>& c) {
  std::vector<Rational> v;
  v.reserve(c.size());
  for (const auto& x : c) v.emplace_back(x);
  return QPoly(std::move(v), Rational(0));
}

Rational eval(const QPoly& p, const Rational& x) { return p(x); }

int sign_at(const QPoly& p, const Rational& x) { return sgn(p(x)); }

QPoly squarefree(const QPoly& p) {
  if (p.degree() <= 0) return QPoly::constant(Rational(1));
  QPoly g = gcd(p, p.derivative());
  return (p / g).monic();
}

int multiplicity(const QPoly& p, const QPoly& f) {
  if (p.is_zero()) throw std::domain_error("multiplicity in zero polynomial");
  int m = 0;
  QPoly q = p;
  while (true) {
    auto [quo, rem] = q.divmod(f);
    if (!rem.is_zero()) return m;
    q = std::move(quo);
    ++m;
  }
}

Integer height(const QPoly& p) {
  Integer h = 0;
  for (const auto& c : p.coeffs()) {
    Integer a = abs(c.get_num()), b = c.get_den();
    if (a > h) h = a;
    if (b > h) h = b;
  }
  return h;
}

}  // namespace witt
