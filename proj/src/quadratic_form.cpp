#include "witt/quadratic_form.hpp"

#include "witt/factor.hpp"

namespace witt {

NormalizedForm<Rational> normalize(const QForm& q) {
  std::vector<Rational> e, s;
  for (const auto& x : q.entries()) {
    const Integer sf = squarefree_part(x);
    const Rational ratio = x / Rational(sf);
    auto r = rational_sqrt(ratio);
    if (!r) throw std::logic_error("square class normalization failed");
    e.emplace_back(sf);
    s.push_back(*r);
  }
  return {QForm(std::move(e)), std::move(s)};
}

std::pair<RationalFunction, RationalFunction> square_class(const RationalFunction& f) {
  if (f.is_zero()) throw NonsingularRequired();
  // f = num/den = num*den / den^2
  const QPoly prod = f.num() * f.den();
  const Factorization fac = factor(prod);
  QPoly kept = QPoly::constant(Rational(1)), half = QPoly::constant(Rational(1));
  for (const auto& [p, m] : fac.factors) {
    if (m % 2 == 1) kept = kept * p;
    half = half * p.pow(static_cast<unsigned>(m / 2));
  }
  const Integer sf = squarefree_part(fac.unit);
  auto r = rational_sqrt(fac.unit / Rational(sf));
  if (!r) throw std::logic_error("square class normalization failed");
  const RationalFunction normalized(Rational(sf) * kept);
  const RationalFunction scale = RationalFunction(*r * half, f.den());
  return {normalized, scale};
}

NormalizedForm<RationalFunction> normalize(const TForm& q) {
  std::vector<RationalFunction> e, s;
  for (const auto& x : q.entries()) {
    auto [n, u] = square_class(x);
    e.push_back(n);
    s.push_back(u);
  }
  return {TForm(std::move(e)), std::move(s)};
}

NormalizedForm<NFElem> normalize(const NFForm& q) {
  std::vector<NFElem> s;
  for (const auto& x : q.entries()) s.push_back(one_like(x));
  return {q, std::move(s)};
}

}  // namespace witt
