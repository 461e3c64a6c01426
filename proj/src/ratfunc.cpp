#include "witt/ratfunc.hpp"

#include <stdexcept>

namespace witt {

RationalFunction::RationalFunction(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = QPoly();
    den_ = QPoly::constant(Rational(1));
    return;
  }
  const QPoly g = gcd(num, den);
  QPoly n = num / g, d = den / g;
  const Rational l = d.lc();
  num_ = (Rational(1) / l) * n;
  den_ = d.monic();
}

Rational RationalFunction::constant_value() const {
  if (!is_constant()) throw std::logic_error("rational function is not constant");
  return num_.coeff(0);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_polynomial() && b.is_polynomial()) return RationalFunction(a.num_ * b.num_, QPoly::constant(Rational(1)), true);
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational function");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned e) const {
  return RationalFunction(num_.pow(e), den_.pow(e), true);
}

Rational RationalFunction::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_(at) / d;
}

std::string RationalFunction::to_text() const {
  auto wrap = [](const QPoly& p) {
    const std::string s = witt::to_text(p);
    int terms = 0;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
      if (p.coeffs()[i] != 0) ++terms;
    const bool simple = terms <= 1 && (p.degree() <= 0 || p.lc() == 1);
    return simple ? s : "(" + s + ")";
  };
  if (is_polynomial()) return witt::to_text(num_);
  return wrap(num_) + "/" + wrap(den_);
}

std::string to_text(const RationalFunction& f) { return f.to_text(); }

}  // namespace witt
