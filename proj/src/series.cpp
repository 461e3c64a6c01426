#include "witt/series.hpp"

#include <algorithm>
#include <sstream>

namespace witt {

SeriesElement::SeriesElement(NFPtr field, int val, std::vector<NFElem> coeffs, int prec)
    : field_(std::move(field)), val_(val), coeffs_(std::move(coeffs)), prec_(prec) {
  if (val_ > prec_) val_ = prec_;
  coeffs_.resize(static_cast<std::size_t>(prec_ - val_), NFElem(field_, Rational(0)));
  normalize();
}

SeriesElement SeriesElement::constant(NFPtr field, const NFElem& c, int prec) {
  if (c.is_zero()) return zero(field, prec);
  return SeriesElement(field, 0, {c}, prec);
}

void SeriesElement::normalize() {
  std::size_t k = 0;
  while (k < coeffs_.size() && coeffs_[k].is_zero()) ++k;
  if (k == 0) return;
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(k));
  val_ += static_cast<int>(k);
}

NFElem SeriesElement::coeff(int e) const {
  if (e >= prec_) throw PrecisionExhausted("coefficient beyond precision");
  if (e < val_) return NFElem(field_, Rational(0));
  return coeffs_[static_cast<std::size_t>(e - val_)];
}

const NFElem& SeriesElement::leading() const {
  if (is_indistinguishable_from_zero()) throw PrecisionExhausted("leading coefficient unknown");
  return coeffs_.front();
}

SeriesElement SeriesElement::operator-() const {
  SeriesElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

SeriesElement operator+(const SeriesElement& a, const SeriesElement& b) {
  const int prec = std::min(a.prec_, b.prec_);
  const int val = std::min(a.val_, b.val_);
  std::vector<NFElem> c;
  for (int e = val; e < prec; ++e) c.push_back(a.coeff(e) + b.coeff(e));
  return SeriesElement(a.field_ ? a.field_ : b.field_, val, std::move(c), prec);
}

SeriesElement operator*(const SeriesElement& a, const SeriesElement& b) {
  const int prec = std::min(a.prec_ + b.val_, b.prec_ + a.val_);
  const int val = a.val_ + b.val_;
  const NFPtr& f = a.field_ ? a.field_ : b.field_;
  std::vector<NFElem> c(static_cast<std::size_t>(std::max(0, prec - val)), NFElem(f, Rational(0)));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size() && i + j < c.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return SeriesElement(f, val, std::move(c), prec);
}

SeriesElement SeriesElement::inverse() const {
  const NFElem inv0 = leading().inverse();
  const std::size_t n = coeffs_.size();
  std::vector<NFElem> r(n, NFElem(field_, Rational(0)));
  r[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    NFElem acc(field_, Rational(0));
    for (std::size_t i = 1; i <= k; ++i) acc = acc + coeffs_[i] * r[k - i];
    r[k] = -(acc * inv0);
  }
  return SeriesElement(field_, -val_, std::move(r), -val_ + static_cast<int>(n));
}

SeriesElement SeriesElement::shifted(int k) const {
  return SeriesElement(field_, val_ + k, coeffs_, prec_ + k);
}

SeriesElement SeriesElement::truncated(int prec) const {
  if (prec >= prec_) return *this;
  std::vector<NFElem> c;
  for (int e = val_; e < prec; ++e) c.push_back(coeff(e));
  return SeriesElement(field_, std::min(val_, prec), std::move(c), prec);
}

std::optional<SeriesElement> SeriesElement::sqrt() const {
  if (is_indistinguishable_from_zero()) throw PrecisionExhausted("square root of unknown element");
  if (val_ % 2 != 0) return std::nullopt;
  auto s0 = coeffs_.front().sqrt();
  if (!s0) return std::nullopt;
  const std::size_t n = coeffs_.size();
  std::vector<NFElem> s(n, NFElem(field_, Rational(0)));
  s[0] = *s0;
  const NFElem inv2s0 = (NFElem(field_, Rational(2)) * *s0).inverse();
  for (std::size_t k = 1; k < n; ++k) {
    NFElem acc = coeffs_[k];
    for (std::size_t i = 1; i < k; ++i) acc = acc - s[i] * s[k - i];
    s[k] = acc * inv2s0;
  }
  return SeriesElement(field_, val_ / 2, std::move(s), val_ / 2 + static_cast<int>(n));
}

std::string SeriesElement::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << coeffs_[i].to_text() << ")*pi^" << (val_ + static_cast<int>(i));
  }
  if (!first) out << " + ";
  out << "O(pi^" << prec_ << ")";
  return out.str();
}

namespace {

SeriesElement eval_poly(const QPoly& p, const SeriesElement& x, const NFPtr& k, int prec) {
  SeriesElement acc = SeriesElement::zero(k, prec);
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + SeriesElement::constant(k, NFElem(k, p.coeff(static_cast<std::size_t>(i))), prec);
  return acc;
}

// t as a series in pi = p(t) around the class theta of t in Q[x]/(p).
SeriesElement t_series(const RealValuation& v, int prec) {
  const NFPtr& k = v.residue_field();
  const QPoly& p = v.prime();
  if (p.degree() == 1) {
    return SeriesElement(k, 0, {NFElem(k, -p.coeff(0)), NFElem(k, Rational(1))}, prec);
  }
  const SeriesElement pi(k, 1, {NFElem(k, Rational(1))}, prec);
  SeriesElement T = SeriesElement::constant(k, NFElem::generator(k), 1);
  const QPoly dp = p.derivative();
  int cur = 1;
  while (cur < prec) {
    cur = std::min(2 * cur, prec);
    SeriesElement Tw = T.truncated(cur);
    Tw = SeriesElement(k, 0, [&] {
      std::vector<NFElem> c;
      for (int e = 0; e < cur; ++e) c.push_back(e < T.precision() ? T.coeff(e) : NFElem(k, Rational(0)));
      return c;
    }(), cur);
    const SeriesElement f = eval_poly(p, Tw, k, cur) - pi.truncated(cur);
    const SeriesElement d = eval_poly(dp, Tw, k, cur);
    T = (Tw - f / d).truncated(cur);
  }
  return T;
}

}  // namespace

SeriesElement expand(const RationalFunction& f, const RealValuation& v, int prec) {
  const NFPtr& k = v.residue_field();
  if (f.is_zero()) return SeriesElement::zero(k, prec);
  if (v.is_infinity()) {
    // f(1/pi) = pi^(deg den - deg num) * rev(num)(pi) / rev(den)(pi)
    auto rev = [&](const QPoly& p, int w) {
      std::vector<NFElem> c;
      for (int i = p.degree(); i >= 0; --i) c.emplace_back(k, p.coeff(static_cast<std::size_t>(i)));
      return SeriesElement(k, 0, std::move(c), w);
    };
    const int shift = f.den().degree() - f.num().degree();
    const int w = prec - shift + 1;
    return (rev(f.num(), w) / rev(f.den(), w)).shifted(shift).truncated(prec);
  }
  const int a = multiplicity(f.num(), v.prime()), b = multiplicity(f.den(), v.prime());
  const int w = prec + a + b + 1;
  const SeriesElement T = t_series(v, w);
  return (eval_poly(f.num(), T, k, w) / eval_poly(f.den(), T, k, w)).truncated(prec);
}

std::optional<std::array<SeriesElement, 3>> hensel_lift_conic(const RationalFunction& a, const RationalFunction& b,
                                                              const RealValuation& v, int target_precision) {
  if (a.is_zero() || b.is_zero()) throw ZeroFunction();
  const NFPtr& k = v.residue_field();
  const int va = valuation(a, v), vb = valuation(b, v);
  const int ka = va >= 0 ? va / 2 : -((-va + 1) / 2);
  const int kb = vb >= 0 ? vb / 2 : -((-vb + 1) / 2);
  // a = pi^(2 ka) a', v(a') in {0, 1}.
  const int need_a = va - 2 * ka, need_b = vb - 2 * kb;
  if (target_precision <= std::max(va, vb) + 1) throw PrecisionExhausted("conic coefficients");
  const int prec = target_precision;
  const SeriesElement A = expand(a, v, prec + 2 * std::abs(ka) + 2).shifted(-2 * ka).truncated(prec);
  const SeriesElement B = expand(b, v, prec + 2 * std::abs(kb) + 2).shifted(-2 * kb).truncated(prec);
  const NFElem a0 = A.leading(), b0 = B.leading();
  const SeriesElement one = SeriesElement::constant(k, NFElem(k, Rational(1)), prec);
  const SeriesElement zero = SeriesElement::zero(k, prec);

  std::optional<std::array<SeriesElement, 3>> pt;  // point for (A, B)
  if (need_a == 0 && need_b == 0) {
    if (auto s = B.sqrt()) {
      pt = std::array<SeriesElement, 3>{*s, zero, one};
    } else if (auto s2 = A.sqrt()) {
      pt = std::array<SeriesElement, 3>{*s2, one, zero};
    } else {
      // Residue conic point: a0 y^2 + b0 z^2 a nonzero square for small integers y, z.
      for (long h = 1; h <= 60 && !pt; ++h)
        for (long y = 1; y <= h && !pt; ++y) {
          const long z = h - y + 1;
          const NFElem val = Rational(y * y) * a0 + Rational(z * z) * b0;
          if (val.is_zero() || !val.is_square()) continue;
          const SeriesElement Y = SeriesElement::constant(k, NFElem(k, Rational(y)), prec);
          const SeriesElement Z = SeriesElement::constant(k, NFElem(k, Rational(z)), prec);
          auto X = (A * Y * Y + B * Z * Z).sqrt();
          if (X) pt = std::array<SeriesElement, 3>{*X, Y, Z};
        }
    }
  } else if (need_a == 1 && need_b == 0) {
    if (auto s = B.sqrt()) pt = std::array<SeriesElement, 3>{*s, zero, one};
  } else if (need_a == 0 && need_b == 1) {
    if (auto s = A.sqrt()) pt = std::array<SeriesElement, 3>{*s, one, zero};
  } else {
    if (auto s = (-(B / A)).sqrt()) {
      // x = 0 point; move along the line through (1, 1, 0) to get x != 0.
      const SeriesElement& y0 = *s;
      const SeriesElement lambda = (SeriesElement::constant(k, NFElem(k, Rational(2)), prec) * A * y0) / (one - A);
      pt = std::array<SeriesElement, 3>{lambda, y0 + lambda, one};
    }
  }
  if (!pt) return std::nullopt;
  // Undo the normalization: y_orig = pi^(-ka) y', z_orig = pi^(-kb) z'.
  return std::array<SeriesElement, 3>{(*pt)[0], (*pt)[1].shifted(-ka), (*pt)[2].shifted(-kb)};
}

}  // namespace witt
