#include "witt/number_field.hpp"

#include <stdexcept>

#include "witt/factor.hpp"

namespace witt {

NumberField::NumberField(QPoly m) : minpoly_(std::move(m)) {
  const auto count = count_real_roots(minpoly_);
  for (int k = 1; k <= count; ++k) embeddings_.push_back(real_root(minpoly_, k));
}

std::shared_ptr<const NumberField> NumberField::make(const QPoly& minpoly) {
  if (minpoly.degree() < 1) throw std::invalid_argument("number field needs a nonconstant minimal polynomial");
  const QPoly m = minpoly.monic();
  if (!is_irreducible(m)) throw std::invalid_argument("minimal polynomial is reducible: " + witt::to_text(m, "x"));
  return std::shared_ptr<const NumberField>(new NumberField(m));
}

std::string NumberField::to_text() const { return "nf(" + witt::to_text(minpoly_, "x") + ")"; }

bool same_field(const NFPtr& a, const NFPtr& b) {
  if (!a || !b) return !a && !b;
  return a == b || *a == *b;
}

namespace {

NFPtr join(const NFPtr& a, const NFPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (!same_field(a, b)) throw std::invalid_argument("arithmetic across different number fields");
  return a;
}

QPoly reduce(const NFPtr& f, const QPoly& p) { return f ? p % f->minpoly() : p; }

}  // namespace

NFElem::NFElem(NFPtr field, QPoly rep) : field_(std::move(field)), rep_(reduce(field_, rep)) {}

NFElem::NFElem(NFPtr field, const Rational& c) : field_(std::move(field)), rep_(QPoly::constant(c)) {}

NFElem NFElem::generator(NFPtr field) { return NFElem(field, qpoly({0, 1})); }

Rational NFElem::rational_value() const {
  if (!is_rational()) throw std::logic_error("number field element is not rational");
  return rep_.coeff(0);
}

NFElem NFElem::operator-() const { return NFElem(field_, -rep_); }
NFElem operator+(const NFElem& a, const NFElem& b) { return NFElem(join(a.field_, b.field_), a.rep_ + b.rep_); }
NFElem operator-(const NFElem& a, const NFElem& b) { return NFElem(join(a.field_, b.field_), a.rep_ - b.rep_); }
NFElem operator*(const NFElem& a, const NFElem& b) { return NFElem(join(a.field_, b.field_), a.rep_ * b.rep_); }
NFElem operator/(const NFElem& a, const NFElem& b) {
  NFElem binv = NFElem(join(a.field_, b.field_), b.rep_).inverse();
  return a * binv;
}

NFElem NFElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in number field");
  if (is_rational()) return NFElem(field_, Rational(1) / rep_.coeff(0));
  auto [g, s, t] = xgcd(rep_, field_->minpoly());
  (void)t;
  if (g.degree() != 0) throw std::logic_error("non-invertible number field element");
  return NFElem(field_, s);
}

NFElem NFElem::pow(unsigned e) const {
  NFElem r(field_, Rational(1)), b = *this;
  while (e) {
    if (e & 1u) r = r * b;
    b = b * b;
    e >>= 1u;
  }
  return r;
}

QMatrix NFElem::multiplication_matrix() const {
  const std::size_t n = field_ ? static_cast<std::size_t>(field_->degree()) : 1;
  QMatrix m(n, n, Rational(0));
  QPoly basis = QPoly::constant(Rational(1));
  for (std::size_t j = 0; j < n; ++j) {
    const QPoly col = reduce(field_, rep_ * basis);
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.coeff(i);
    basis = basis * qpoly({0, 1});
  }
  return m;
}

Rational NFElem::norm() const { return multiplication_matrix().determinant(); }

Rational NFElem::trace() const {
  const QMatrix m = multiplication_matrix();
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

int NFElem::sign_at(std::size_t embedding) const {
  if (!field_) {
    if (embedding != 0) throw std::out_of_range("rational has a single embedding");
    return sgn(rep_.coeff(0));
  }
  if (embedding >= field_->real_embeddings().size()) throw std::out_of_range("no such real embedding");
  return field_->real_embeddings()[embedding].sign_of(rep_);
}

bool NFElem::is_totally_positive() const {
  if (is_zero()) throw std::domain_error("is_totally_positive of zero");
  if (!field_) return rep_.coeff(0) > 0;
  for (std::size_t k = 0; k < field_->real_embeddings().size(); ++k)
    if (sign_at(k) < 0) return false;
  return true;
}

std::optional<NFElem> NFElem::sqrt() const {
  if (is_zero()) return *this;
  if (!field_ || field_->degree() == 1) {
    const Rational v = field_ ? rep_.coeff(0) : rational_value();
    if (!is_rational()) throw std::logic_error("unexpected degree");
    auto r = rational_sqrt(v);
    if (!r) return std::nullopt;
    return NFElem(field_, *r);
  }
  for (std::size_t k = 0; k < field_->real_embeddings().size(); ++k)
    if (sign_at(k) < 0) return std::nullopt;

  // Trager: f(Y) = Y^2 - a over K; find s with N(f(Y - s*x)) squarefree over Q, factor the norm,
  // and take gcds in K[Y]. A linear gcd is a root.
  const NFElem gen = generator(field_);
  const std::size_t n = static_cast<std::size_t>(field_->degree());
  const NFElem zero(field_, Rational(0));
  for (long s = 0; s < 50; ++s) {
    const NFElem shift = NFElem(field_, Rational(s)) * gen;
    // f(Y - shift) = Y^2 - 2 shift Y + shift^2 - a
    UPoly<NFElem> fs(std::vector<NFElem>{shift * shift - *this, NFElem(field_, Rational(-2)) * shift,
                                         NFElem(field_, Rational(1))},
                     zero);
    std::vector<Rational> xs, ys;
    for (std::size_t i = 0; i <= 2 * n; ++i) {
      const NFElem y(field_, Rational(static_cast<long>(i)));
      xs.emplace_back(static_cast<long>(i));
      ys.push_back(fs(y).norm());
    }
    // Lagrange interpolation.
    QPoly norm_poly;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      QPoly term = QPoly::constant(ys[i]);
      for (std::size_t j = 0; j < xs.size(); ++j) {
        if (j == i) continue;
        term = term * (qpoly({0, 1}) - QPoly::constant(xs[j]));
        term = (Rational(1) / (xs[i] - xs[j])) * term;
      }
      norm_poly = norm_poly + term;
    }
    if (gcd(norm_poly, norm_poly.derivative()).degree() > 0) continue;
    for (const auto& [g, e] : factor(norm_poly).factors) {
      if (g.degree() > static_cast<int>(n)) continue;
      std::vector<NFElem> gc;
      for (const auto& c : g.coeffs()) gc.emplace_back(field_, c);
      UPoly<NFElem> gk(gc, zero);
      UPoly<NFElem> h = gcd(gk, fs);
      if (h.degree() == 1) {
        const NFElem root = -h.coeff(0) / h.coeff(1) - shift;
        if (root * root == *this) return root;
        throw std::logic_error("number field square root check failed");
      }
    }
    return std::nullopt;
  }
  throw std::runtime_error("no squarefree norm shift found");
}

std::string NFElem::to_text(const std::string& var) const { return witt::to_text(rep_, var); }

}  // namespace witt
