#include "witt/real_roots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "witt/factor.hpp"

namespace witt {

namespace {

QPoly positive_normalize(const QPoly& p) {
  if (p.is_zero()) return p;
  Rational s = p.lc();
  if (s < 0) s = -s;
  return (Rational(1) / s) * p;
}

// Roots of an irreducible polynomial of degree >= 2 (no rational roots), ascending.
std::vector<AlgebraicReal> isolate_irreducible(const QPoly& f) {
  const auto seq = sturm_sequence(f);
  const Rational b = root_bound(f);
  std::vector<AlgebraicReal> out;
  struct Piece {
    Rational lo, hi;
    int count;
  };
  std::vector<Piece> stack;
  const int total = sturm_variations(seq, -b) - sturm_variations(seq, b);
  if (total > 0) stack.push_back({-b, b, total});
  std::vector<Piece> done;
  while (!stack.empty()) {
    Piece pc = stack.back();
    stack.pop_back();
    if (pc.count == 1) {
      done.push_back(pc);
      continue;
    }
    const Rational mid = (pc.lo + pc.hi) / 2;
    const int left = sturm_variations(seq, pc.lo) - sturm_variations(seq, mid);
    if (left > 0) stack.push_back({pc.lo, mid, left});
    if (pc.count - left > 0) stack.push_back({mid, pc.hi, pc.count - left});
  }
  std::sort(done.begin(), done.end(), [](const Piece& x, const Piece& y) { return x.lo < y.lo; });
  for (const auto& pc : done) out.emplace_back(f, pc.lo, pc.hi);
  return out;
}

}  // namespace

std::vector<QPoly> sturm_sequence(const QPoly& p) {
  std::vector<QPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(positive_normalize(p));
  QPoly d = p.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(positive_normalize(d));
  while (true) {
    QPoly r = -(seq[seq.size() - 2] % seq.back());
    if (r.is_zero()) break;
    seq.push_back(positive_normalize(r));
  }
  return seq;
}

int sturm_variations(const std::vector<QPoly>& seq, const Rational& x) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    const int s = sgn(q(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int sturm_variations_at_infinity(const std::vector<QPoly>& seq, bool positive) {
  int changes = 0, last = 0;
  for (const auto& q : seq) {
    int s = sgn(q.lc());
    if (!positive && q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int count_roots(const QPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::domain_error("count_roots of zero polynomial");
  if (!(lo < hi)) return 0;
  const auto seq = sturm_sequence(p);
  return sturm_variations(seq, lo) - sturm_variations(seq, hi);
}

int count_real_roots(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("count_real_roots of zero polynomial");
  const auto seq = sturm_sequence(p);
  return sturm_variations_at_infinity(seq, false) - sturm_variations_at_infinity(seq, true);
}

Rational root_bound(const QPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational c = p.coeff(static_cast<std::size_t>(i)) / p.lc();
    if (c < 0) c = -c;
    if (c > m) m = c;
  }
  return m + 1;
}

AlgebraicReal::AlgebraicReal(const Rational& r) : minpoly_(qpoly({0, 1}) - QPoly::constant(r)), lo_(r), hi_(r) {}

AlgebraicReal::AlgebraicReal(QPoly minpoly, Rational lo, Rational hi)
    : minpoly_(std::move(minpoly)), lo_(std::move(lo)), hi_(std::move(hi)) {
  if (minpoly_.degree() < 2 || !(lo_ < hi_)) throw std::invalid_argument("AlgebraicReal: bad isolating data");
}

Rational AlgebraicReal::rational_value() const {
  if (!is_rational()) throw std::logic_error("AlgebraicReal is irrational");
  return -minpoly_.coeff(0);
}

void AlgebraicReal::refine() const {
  if (is_rational()) return;
  const Rational mid = (lo_ + hi_) / 2;
  const int slo = sgn(minpoly_(lo_));
  const int smid = sgn(minpoly_(mid));
  if (smid == slo)
    lo_ = mid;
  else
    hi_ = mid;
}

void AlgebraicReal::refine_below(const Rational& width) const {
  while (!is_rational() && hi_ - lo_ >= width) refine();
}

Rational AlgebraicReal::approx() const {
  if (is_rational()) return rational_value();
  return (lo_ + hi_) / 2;
}

double AlgebraicReal::to_double() const {
  refine_below(Rational(1, 1u << 30) * Rational(1, 1u << 30));
  return approx().get_d();
}

int AlgebraicReal::sign_of(const QPoly& q) const {
  if (is_rational()) return sgn(q(rational_value()));
  const QPoly r = q % minpoly_;
  if (r.is_zero()) return 0;
  const QPoly sq = squarefree(r);
  while (true) {
    if (sgn(sq(lo_)) != 0 && count_roots(sq, lo_, hi_) == 0) return sgn(r(lo_));
    refine();
  }
}

int AlgebraicReal::sign() const { return sign_of(qpoly({0, 1})); }

int AlgebraicReal::root_index() const {
  if (is_rational()) return 1;
  const auto seq = sturm_sequence(minpoly_);
  return sturm_variations_at_infinity(seq, false) - sturm_variations(seq, hi_);
}

int compare(const AlgebraicReal& a, const Rational& b) {
  if (a.is_rational()) return sgn(a.rational_value() - b);
  // Irrational: never equal to b.
  while (!(b <= a.lo_ || b >= a.hi_)) a.refine();
  return b <= a.lo_ ? 1 : -1;
}

int compare(const AlgebraicReal& a, const AlgebraicReal& b) {
  if (b.is_rational()) return compare(a, b.rational_value());
  if (a.is_rational()) return -compare(b, a.rational_value());
  if (a.minpoly_ == b.minpoly_) {
    const int d = a.root_index() - b.root_index();
    return (d > 0) - (d < 0);
  }
  while (true) {
    if (a.hi_ <= b.lo_) return -1;
    if (b.hi_ <= a.lo_) return 1;
    a.refine();
    b.refine();
  }
}

std::string AlgebraicReal::to_text() const {
  if (is_rational()) return witt::to_text(rational_value());
  std::ostringstream out;
  out << "root" << root_index() << "(" << witt::to_text(minpoly_, "x") << ")";
  return out.str();
}

std::vector<AlgebraicReal> real_roots(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("real_roots of zero polynomial");
  std::vector<AlgebraicReal> out;
  for (const auto& [f, e] : factor(p).factors) {
    if (f.degree() == 1) {
      out.emplace_back(-f.coeff(0));
      continue;
    }
    for (auto& r : isolate_irreducible(f)) out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AlgebraicReal real_root(const QPoly& irreducible, int k) {
  const QPoly m = irreducible.monic();
  if (m.degree() == 1) {
    if (k != 1) throw std::out_of_range("real_root: index out of range");
    return AlgebraicReal(-m.coeff(0));
  }
  auto roots = isolate_irreducible(m);
  if (k < 1 || k > static_cast<int>(roots.size())) throw std::out_of_range("real_root: index out of range");
  return roots[static_cast<std::size_t>(k - 1)];
}

}  // namespace witt
