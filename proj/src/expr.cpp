#include "witt/expr.hpp"

#include <cctype>
#include <map>
#include <regex>

namespace witt {

namespace {

struct Token {
  enum class Kind { Int, Ident, Punct, End };
  Kind kind;
  std::string text;
  int line, column;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i + k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    i += n;
  };
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      advance(1);
      continue;
    }
    std::size_t j = i;
    if (std::isdigit(c)) {
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Kind::Int, s.substr(i, j - i), line, col});
    } else if (std::isalpha(c) || c == '_') {
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Token::Kind::Ident, s.substr(i, j - i), line, col});
    } else if (std::string("<>,;()+-*/^:@").find(static_cast<char>(c)) != std::string::npos) {
      j = i + 1;
      out.push_back({Token::Kind::Punct, s.substr(i, 1), line, col});
    } else {
      throw SyntaxError(std::string("unexpected character '") + static_cast<char>(c) + "'", line, col);
    }
    advance(j - i);
  }
  out.push_back({Token::Kind::End, "", line, col});
  return out;
}

Scalar node(Scalar::Op op, std::vector<Scalar> args = {}) {
  Scalar s;
  s.op = op;
  s.args = std::move(args);
  return s;
}

QPoly eval_x_poly(const Scalar& s);

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  Ast object() {
    Ast a = top();
    expect_end();
    return a;
  }

  Scalar scalar_only() {
    Scalar s = scalar();
    expect_end();
    return s;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is(const std::string& p) const { return peek().kind != Token::Kind::End && peek().text == p; }
  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, peek().line, peek().column); }
  Token take() { return toks_[pos_++]; }
  void expect(const std::string& p) {
    if (!is(p) || peek().kind == Token::Kind::Ident) fail("expected '" + p + "'");
    ++pos_;
  }
  void expect_end() {
    if (peek().kind != Token::Kind::End) fail("unexpected '" + peek().text + "'");
  }
  std::size_t integer() {
    if (peek().kind != Token::Kind::Int) fail("expected an integer");
    const std::string t = take().text;
    if (t.size() > 9) fail("integer too large");
    return std::stoul(t);
  }

  Ast top() {
    if (is("<")) return form();
    if (peek().kind != Token::Kind::Ident) fail("expected a form, quat(...) or a model");
    const std::string w = peek().text;
    if (w == "quat") return quat();
    if (w == "ortho") {
      take();
      expect("(");
      OrthoAst o{form()};
      expect(")");
      return o;
    }
    if (w == "symp") {
      take();
      expect("(");
      SympAst s{integer()};
      if (s.n == 0) fail("symp(n) needs n >= 1");
      expect(")");
      return s;
    }
    if (w == "symp2" || w == "ortho2") {
      take();
      expect("(");
      QuatAst q = quat();
      expect(";");
      std::vector<Scalar> e = list();
      expect(")");
      if (w == "symp2") return Symp2Ast{std::move(q), std::move(e)};
      return Ortho2Ast{std::move(q), std::move(e)};
    }
    if (w == "tensor") {
      take();
      expect("(");
      TensorAst t;
      do {
        if (!t.factors.empty()) take();
        TensorFactorAst f{quat(), std::nullopt};
        expect(":");
        if (is("gamma")) {
          take();
        } else if (is("int")) {
          take();
          expect("(");
          f.twist = scalar();
          expect(")");
        } else {
          fail("expected gamma or int(...)");
        }
        t.factors.push_back(std::move(f));
      } while (is(","));
      if (is(";")) {
        take();
        t.matrix_size = integer();
        if (t.matrix_size == 0) fail("matrix size must be >= 1");
      }
      expect(")");
      return t;
    }
    fail("unknown object '" + w + "'");
  }

  FormAst form() {
    expect("<");
    FormAst f{list()};
    expect(">");
    return f;
  }

  QuatAst quat() {
    if (!is("quat")) fail("expected quat(a, b)");
    take();
    expect("(");
    Scalar a = scalar();
    expect(",");
    Scalar b = scalar();
    expect(")");
    return {std::move(a), std::move(b)};
  }

  std::vector<Scalar> list() {
    std::vector<Scalar> v{scalar()};
    while (is(",")) {
      take();
      v.push_back(scalar());
    }
    return v;
  }

  Scalar scalar() {
    Scalar acc = term();
    while (is("+") || is("-")) {
      const bool plus = take().text == "+";
      acc = node(plus ? Scalar::Op::Add : Scalar::Op::Sub, {std::move(acc), term()});
    }
    return acc;
  }

  Scalar term() {
    Scalar acc = unary();
    while (is("*") || is("/")) {
      const bool mul = take().text == "*";
      acc = node(mul ? Scalar::Op::Mul : Scalar::Op::Div, {std::move(acc), unary()});
    }
    return acc;
  }

  Scalar unary() {
    if (is("-")) {
      take();
      return node(Scalar::Op::Neg, {unary()});
    }
    return power();
  }

  Scalar power() {
    Scalar base = atom();
    if (is("^")) {
      take();
      Scalar p = node(Scalar::Op::Pow, {std::move(base)});
      p.exponent = static_cast<unsigned>(integer());
      return p;
    }
    return base;
  }

  Scalar atom() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Int) {
      Scalar s = node(Scalar::Op::Num);
      s.value = Rational(Integer(take().text));
      return s;
    }
    if (is("(")) {
      take();
      Scalar s = scalar();
      expect(")");
      return s;
    }
    if (t.kind == Token::Kind::Ident) {
      const std::string w = take().text;
      if (w == "t") return node(Scalar::Op::T);
      if (w == "x") return node(Scalar::Op::X);
      if (w == "i") return node(Scalar::Op::I);
      if (w == "j") return node(Scalar::Op::J);
      if (w == "k") return node(Scalar::Op::K);
      if (w == "nf") return generator();
      --pos_;
      fail("unknown symbol '" + w + "'");
    }
    fail(t.kind == Token::Kind::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  Scalar generator() {
    const Token at = peek();
    expect("(");
    Scalar p = scalar();
    expect(")");
    expect("@");
    static const std::regex root_re("root([0-9]{1,6})");
    std::smatch m;
    const std::string w = peek().kind == Token::Kind::Ident ? peek().text : "";
    if (!std::regex_match(w, m, root_re)) fail("expected root<k> after '@'");
    take();
    Scalar g = node(Scalar::Op::Gen);
    try {
      g.minpoly = eval_x_poly(p).monic();
    } catch (const SemanticError& e) {
      throw SyntaxError(e.what(), at.line, at.column);
    }
    g.root = std::stoi(m[1]);
    return g;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---- evaluation

QPoly eval_x_poly(const Scalar& s) {
  using Op = Scalar::Op;
  switch (s.op) {
    case Op::Num:
      return QPoly::constant(s.value);
    case Op::X:
      return qpoly({0, 1});
    case Op::Add:
      return eval_x_poly(s.args[0]) + eval_x_poly(s.args[1]);
    case Op::Sub:
      return eval_x_poly(s.args[0]) - eval_x_poly(s.args[1]);
    case Op::Mul:
      return eval_x_poly(s.args[0]) * eval_x_poly(s.args[1]);
    case Op::Neg:
      return -eval_x_poly(s.args[0]);
    case Op::Pow:
      return eval_x_poly(s.args[0]).pow(s.exponent);
    case Op::Div: {
      const QPoly d = eval_x_poly(s.args[1]);
      if (d.degree() != 0) throw SemanticError("only division by nonzero constants in polynomials");
      return (Rational(1) / d.lc()) * eval_x_poly(s.args[0]);
    }
    default:
      throw SemanticError("polynomials in nf(...) may only use x");
  }
}

template <class F>
struct Ctx {
  FieldSpec field;
  F from(const Rational& r) const {
    if constexpr (std::is_same_v<F, NFElem>) {
      return NFElem(field.nf, r);
    } else {
      return F(r);
    }
  }
};

template <class F>
F eval(const Scalar& s, const Ctx<F>& c) {
  using Op = Scalar::Op;
  switch (s.op) {
    case Op::Num:
      return c.from(s.value);
    case Op::T:
      if constexpr (std::is_same_v<F, RationalFunction>) {
        return RationalFunction::t();
      } else {
        throw SemanticError("t used outside Q(t)");
      }
    case Op::Gen:
      if constexpr (std::is_same_v<F, NFElem>) {
        if (!(s.minpoly == c.field.minpoly) || s.root != c.field.root)
          throw SemanticError("expression mixes different number-field generators");
        return NFElem::generator(c.field.nf);
      } else {
        throw SemanticError("number-field generator used outside its field");
      }
    case Op::X:
      throw SemanticError("x is only allowed inside nf(...)");
    case Op::I:
    case Op::J:
    case Op::K:
      throw SemanticError("quaternion units are only allowed in ortho2 entries and int(...) twists");
    case Op::Add:
      return eval(s.args[0], c) + eval(s.args[1], c);
    case Op::Sub:
      return eval(s.args[0], c) - eval(s.args[1], c);
    case Op::Mul:
      return eval(s.args[0], c) * eval(s.args[1], c);
    case Op::Neg:
      return -eval(s.args[0], c);
    case Op::Div: {
      const F d = eval(s.args[1], c);
      if (detail::elem_is_zero(d)) throw SemanticError("division by zero");
      return eval(s.args[0], c) / d;
    }
    case Op::Pow: {
      const F b = eval(s.args[0], c);
      F r = c.from(Rational(1));
      for (unsigned k = 0; k < s.exponent; ++k) r = r * b;
      return r;
    }
  }
  throw SemanticError("bad expression");
}

bool mentions_units(const Scalar& s) {
  if (s.op == Scalar::Op::I || s.op == Scalar::Op::J || s.op == Scalar::Op::K) return true;
  for (const auto& a : s.args)
    if (mentions_units(a)) return true;
  return false;
}

template <class F>
Quaternion<F> eval_quat(const Scalar& s, const Ctx<F>& c, const QuaternionAlgebra<F>& d) {
  using Op = Scalar::Op;
  if (!mentions_units(s)) return d.scalar(eval(s, c));
  switch (s.op) {
    case Op::I:
      return d.basis(1);
    case Op::J:
      return d.basis(2);
    case Op::K:
      return d.basis(3);
    case Op::Add:
      return eval_quat(s.args[0], c, d) + eval_quat(s.args[1], c, d);
    case Op::Sub:
      return eval_quat(s.args[0], c, d) - eval_quat(s.args[1], c, d);
    case Op::Neg:
      return d.zero() - eval_quat(s.args[0], c, d);
    case Op::Mul:
      return d.mul(eval_quat(s.args[0], c, d), eval_quat(s.args[1], c, d));
    case Op::Div: {
      if (mentions_units(s.args[1])) throw SemanticError("division by a quaternion");
      const F den = eval(s.args[1], c);
      if (detail::elem_is_zero(den)) throw SemanticError("division by zero");
      return (one_like(den) / den) * eval_quat(s.args[0], c, d);
    }
    case Op::Pow: {
      const auto b = eval_quat(s.args[0], c, d);
      auto r = d.scalar(c.from(Rational(1)));
      for (unsigned k = 0; k < s.exponent; ++k) r = d.mul(r, b);
      return r;
    }
    default:
      throw SemanticError("bad quaternion expression");
  }
}

template <class F>
std::vector<F> eval_all(const std::vector<Scalar>& v, const Ctx<F>& c) {
  std::vector<F> out;
  for (const auto& s : v) out.push_back(eval(s, c));
  return out;
}

template <class F>
QuaternionAlgebra<F> eval_algebra(const QuatAst& q, const Ctx<F>& c) {
  const F a = eval(q.a, c), b = eval(q.b, c);
  if (detail::elem_is_zero(a) || detail::elem_is_zero(b)) throw SemanticError("quat(a, b) needs a, b nonzero");
  return QuaternionAlgebra<F>(a, b);
}

template <class F>
FieldObject<F> build(const Ast& ast, const Ctx<F>& c) {
  return std::visit(
      [&](const auto& n) -> FieldObject<F> {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, FormAst>) {
          return QuadraticForm<F>(eval_all(n.entries, c));
        } else if constexpr (std::is_same_v<N, QuatAst>) {
          return eval_algebra(n, c);
        } else if constexpr (std::is_same_v<N, OrthoAst>) {
          return ModelData<F>(SplitOrthogonal<F>{QuadraticForm<F>(eval_all(n.form.entries, c))});
        } else if constexpr (std::is_same_v<N, SympAst>) {
          return ModelData<F>(SplitSymplectic<F>{n.n, c.from(Rational(0))});
        } else if constexpr (std::is_same_v<N, Symp2Ast>) {
          return ModelData<F>(Index2Symplectic<F>{HermitianForm<F>(eval_algebra(n.algebra, c), eval_all(n.entries, c))});
        } else if constexpr (std::is_same_v<N, Ortho2Ast>) {
          const auto d = eval_algebra(n.algebra, c);
          std::vector<Quaternion<F>> e;
          for (const auto& s : n.entries) e.push_back(eval_quat(s, c, d));
          return ModelData<F>(Index2Orthogonal<F>{SkewHermitianForm<F>(d, e)});
        } else {
          QuatTensor<F> t;
          t.matrix_size = n.matrix_size;
          for (const auto& f : n.factors) {
            const auto d = eval_algebra(f.algebra, c);
            std::optional<Quaternion<F>> tw;
            if (f.twist) {
              tw = eval_quat(*f.twist, c, d);
              if (!tw->is_pure() || tw->is_zero()) throw SemanticError("int(s) needs a nonzero pure quaternion");
            }
            t.factors.push_back({d, tw});
          }
          return ModelData<F>(t);
        }
      },
      ast);
}

struct Scan {
  bool t = false;
  std::vector<std::pair<QPoly, int>> gens;
};

void scan(const Scalar& s, Scan& out) {
  if (s.op == Scalar::Op::T) out.t = true;
  if (s.op == Scalar::Op::Gen) out.gens.emplace_back(s.minpoly, s.root);
  for (const auto& a : s.args) scan(a, out);
}

void scan(const Ast& ast, Scan& out) {
  auto all = [&](const std::vector<Scalar>& v) {
    for (const auto& s : v) scan(s, out);
  };
  auto q = [&](const QuatAst& a) {
    scan(a.a, out);
    scan(a.b, out);
  };
  std::visit(
      [&](const auto& n) {
        using N = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<N, FormAst>) {
          all(n.entries);
        } else if constexpr (std::is_same_v<N, QuatAst>) {
          q(n);
        } else if constexpr (std::is_same_v<N, OrthoAst>) {
          all(n.form.entries);
        } else if constexpr (std::is_same_v<N, Symp2Ast> || std::is_same_v<N, Ortho2Ast>) {
          q(n.algebra);
          all(n.entries);
        } else if constexpr (std::is_same_v<N, TensorAst>) {
          for (const auto& f : n.factors) {
            q(f.algebra);
            if (f.twist) scan(*f.twist, out);
          }
        }
      },
      ast);
}

FieldSpec make_nf(const QPoly& minpoly, int root) {
  static std::map<std::vector<Integer>, NFPtr> cache;
  if (minpoly.degree() < 2) throw SemanticError("nf(...) needs a polynomial of degree >= 2");
  FieldSpec f;
  f.kind = FieldSpec::Kind::NF;
  f.minpoly = minpoly.monic();
  f.root = root;
  const auto key = primitive_integer_coeffs(f.minpoly);
  auto it = cache.find(key);
  if (it == cache.end()) {
    NFPtr k;
    try {
      k = NumberField::make(f.minpoly);
    } catch (const std::invalid_argument& e) {
      throw SemanticError(std::string("nf(...): ") + e.what());
    }
    it = cache.emplace(key, k).first;
  }
  f.nf = it->second;
  if (root < 1 || static_cast<std::size_t>(root) > f.nf->num_real_embeddings())
    throw SemanticError("nf(...)@root" + std::to_string(root) + ": the polynomial has " +
                        std::to_string(f.nf->num_real_embeddings()) + " real roots");
  return f;
}

FieldSpec infer_field(const Scan& s) {
  if (s.t && !s.gens.empty()) throw SemanticError("number-field coefficients over Q(t) are not supported");
  if (s.t) return FieldSpec{FieldSpec::Kind::QT, {}, 1, nullptr};
  if (s.gens.empty()) return FieldSpec{};
  for (const auto& g : s.gens)
    if (!(g.first == s.gens[0].first) || g.second != s.gens[0].second)
      throw SemanticError("expression mixes different number-field generators");
  return make_nf(s.gens[0].first, s.gens[0].second);
}

std::string join(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

template <class F>
std::string quat_text(const Quaternion<F>& x, const FieldSpec& f) {
  static const char* names[4] = {"", "i", "j", "k"};
  std::string s;
  for (std::size_t k = 0; k < 4; ++k) {
    if (detail::elem_is_zero(x.c[k])) continue;
    std::string term = element_text(x.c[k], f);
    const bool simple = term.find_first_not_of("0123456789") == std::string::npos;
    if (k > 0) term = term == "1" ? names[k] : (simple ? term : "(" + term + ")") + "*" + names[k];
    else if (!simple) term = "(" + term + ")";
    s += (s.empty() ? "" : " + ") + term;
  }
  return s.empty() ? "0" : s;
}

template <class F>
std::string algebra_text(const QuaternionAlgebra<F>& d, const FieldSpec& f) {
  return "quat(" + element_text(d.a(), f) + ", " + element_text(d.b(), f) + ")";
}

template <class F>
std::string form_text(const std::vector<F>& e, const FieldSpec& f) {
  std::vector<std::string> v;
  for (const auto& x : e) v.push_back(element_text(x, f));
  return "<" + join(v) + ">";
}

template <class F>
std::string object_text(const FieldObject<F>& o, const FieldSpec& f) {
  if (const auto* q = std::get_if<QuadraticForm<F>>(&o)) return form_text(q->entries(), f);
  if (const auto* d = std::get_if<QuaternionAlgebra<F>>(&o)) return algebra_text(*d, f);
  return std::visit(
      [&](const auto& m) -> std::string {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, SplitOrthogonal<F>>) {
          return "ortho(" + form_text(m.form.entries(), f) + ")";
        } else if constexpr (std::is_same_v<M, SplitSymplectic<F>>) {
          return "symp(" + std::to_string(m.n) + ")";
        } else if constexpr (std::is_same_v<M, Index2Symplectic<F>>) {
          std::vector<std::string> v;
          for (const auto& x : m.form.entries) v.push_back(element_text(x, f));
          return "symp2(" + algebra_text(m.form.algebra, f) + "; " + join(v) + ")";
        } else if constexpr (std::is_same_v<M, Index2Orthogonal<F>>) {
          std::vector<std::string> v;
          for (const auto& x : m.form.entries) v.push_back(quat_text(x, f));
          return "ortho2(" + algebra_text(m.form.algebra, f) + "; " + join(v) + ")";
        } else {
          std::vector<std::string> v;
          for (const auto& fac : m.factors)
            v.push_back(algebra_text(fac.algebra, f) + ":" + (fac.twist ? "int(" + quat_text(*fac.twist, f) + ")" : "gamma"));
          return "tensor(" + join(v) + (m.matrix_size != 1 ? "; " + std::to_string(m.matrix_size) : "") + ")";
        }
      },
      std::get<ModelData<F>>(o));
}

}  // namespace

Ast parse_ast(const std::string& text) { return Parser(text).object(); }

std::string FieldSpec::generator_text() const {
  return "nf(" + witt::to_text(minpoly, "x") + ")@root" + std::to_string(root);
}

std::string FieldSpec::to_text() const {
  switch (kind) {
    case Kind::Q:
      return "Q";
    case Kind::QT:
      return "Q(t)";
    default:
      return generator_text();
  }
}

FieldSpec parse_field(const std::string& text) {
  if (text == "Q") return FieldSpec{};
  if (text == "Q(t)") return FieldSpec{FieldSpec::Kind::QT, {}, 1, nullptr};
  const Scalar g = Parser(text).scalar_only();
  if (g.op != Scalar::Op::Gen) throw SemanticError("field must be Q, Q(t) or nf(p)@root<k>");
  return make_nf(g.minpoly, g.root);
}

Object parse_object(const std::string& text, const std::optional<FieldSpec>& forced) {
  const Ast ast = parse_ast(text);
  Scan s;
  scan(ast, s);
  FieldSpec f = infer_field(s);
  if (forced && !(*forced == f)) {
    if (f.kind != FieldSpec::Kind::Q) throw SemanticError("expression does not live in " + forced->to_text());
    f = forced->kind == FieldSpec::Kind::NF ? make_nf(forced->minpoly, forced->root) : *forced;
  }
  Object o{f, FieldObject<Rational>(QuaternionAlgebra<Rational>(Rational(1), Rational(1)))};
  try {
    switch (f.kind) {
      case FieldSpec::Kind::Q:
        o.value = build<Rational>(ast, Ctx<Rational>{f});
        break;
      case FieldSpec::Kind::QT:
        o.value = build<RationalFunction>(ast, Ctx<RationalFunction>{f});
        break;
      case FieldSpec::Kind::NF:
        o.value = build<NFElem>(ast, Ctx<NFElem>{f});
        break;
    }
  } catch (const NonsingularRequired& e) {
    throw;
  } catch (const SemanticError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw SemanticError(e.what());
  }
  return o;
}

std::string unparse(const Object& o) {
  return std::visit([&](const auto& v) { return object_text(v, o.field); }, o.value);
}

std::string element_text(const Rational& x, const FieldSpec&) { return to_text(x); }
std::string element_text(const RationalFunction& x, const FieldSpec&) { return x.to_text(); }
std::string element_text(const NFElem& x, const FieldSpec& f) { return x.to_text(f.generator_text()); }

Rational parse_rational_element(const std::string& text) {
  return eval(Parser(text).scalar_only(), Ctx<Rational>{FieldSpec{}});
}

NFElem parse_nf_element(const std::string& text, const FieldSpec& f) {
  return eval(Parser(text).scalar_only(), Ctx<NFElem>{f});
}

RationalFunction parse_function_element(const std::string& text) {
  return eval(Parser(text).scalar_only(), Ctx<RationalFunction>{FieldSpec{FieldSpec::Kind::QT, {}, 1, nullptr}});
}

QPoly parse_x_polynomial(const std::string& text) { return eval_x_poly(Parser(text).scalar_only()); }

}  // namespace witt
