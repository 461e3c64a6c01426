#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "witt/involution.hpp"

namespace witt {

/// Malformed input text; line and column are 1-based.
struct SyntaxError : std::invalid_argument {
  SyntaxError(const std::string& msg, int line, int column)
      : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line(line),
        column(column) {}
  int line, column;
};

/// Well-formed input that does not denote a valid object (zero entry, mixed fields, ...).
struct SemanticError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Scalar expression tree. Gen is the number-field generator nf(minpoly)@root<k>.
struct Scalar {
  enum class Op { Num, T, X, I, J, K, Gen, Add, Sub, Mul, Div, Neg, Pow };
  Op op = Op::Num;
  Rational value;       // Num
  unsigned exponent = 0;  // Pow
  QPoly minpoly;        // Gen
  int root = 0;         // Gen
  std::vector<Scalar> args;
};

struct QuatAst {
  Scalar a, b;
};
struct FormAst {
  std::vector<Scalar> entries;
};
struct OrthoAst {
  FormAst form;
};
struct SympAst {
  std::size_t n = 1;
};
struct Symp2Ast {
  QuatAst algebra;
  std::vector<Scalar> entries;
};
struct Ortho2Ast {
  QuatAst algebra;
  std::vector<Scalar> entries;
};
struct TensorFactorAst {
  QuatAst algebra;
  std::optional<Scalar> twist;
};
struct TensorAst {
  std::vector<TensorFactorAst> factors;
  std::size_t matrix_size = 1;
};

using Ast = std::variant<FormAst, QuatAst, OrthoAst, SympAst, Symp2Ast, Ortho2Ast, TensorAst>;

Ast parse_ast(const std::string& text);

/// Base field of an expression: Q, Q(t), or Q(theta) for theta the root<k> (1-based, ascending
/// among real roots) of an irreducible minpoly.
struct FieldSpec {
  enum class Kind { Q, QT, NF };
  Kind kind = Kind::Q;
  QPoly minpoly;
  int root = 1;
  NFPtr nf;

  std::string to_text() const;
  /// Text of the generator atom, e.g. nf(x^2-2)@root1.
  std::string generator_text() const;
  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.minpoly == b.minpoly && a.root == b.root;
  }
};

/// "Q", "Q(t)" or a generator atom.
FieldSpec parse_field(const std::string& text);

template <class F>
using FieldObject = std::variant<QuadraticForm<F>, QuaternionAlgebra<F>, ModelData<F>>;

/// An evaluated expression.
struct Object {
  FieldSpec field;
  std::variant<FieldObject<Rational>, FieldObject<NFElem>, FieldObject<RationalFunction>> value;
};

/// Parses and evaluates. The field is inferred (t gives Q(t), a generator atom gives a number
/// field, otherwise Q) unless forced; forcing may only enlarge Q.
Object parse_object(const std::string& text, const std::optional<FieldSpec>& forced = std::nullopt);

/// Canonical text; parse_object(unparse(o), o.field) reproduces o.
std::string unparse(const Object& o);

std::string element_text(const Rational& x, const FieldSpec& f);
std::string element_text(const NFElem& x, const FieldSpec& f);
std::string element_text(const RationalFunction& x, const FieldSpec& f);

/// Parses a single field element of the given field.
Rational parse_rational_element(const std::string& text);
NFElem parse_nf_element(const std::string& text, const FieldSpec& f);
RationalFunction parse_function_element(const std::string& text);
/// A polynomial in x with rational coefficients.
QPoly parse_x_polynomial(const std::string& text);

}  // namespace witt
