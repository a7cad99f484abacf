#pragma once

// Per-edge expression language for user-defined degree-based indices.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := NUMBER | VAR | 'sqrt' '(' expr ')' | '(' expr ')' | '-' factor
//
// NUMBER is a nonnegative integer, or `p/q` written without spaces (a single
// rational literal). VAR is one of du, dv, Su, Sv.

#include "octanet/graph.hpp"
#include "octanet/indices.hpp"
#include "octanet/radical.hpp"

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace octanet::dsl {

enum class Variable { du, dv, Su, Sv };

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Number {
  Rational value;
};
struct Var {
  Variable name;
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // one of + - * /
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Sqrt {
  ExprPtr operand;
};

struct Expr {
  std::variant<Number, Var, Negate, Binary, Sqrt> node;
};

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);

class ParseError : public std::runtime_error {
public:
  enum class Kind { Syntax, UnknownVariable };

  ParseError(Kind kind, std::size_t offset, const std::string& what);
  Kind kind() const noexcept { return kind_; }
  /// Byte offset of the offending token; the input length at end of input.
  std::size_t offset() const noexcept { return offset_; }

private:
  Kind kind_;
  std::size_t offset_;
};

ExprPtr parse(std::string_view text);

/// Minimal-parenthesis rendering that reparses to an identical tree.
std::string to_string(const Expr& e);

enum class EvalErrc { MixedBasis, NonRationalRadicand, AsymmetricExpression };

class EvalError : public std::runtime_error {
public:
  EvalError(EvalErrc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  EvalErrc code() const noexcept { return code_; }

private:
  EvalErrc code_;
};

/// Degree for d-variables, DegreeSum for S-variables, nullopt for constants.
/// Throws MixedBasis if both kinds appear.
std::optional<Basis> expression_basis(const Expr& e);

/// Binds (du, dv) or (Su, Sv) to (a, b). Arithmetic failures surface as
/// ArithmeticError; a radicand that is not rational raises NonRationalRadicand.
RadicalValue evaluate(const Expr& e, long a, long b, Basis basis);

/// Wraps an expression as an IndexSpec after checking f(a,b) = f(b,a) on every
/// edge class present in `target`.
IndexSpec to_index_spec(const ExprPtr& e, Basis basis, const Network& target, std::string name = "custom");

}  // namespace octanet::dsl
