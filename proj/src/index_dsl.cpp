#include "octanet/index_dsl.hpp"

#include <cctype>

namespace octanet::dsl {

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& what)
    : std::runtime_error(what + " at offset " + std::to_string(offset)), kind_(kind), offset_(offset) {}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Number>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, Var>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, Binary>) {
          return lhs.op == rhs.op && *lhs.lhs == *rhs.lhs && *lhs.rhs == *rhs.rhs;
        } else {
          return *lhs.operand == *rhs.operand;
        }
      },
      a.node);
}

namespace {

constexpr int kMaxDepth = 256;

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, LParen, RParen, End };

struct Token {
  Tok kind = Tok::End;
  std::size_t offset = 0;
  std::string_view text;
  Rational number;
};

class Lexer {
public:
  explicit Lexer(std::string_view input) : input_(input) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  bool digit_at(std::size_t i) const { return i < input_.size() && std::isdigit(static_cast<unsigned char>(input_[i])); }

  std::size_t scan_digits(std::size_t i) const {
    while (digit_at(i)) ++i;
    return i;
  }

  // BigInt reads a leading 0 as an octal prefix.
  BigInt decimal(std::size_t begin, std::size_t end) const {
    while (end - begin > 1 && input_[begin] == '0') ++begin;
    return BigInt(std::string(input_.substr(begin, end - begin)));
  }

  void advance() {
    while (pos_ < input_.size() && std::isspace(static_cast<unsigned char>(input_[pos_]))) ++pos_;
    current_ = Token{};
    current_.offset = pos_;
    if (pos_ >= input_.size()) return;

    const char c = input_[pos_];
    if (digit_at(pos_)) {
      std::size_t end = scan_digits(pos_);
      BigInt num = decimal(pos_, end);
      BigInt den = 1;
      if (end < input_.size() && input_[end] == '/' && digit_at(end + 1)) {
        std::size_t den_end = scan_digits(end + 1);
        den = decimal(end + 1, den_end);
        if (den == 0) throw ParseError(ParseError::Kind::Syntax, end + 1, "zero denominator in literal");
        end = den_end;
      }
      current_.kind = Tok::Number;
      current_.number = Rational(num, den);
      current_.text = input_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = pos_;
      while (end < input_.size() &&
             (std::isalnum(static_cast<unsigned char>(input_[end])) || input_[end] == '_')) {
        ++end;
      }
      current_.kind = Tok::Ident;
      current_.text = input_.substr(pos_, end - pos_);
      pos_ = end;
      return;
    }
    switch (c) {
      case '+': current_.kind = Tok::Plus; break;
      case '-': current_.kind = Tok::Minus; break;
      case '*': current_.kind = Tok::Star; break;
      case '/': current_.kind = Tok::Slash; break;
      case '(': current_.kind = Tok::LParen; break;
      case ')': current_.kind = Tok::RParen; break;
      default:
        throw ParseError(ParseError::Kind::Syntax, pos_, std::string("unexpected character '") + c + "'");
    }
    current_.text = input_.substr(pos_, 1);
    ++pos_;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lexer_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = expr();
    if (lexer_.peek().kind != Tok::End) fail(lexer_.peek(), "unexpected token");
    return e;
  }

private:
  [[noreturn]] static void fail(const Token& t, const std::string& what) {
    if (t.kind == Tok::End) throw ParseError(ParseError::Kind::Syntax, t.offset, "unexpected end of input");
    throw ParseError(ParseError::Kind::Syntax, t.offset, what + " '" + std::string(t.text) + "'");
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) {
        throw ParseError(ParseError::Kind::Syntax, parser.lexer_.peek().offset, "expression nested too deeply");
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  ExprPtr expr() {
    DepthGuard guard(*this);
    ExprPtr lhs = term();
    while (lexer_.peek().kind == Tok::Plus || lexer_.peek().kind == Tok::Minus) {
      char op = lexer_.take().kind == Tok::Plus ? '+' : '-';
      lhs = std::make_shared<const Expr>(Expr{Binary{op, lhs, term()}});
    }
    return lhs;
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (lexer_.peek().kind == Tok::Star || lexer_.peek().kind == Tok::Slash) {
      char op = lexer_.take().kind == Tok::Star ? '*' : '/';
      lhs = std::make_shared<const Expr>(Expr{Binary{op, lhs, factor()}});
    }
    return lhs;
  }

  ExprPtr factor() {
    DepthGuard guard(*this);
    Token t = lexer_.take();
    switch (t.kind) {
      case Tok::Number: return std::make_shared<const Expr>(Expr{Number{t.number}});
      case Tok::Minus: return std::make_shared<const Expr>(Expr{Negate{factor()}});
      case Tok::LParen: {
        ExprPtr inner = expr();
        expect(Tok::RParen, "expected ')'");
        return inner;
      }
      case Tok::Ident: {
        if (t.text == "sqrt") {
          expect(Tok::LParen, "expected '(' after sqrt");
          ExprPtr inner = expr();
          expect(Tok::RParen, "expected ')'");
          return std::make_shared<const Expr>(Expr{Sqrt{inner}});
        }
        if (t.text == "du") return std::make_shared<const Expr>(Expr{Var{Variable::du}});
        if (t.text == "dv") return std::make_shared<const Expr>(Expr{Var{Variable::dv}});
        if (t.text == "Su") return std::make_shared<const Expr>(Expr{Var{Variable::Su}});
        if (t.text == "Sv") return std::make_shared<const Expr>(Expr{Var{Variable::Sv}});
        throw ParseError(ParseError::Kind::UnknownVariable, t.offset,
                         "unknown variable '" + std::string(t.text) + "' (expected du, dv, Su or Sv)");
      }
      default: fail(t, "unexpected token");
    }
  }

  void expect(Tok kind, const std::string& what) {
    if (lexer_.peek().kind != kind) fail(lexer_.peek(), what + ", found");
    lexer_.take();
  }

  Lexer lexer_;
  int depth_ = 0;
};

int precedence(const Expr& e) {
  if (const auto* b = std::get_if<Binary>(&e.node)) return (b->op == '+' || b->op == '-') ? 1 : 2;
  return 3;
}

const char* variable_name(Variable v) {
  switch (v) {
    case Variable::du: return "du";
    case Variable::dv: return "dv";
    case Variable::Su: return "Su";
    case Variable::Sv: return "Sv";
  }
  return "?";
}

void collect_variables(const Expr& e, bool& degree, bool& degree_sum) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          (n.name == Variable::du || n.name == Variable::dv ? degree : degree_sum) = true;
        } else if constexpr (std::is_same_v<T, Binary>) {
          collect_variables(*n.lhs, degree, degree_sum);
          collect_variables(*n.rhs, degree, degree_sum);
        } else if constexpr (std::is_same_v<T, Negate> || std::is_same_v<T, Sqrt>) {
          collect_variables(*n.operand, degree, degree_sum);
        }
      },
      e.node);
}

RadicalValue eval(const Expr& e, long a, long b) {
  return std::visit(
      [a, b](const auto& n) -> RadicalValue {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return RadicalValue(n.value);
        } else if constexpr (std::is_same_v<T, Var>) {
          return RadicalValue(Rational(n.name == Variable::du || n.name == Variable::Su ? a : b));
        } else if constexpr (std::is_same_v<T, Negate>) {
          return -eval(*n.operand, a, b);
        } else if constexpr (std::is_same_v<T, Sqrt>) {
          RadicalValue arg = eval(*n.operand, a, b);
          if (!arg.is_rational()) {
            throw EvalError(EvalErrc::NonRationalRadicand, "sqrt argument " + arg.str() + " is not rational");
          }
          return sqrt_of_rational(arg.rational_part());
        } else {
          RadicalValue lhs = eval(*n.lhs, a, b);
          RadicalValue rhs = eval(*n.rhs, a, b);
          switch (n.op) {
            case '+': return lhs + rhs;
            case '-': return lhs - rhs;
            case '*': return lhs * rhs;
            default: return lhs / rhs;
          }
        }
      },
      e.node);
}

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Expr& e) {
  return std::visit(
      [&e](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Number>) {
          return octanet::to_string(n.value);
        } else if constexpr (std::is_same_v<T, Var>) {
          return variable_name(n.name);
        } else if constexpr (std::is_same_v<T, Negate>) {
          std::string inner = to_string(*n.operand);
          return precedence(*n.operand) < 3 ? "-(" + inner + ")" : "-" + inner;
        } else if constexpr (std::is_same_v<T, Sqrt>) {
          return "sqrt(" + to_string(*n.operand) + ")";
        } else {
          const int own = precedence(e);
          std::string lhs = to_string(*n.lhs);
          std::string rhs = to_string(*n.rhs);
          if (precedence(*n.lhs) < own) lhs = "(" + lhs + ")";
          if (precedence(*n.rhs) <= own) rhs = "(" + rhs + ")";
          return lhs + " " + n.op + " " + rhs;
        }
      },
      e.node);
}

std::optional<Basis> expression_basis(const Expr& e) {
  bool degree = false;
  bool degree_sum = false;
  collect_variables(e, degree, degree_sum);
  if (degree && degree_sum) {
    throw EvalError(EvalErrc::MixedBasis, "expression mixes degree (du, dv) and degree-sum (Su, Sv) variables");
  }
  if (degree) return Basis::Degree;
  if (degree_sum) return Basis::DegreeSum;
  return std::nullopt;
}

RadicalValue evaluate(const Expr& e, long a, long b, Basis basis) {
  if (auto own = expression_basis(e); own && *own != basis) {
    throw EvalError(EvalErrc::MixedBasis, "expression uses " + basis_name(*own) + " variables but basis is " +
                                              basis_name(basis));
  }
  return eval(e, a, b);
}

IndexSpec to_index_spec(const ExprPtr& e, Basis basis, const Network& target, std::string name) {
  for (const auto& [cls, count] : edge_partition(target, basis).classes) {
    const auto [a, b] = cls;
    if (evaluate(*e, a, b, basis) != evaluate(*e, b, a, basis)) {
      throw EvalError(EvalErrc::AsymmetricExpression, "expression is not symmetric on class (" + std::to_string(a) +
                                                          "," + std::to_string(b) + ")");
    }
  }
  return {std::move(name), basis, [e, basis](long a, long b) { return evaluate(*e, a, b, basis); }, std::nullopt};
}

}  // namespace octanet::dsl
