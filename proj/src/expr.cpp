#include "skewpbw/expr.hpp"

#include <cctype>
#include <functional>
#include <memory>

namespace skewpbw {

namespace {

struct Token {
  enum class Kind { number, ident, plus, minus, star, caret, slash, lparen, rparen, end };
  Kind kind;
  std::string text;
  std::size_t pos;  // 1-based position in the source
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) { advance(); }

  const Token& current() const { return current_; }

  void advance() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    const std::size_t start = pos_ + 1;
    if (pos_ >= src_.size()) {
      current_ = {Token::Kind::end, "", start};
      return;
    }
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t begin = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      current_ = {Token::Kind::number, src_.substr(begin, pos_ - begin), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t begin = pos_;
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      current_ = {Token::Kind::ident, src_.substr(begin, pos_ - begin), start};
      return;
    }
    ++pos_;
    switch (c) {
      case '+': current_ = {Token::Kind::plus, "+", start}; return;
      case '-': current_ = {Token::Kind::minus, "-", start}; return;
      case '*': current_ = {Token::Kind::star, "*", start}; return;
      case '^': current_ = {Token::Kind::caret, "^", start}; return;
      case '/': current_ = {Token::Kind::slash, "/", start}; return;
      case '(': current_ = {Token::Kind::lparen, "(", start}; return;
      case ')': current_ = {Token::Kind::rparen, ")", start}; return;
      default:
        fail(Errc::syntax_error,
             "unexpected character '" + std::string(1, c) + "' at position " + std::to_string(start));
    }
  }

private:
  const std::string& src_;
  std::size_t pos_ = 0;
  Token current_{Token::Kind::end, "", 1};
};

struct Ast {
  enum class Kind { number, ident, neg, add, sub, mul };
  Kind kind;
  std::string num;          // numerator digits (number)
  std::string den;          // denominator digits, empty if none (number)
  std::string name;         // identifier name (ident)
  unsigned long long power = 1;  // identifier power (ident)
  std::size_t pos = 0;
  std::unique_ptr<Ast> lhs;
  std::unique_ptr<Ast> rhs;
};

using AstPtr = std::unique_ptr<Ast>;

class Parser {
public:
  explicit Parser(const std::string& src) : lexer_(src) {}

  AstPtr parse() {
    AstPtr e = expr();
    if (lexer_.current().kind != Token::Kind::end)
      fail(Errc::syntax_error, "trailing input at position " + std::to_string(lexer_.current().pos));
    return e;
  }

private:
  AstPtr expr() {
    AstPtr node;
    if (lexer_.current().kind == Token::Kind::minus) {
      const std::size_t pos = lexer_.current().pos;
      lexer_.advance();
      node = std::make_unique<Ast>();
      node->kind = Ast::Kind::neg;
      node->pos = pos;
      node->lhs = term();
    } else {
      node = term();
    }
    while (lexer_.current().kind == Token::Kind::plus ||
           lexer_.current().kind == Token::Kind::minus) {
      const bool plus = lexer_.current().kind == Token::Kind::plus;
      const std::size_t pos = lexer_.current().pos;
      lexer_.advance();
      auto parent = std::make_unique<Ast>();
      parent->kind = plus ? Ast::Kind::add : Ast::Kind::sub;
      parent->pos = pos;
      parent->lhs = std::move(node);
      parent->rhs = term();
      node = std::move(parent);
    }
    return node;
  }

  AstPtr term() {
    AstPtr node = factor();
    while (lexer_.current().kind == Token::Kind::star) {
      const std::size_t pos = lexer_.current().pos;
      lexer_.advance();
      auto parent = std::make_unique<Ast>();
      parent->kind = Ast::Kind::mul;
      parent->pos = pos;
      parent->lhs = std::move(node);
      parent->rhs = factor();
      node = std::move(parent);
    }
    return node;
  }

  AstPtr factor() {
    const Token tok = lexer_.current();
    switch (tok.kind) {
      case Token::Kind::number: {
        lexer_.advance();
        auto node = std::make_unique<Ast>();
        node->kind = Ast::Kind::number;
        node->num = tok.text;
        node->pos = tok.pos;
        if (lexer_.current().kind == Token::Kind::slash) {
          lexer_.advance();
          if (lexer_.current().kind != Token::Kind::number)
            fail(Errc::syntax_error, "expected denominator at position " +
                                         std::to_string(lexer_.current().pos));
          node->den = lexer_.current().text;
          lexer_.advance();
        }
        return node;
      }
      case Token::Kind::ident: {
        lexer_.advance();
        auto node = std::make_unique<Ast>();
        node->kind = Ast::Kind::ident;
        node->name = tok.text;
        node->pos = tok.pos;
        if (lexer_.current().kind == Token::Kind::caret) {
          lexer_.advance();
          if (lexer_.current().kind != Token::Kind::number)
            fail(Errc::syntax_error,
                 "expected exponent at position " + std::to_string(lexer_.current().pos));
          node->power = std::stoull(lexer_.current().text);
          lexer_.advance();
        }
        return node;
      }
      case Token::Kind::lparen: {
        lexer_.advance();
        AstPtr inner = expr();
        if (lexer_.current().kind != Token::Kind::rparen)
          fail(Errc::syntax_error,
               "expected ')' at position " + std::to_string(lexer_.current().pos));
        lexer_.advance();
        return inner;
      }
      default:
        fail(Errc::syntax_error,
             "expected a term at position " + std::to_string(tok.pos));
    }
  }

  Lexer lexer_;
};

Scalar number_value(const Ast& node, const Field& field) {
  mpq_class q(node.den.empty() ? node.num : node.num + "/" + node.den);
  if (q.get_den() == 0)
    fail(Errc::division_by_zero, "zero denominator at position " + std::to_string(node.pos));
  q.canonicalize();
  return Scalar::of_rational(field, q);
}

/// Generic fold over the AST; Value needs add/sub/neg/mul value semantics.
template <typename Value, typename NumberFn, typename IdentFn>
Value eval_ast(const Ast& node, const NumberFn& on_number, const IdentFn& on_ident) {
  switch (node.kind) {
    case Ast::Kind::number: return on_number(node);
    case Ast::Kind::ident: return on_ident(node);
    case Ast::Kind::neg: return eval_ast<Value>(*node.lhs, on_number, on_ident).neg();
    case Ast::Kind::add:
      return eval_ast<Value>(*node.lhs, on_number, on_ident)
          .add(eval_ast<Value>(*node.rhs, on_number, on_ident));
    case Ast::Kind::sub:
      return eval_ast<Value>(*node.lhs, on_number, on_ident)
          .sub(eval_ast<Value>(*node.rhs, on_number, on_ident));
    case Ast::Kind::mul:
      return eval_ast<Value>(*node.lhs, on_number, on_ident)
          .mul(eval_ast<Value>(*node.rhs, on_number, on_ident));
  }
  throw std::logic_error("unreachable");
}

}  // namespace

PbwElement parse_element(const std::string& src, const AlgebraHandle& algebra) {
  algebra->require_validated();
  const AstPtr ast = Parser(src).parse();
  auto on_number = [&](const Ast& node) {
    return PbwElement::embed_scalar(algebra, number_value(node, algebra->field()));
  };
  auto on_ident = [&](const Ast& node) -> PbwElement {
    PbwElement base = PbwElement::one(algebra);
    if (auto gi = algebra->ring()->gen_index(node.name)) {
      base = PbwElement::embed(algebra, CoeffPoly::generator(algebra->ring(), *gi).pow(node.power));
      return base;
    }
    if (auto vi = algebra->var_index(node.name)) {
      const PbwElement var = PbwElement::variable(algebra, *vi);
      PbwElement acc = PbwElement::one(algebra);
      for (unsigned long long k = 0; k < node.power; ++k) acc = acc.multiply(var);
      return acc;
    }
    fail(Errc::unknown_identifier,
         "'" + node.name + "' at position " + std::to_string(node.pos));
  };
  struct Ops {
    PbwElement value;
    Ops neg() const { return {value.neg()}; }
    Ops add(const Ops& o) const { return {value.add(o.value)}; }
    Ops sub(const Ops& o) const { return {value.sub(o.value)}; }
    Ops mul(const Ops& o) const { return {value.multiply(o.value)}; }
  };
  return eval_ast<Ops>(
             *ast, [&](const Ast& n) { return Ops{on_number(n)}; },
             [&](const Ast& n) { return Ops{on_ident(n)}; })
      .value;
}

CoeffPoly parse_ring_poly(const std::string& src, const std::shared_ptr<const PolyRing>& ring) {
  const AstPtr ast = Parser(src).parse();
  auto on_number = [&](const Ast& node) {
    return CoeffPoly::constant(ring, number_value(node, ring->field()));
  };
  auto on_ident = [&](const Ast& node) -> CoeffPoly {
    if (auto gi = ring->gen_index(node.name))
      return CoeffPoly::generator(ring, *gi).pow(node.power);
    fail(Errc::unknown_identifier, "'" + node.name + "' at position " + std::to_string(node.pos));
  };
  return eval_ast<CoeffPoly>(*ast, on_number, on_ident);
}

Scalar parse_scalar_expr(const std::string& src, const Field& field) {
  const AstPtr ast = Parser(src).parse();
  auto on_number = [&](const Ast& node) { return number_value(node, field); };
  auto on_ident = [&](const Ast& node) -> Scalar {
    fail(Errc::unknown_identifier,
         "'" + node.name + "' at position " + std::to_string(node.pos) +
             " (scalar expression expected)");
  };
  return eval_ast<Scalar>(*ast, on_number, on_ident);
}

}  // namespace skewpbw
