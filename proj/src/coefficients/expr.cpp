#include "commop/expr.hpp"

#include <cctype>

#include "commop/error.hpp"
#include "commop/param_scalar.hpp"

namespace commop {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  ExprPtr make(ExprNode::Kind kind, std::size_t at) {
    auto n = std::make_unique<ExprNode>();
    n->kind = kind;
    n->position = at;
    return n;
  }

  ExprPtr binary(ExprNode::Kind kind, std::size_t at, ExprPtr lhs, ExprPtr rhs) {
    auto n = make(kind, at);
    n->children.push_back(std::move(lhs));
    n->children.push_back(std::move(rhs));
    return n;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept('+'))
        lhs = binary(ExprNode::Kind::add, at, std::move(lhs), term());
      else if (accept('-'))
        lhs = binary(ExprNode::Kind::sub, at, std::move(lhs), term());
      else
        return lhs;
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      skip_space();
      std::size_t at = pos_;
      if (accept('*'))
        lhs = binary(ExprNode::Kind::mul, at, std::move(lhs), unary());
      else if (accept('/'))
        lhs = binary(ExprNode::Kind::div, at, std::move(lhs), unary());
      else
        return lhs;
    }
  }

  ExprPtr unary() {
    skip_space();
    std::size_t at = pos_;
    if (accept('-')) {
      auto n = make(ExprNode::Kind::neg, at);
      n->children.push_back(unary());
      return n;
    }
    if (accept('+')) return unary();
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    skip_space();
    std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_space();
    std::size_t digits_at = pos_;
    std::string digits = read_digits();
    if (digits.empty()) throw ParseError(digits_at, "expected a non-negative integer exponent");
    if (digits.size() > 6) throw ParseError(digits_at, "exponent too large");
    auto n = make(ExprNode::Kind::pow, at);
    n->exponent = static_cast<unsigned>(std::stoul(digits));
    n->children.push_back(std::move(base));
    return n;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  ExprPtr atom() {
    skip_space();
    std::size_t at = pos_;
    if (pos_ >= text_.size()) throw ParseError(at, "unexpected end of input");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto n = make(ExprNode::Kind::number, at);
      n->number = Rat(Int(read_digits()));
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      auto n = make(ExprNode::Kind::symbol, at);
      n->symbol = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    if (accept('(')) {
      ExprPtr inner = expr();
      if (!accept(')')) throw ParseError(pos_, "expected ')'");
      return inner;
    }
    throw ParseError(at, "unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expression(std::string_view text) { return Parser(text).parse(); }

ParamScalar evaluate_scalar(const ExprNode& node, const ParamSpace& space) {
  using K = ExprNode::Kind;
  auto child = [&](std::size_t i) { return evaluate_scalar(*node.children[i], space); };
  switch (node.kind) {
    case K::number: return ParamScalar(node.number);
    case K::symbol: {
      if (is_reserved_symbol(node.symbol))
        throw ParseError(node.position, "'" + node.symbol + "' is not allowed in a scalar");
      auto idx = space.find(node.symbol);
      if (!idx) throw ParseError(node.position, "undeclared parameter '" + node.symbol + "'");
      return ParamScalar::variable(*idx);
    }
    case K::add: return child(0) + child(1);
    case K::sub: return child(0) - child(1);
    case K::mul: return child(0) * child(1);
    case K::div: {
      ParamScalar d = child(1);
      if (d.is_zero())
        throw Error(ErrorKind::division_by_zero,
                    "at offset " + std::to_string(node.position) + ": division by zero");
      return child(0) / d;
    }
    case K::neg: return -child(0);
    case K::pow: return child(0).pow(node.exponent);
  }
  throw ParseError(node.position, "bad expression node");
}

}  // namespace commop
