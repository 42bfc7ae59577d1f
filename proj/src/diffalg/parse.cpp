#include "commop/diffop.hpp"
#include "commop/error.hpp"
#include "commop/expr.hpp"

namespace commop {

namespace {

DiffOp evaluate_operator(const ExprNode& node, const ParamSpace& space) {
  using K = ExprNode::Kind;
  auto child = [&](std::size_t i) { return evaluate_operator(*node.children[i], space); };
  switch (node.kind) {
    case K::number: return DiffOp(XPoly(ParamScalar(node.number)));
    case K::symbol:
      if (node.symbol == "x") return DiffOp(XPoly::x());
      if (node.symbol == "D") return DiffOp::derivation(1);
      if (node.symbol == "z")
        throw ParseError(node.position, "'z' is not allowed in an operator");
      if (auto idx = space.find(node.symbol)) return DiffOp(XPoly(ParamScalar::variable(*idx)));
      throw ParseError(node.position, "undeclared parameter '" + node.symbol + "'");
    case K::add: return child(0) + child(1);
    case K::sub: return child(0) - child(1);
    case K::mul: return child(0) * child(1);
    case K::div: {
      DiffOp d = child(1);
      if (d.order() > 0 || d.coefficient(0).degree() > 0)
        throw ParseError(node.position, "division by a non-scalar");
      if (d.is_zero())
        throw Error(ErrorKind::division_by_zero,
                    "at offset " + std::to_string(node.position) + ": division by zero");
      ParamScalar inv = d.coefficient(0).coefficient(0).inverse();
      return child(0) * DiffOp(XPoly(inv));
    }
    case K::neg: return -child(0);
    case K::pow: return diffop_pow(child(0), node.exponent);
  }
  throw ParseError(node.position, "bad expression node");
}

}  // namespace

DiffOp parse_diffop(std::string_view text, const ParamSpace& space) {
  ExprPtr tree = parse_expression(text);
  return evaluate_operator(*tree, space);
}

XPoly parse_xpoly(std::string_view text, const ParamSpace& space) {
  DiffOp op = parse_diffop(text, space);
  if (op.order() > 0) throw ParseError(0, "expected a polynomial in x, found an operator");
  return op.coefficient(0);
}

}  // namespace commop
