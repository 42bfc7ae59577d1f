#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "commop/param_space.hpp"
#include "commop/rat.hpp"

namespace commop {

class ParamScalar;

// Syntax tree of the shared textual grammar
//
//   expr  := term (('+' | '-') term)*
//   term  := unary (('*' | '/') unary)*
//   unary := ('-' | '+') unary | power
//   power := atom ('^' integer)?
//   atom  := integer | identifier | '(' expr ')'
//
// Scalars, x-polynomials and operators all use it; the evaluator decides what
// identifiers mean and whether `*` is commutative.
struct ExprNode {
  enum class Kind { number, symbol, add, sub, mul, div, neg, pow };

  Kind kind;
  std::size_t position = 0;
  Rat number;
  std::string symbol;
  unsigned exponent = 0;
  std::vector<std::unique_ptr<ExprNode>> children;
};

using ExprPtr = std::unique_ptr<ExprNode>;

ExprPtr parse_expression(std::string_view text);

// Rejects x, D and undeclared names.
ParamScalar evaluate_scalar(const ExprNode& node, const ParamSpace& space);

}  // namespace commop
