#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "commop/param_poly.hpp"

namespace commop {

// Element of Q(params): a reduced quotient num/den of parameter polynomials.
//
// Canonical form: gcd(num, den) = 1, den has leading coefficient 1 in
// graded-lex order, and purely numeric values (indeed every polynomial) have
// den = 1. Two equal scalars therefore have identical representations.
class ParamScalar {
 public:
  ParamScalar() : den_(1) {}
  ParamScalar(const Rat& c) : num_(c), den_(1) {}  // NOLINT
  ParamScalar(long c) : num_(c), den_(1) {}        // NOLINT
  ParamScalar(ParamPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT

  // Throws Error(division_by_zero) when den is the zero polynomial.
  static ParamScalar fraction(ParamPoly num, ParamPoly den);
  static ParamScalar variable(std::size_t index) { return ParamPoly::variable(index); }

  const ParamPoly& num() const noexcept { return num_; }
  const ParamPoly& den() const noexcept { return den_; }

  bool is_zero() const noexcept { return num_.is_zero(); }
  bool is_polynomial() const noexcept { return den_.is_constant(); }
  bool is_numeric() const noexcept { return num_.is_constant() && den_.is_constant(); }
  // Throws Error(invalid_argument) when the value depends on a parameter.
  Rat numeric_value() const;
  bool mentions(std::size_t var) const { return num_.mentions(var) || den_.mentions(var); }
  std::size_t var_bound() const { return std::max(num_.var_bound(), den_.var_bound()); }

  ParamScalar operator-() const;
  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  ParamScalar& operator/=(const ParamScalar& o);

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(ParamScalar a, const ParamScalar& b) { return a *= b; }
  friend ParamScalar operator/(ParamScalar a, const ParamScalar& b) { return a /= b; }
  friend bool operator==(const ParamScalar& a, const ParamScalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  ParamScalar inverse() const;
  ParamScalar pow(unsigned k) const;

  // Rational instantiation of some parameters; unbound ones survive. Throws
  // Error(division_by_zero) if the denominator vanishes under the binding.
  ParamScalar substitute(const std::map<std::size_t, Rat>& bindings) const;
  // Replace parameters by arbitrary scalars.
  ParamScalar substitute(const std::map<std::size_t, ParamScalar>& values) const;

  std::string to_string(const ParamSpace& space) const;

 private:
  ParamPoly num_;
  ParamPoly den_;
};

enum class ArithOp { add, sub, mul, div };

// Division by zero is reported as nullopt instead of an exception.
std::optional<ParamScalar> scalar_arith(const ParamScalar& a, const ParamScalar& b,
                                        ArithOp op);

ParamPoly mpoly_gcd(const ParamPoly& a, const ParamPoly& b);

// Reads the textual scalar grammar: integers, p/q, parameter names, + - * / ^
// and parentheses. Throws ParseError with the offending offset.
ParamScalar parse_scalar(std::string_view text, const ParamSpace& space);

}  // namespace commop
