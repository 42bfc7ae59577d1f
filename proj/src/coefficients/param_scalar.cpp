#include "commop/param_scalar.hpp"

#include "commop/error.hpp"
#include "commop/expr.hpp"

namespace commop {

namespace {

ParamPoly exact(const ParamPoly& a, const ParamPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorKind::invalid_argument, "internal: inexact cofactor division");
  return std::move(*q);
}

// Evaluates p with each parameter replaced through `value_of`.
template <class ValueOf>
ParamScalar evaluate(const ParamPoly& p, ValueOf&& value_of) {
  ParamScalar out;
  std::map<std::pair<std::size_t, std::uint32_t>, ParamScalar> powers;
  for (const auto& [e, c] : p.terms()) {
    ParamScalar term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto key = std::make_pair(i, e[i]);
      auto it = powers.find(key);
      if (it == powers.end()) it = powers.emplace(key, value_of(i).pow(e[i])).first;
      term *= it->second;
    }
    out += term;
  }
  return out;
}

}  // namespace

ParamScalar ParamScalar::fraction(ParamPoly num, ParamPoly den) {
  if (den.is_zero()) throw Error(ErrorKind::division_by_zero, "division by zero");
  ParamScalar out;
  if (num.is_zero()) return out;
  if (den.is_constant()) {
    out.num_ = num * Rat(1 / den.constant_term());
    return out;
  }
  ParamPoly g = gcd(num, den);
  if (!g.is_constant()) {
    num = exact(num, g);
    den = exact(den, g);
  }
  Rat lead = den.leading_coefficient();
  if (den.is_constant()) {
    out.num_ = num * Rat(1 / lead);
    return out;
  }
  if (lead != 1) {
    Rat inv = 1 / lead;
    num *= inv;
    den *= inv;
  }
  out.num_ = std::move(num);
  out.den_ = std::move(den);
  return out;
}

Rat ParamScalar::numeric_value() const {
  if (!is_numeric())
    throw Error(ErrorKind::invalid_argument, "value depends on parameters");
  return num_.constant_term();
}

ParamScalar ParamScalar::operator-() const {
  ParamScalar out = *this;
  out.num_ = -out.num_;
  return out;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = fraction(num_ + o.num_, den_);
  return *this = fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return *this += -o; }

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) {
  if (is_polynomial() && o.is_polynomial()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = fraction(num_ * o.num_, den_ * o.den_);
}

ParamScalar& ParamScalar::operator/=(const ParamScalar& o) {
  if (o.is_zero()) throw Error(ErrorKind::division_by_zero, "division by zero");
  if (o.is_numeric()) {
    num_ *= Rat(1 / o.numeric_value());
    return *this;
  }
  return *this = fraction(num_ * o.den_, den_ * o.num_);
}

ParamScalar ParamScalar::inverse() const { return ParamScalar(1) / *this; }

ParamScalar ParamScalar::pow(unsigned k) const {
  ParamScalar out;
  out.num_ = num_.pow(k);
  out.den_ = den_.pow(k);
  return out;
}

ParamScalar ParamScalar::substitute(const std::map<std::size_t, Rat>& bindings) const {
  ParamPoly n = num_;
  ParamPoly d = den_;
  for (const auto& [var, value] : bindings) {
    n = n.substitute(var, value);
    d = d.substitute(var, value);
  }
  if (d.is_zero())
    throw Error(ErrorKind::division_by_zero, "denominator vanishes under binding");
  return fraction(std::move(n), std::move(d));
}

ParamScalar ParamScalar::substitute(const std::map<std::size_t, ParamScalar>& values) const {
  auto value_of = [&](std::size_t i) {
    auto it = values.find(i);
    return it == values.end() ? variable(i) : it->second;
  };
  ParamScalar n = evaluate(num_, value_of);
  if (is_polynomial()) return n / ParamScalar(den_);
  ParamScalar d = evaluate(den_, value_of);
  if (d.is_zero())
    throw Error(ErrorKind::division_by_zero, "denominator vanishes under substitution");
  return n / d;
}

std::string ParamScalar::to_string(const ParamSpace& space) const {
  if (is_polynomial()) return num_.to_string(space);
  return "(" + num_.to_string(space) + ")/(" + den_.to_string(space) + ")";
}

std::optional<ParamScalar> scalar_arith(const ParamScalar& a, const ParamScalar& b,
                                        ArithOp op) {
  switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div:
      if (b.is_zero()) return std::nullopt;
      return a / b;
  }
  return std::nullopt;
}

ParamPoly mpoly_gcd(const ParamPoly& a, const ParamPoly& b) { return gcd(a, b); }

ParamScalar parse_scalar(std::string_view text, const ParamSpace& space) {
  ExprPtr tree = parse_expression(text);
  return evaluate_scalar(*tree, space);
}

}  // namespace commop
