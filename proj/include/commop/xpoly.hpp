#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "commop/param_scalar.hpp"

namespace commop {

// Degree of the zero polynomial / order of the zero operator.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

// Univariate polynomial in x over Q(params), dense and ascending. The highest
// stored coefficient is nonzero.
class XPoly {
 public:
  XPoly() = default;
  XPoly(ParamScalar constant);  // NOLINT
  XPoly(long constant) : XPoly(ParamScalar(constant)) {}  // NOLINT
  explicit XPoly(std::vector<ParamScalar> ascending);

  static XPoly monomial(ParamScalar c, std::size_t power);
  static XPoly x() { return monomial(ParamScalar(1), 1); }

  int degree() const noexcept {
    return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  // Zero beyond the degree.
  const ParamScalar& coefficient(std::size_t power) const;
  const std::vector<ParamScalar>& coefficients() const noexcept { return c_; }

  XPoly operator-() const;
  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  XPoly& operator*=(const ParamScalar& s);

  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(XPoly a, const ParamScalar& s) { return a *= s; }
  friend XPoly operator*(const ParamScalar& s, XPoly a) { return a *= s; }
  friend bool operator==(const XPoly& a, const XPoly& b) { return a.c_ == b.c_; }

  // k-th derivative in x.
  XPoly derivative(std::size_t k = 1) const;
  // Antiderivative whose constant term is `constant`.
  XPoly integrate(const ParamScalar& constant) const;

  XPoly substitute(const std::map<std::size_t, Rat>& bindings) const;
  XPoly substitute(const std::map<std::size_t, ParamScalar>& values) const;
  bool mentions(std::size_t var) const;

  std::string to_string(const ParamSpace& space) const;

 private:
  void trim();

  std::vector<ParamScalar> c_;
};

XPoly xpoly_derivative(const XPoly& p, std::size_t k);
// `constant_label` must be a declared parameter; it becomes the constant term.
XPoly xpoly_integrate(const XPoly& p, std::string_view constant_label,
                      const ParamSpace& space);

// Polynomial text in x and the parameters, e.g. "A6*x^6 + A2*x^2".
XPoly parse_xpoly(std::string_view text, const ParamSpace& space);

}  // namespace commop
