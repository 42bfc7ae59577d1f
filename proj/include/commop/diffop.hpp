#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "commop/xpoly.hpp"

namespace commop {

// Ordinary differential operator sum_i u_i(x) D^i with the coefficient on the
// left of the derivation. Dense in the order; the top coefficient is nonzero.
class DiffOp {
 public:
  DiffOp() = default;
  DiffOp(XPoly multiplier);  // NOLINT: multiplication operator, order 0
  explicit DiffOp(std::vector<XPoly> ascending);

  static DiffOp identity() { return DiffOp(XPoly(1)); }
  static DiffOp derivation(std::size_t order = 1);

  int order() const noexcept {
    return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  const XPoly& coefficient(std::size_t order) const;
  const std::vector<XPoly>& coefficients() const noexcept { return c_; }

  DiffOp operator-() const;
  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);

  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  // Composition a∘b.
  friend DiffOp operator*(const DiffOp& a, const DiffOp& b);
  friend bool operator==(const DiffOp& a, const DiffOp& b) { return a.c_ == b.c_; }

  DiffOp substitute(const std::map<std::size_t, ParamScalar>& values) const;

  // "D^4 + (2*A6*x^6 + 2*A2*x^2)*D^2 + ...", highest order first.
  std::string to_string(const ParamSpace& space) const;

 private:
  void trim();

  std::vector<XPoly> c_;
};

DiffOp diffop_compose(const DiffOp& a, const DiffOp& b);
DiffOp diffop_commutator(const DiffOp& a, const DiffOp& b);
DiffOp diffop_pow(const DiffOp& a, unsigned k);

// (D^2 + V)^2 + W expanded: D^4 + 2V D^2 + 2V' D + (V'' + V^2 + W).
DiffOp build_square_form(const XPoly& V, const XPoly& W);

// Operator text: x, D and parameters with + - * / ^ and parentheses. `*` is
// composition, so "D*x" reads as x*D + 1. Division only by scalars.
DiffOp parse_diffop(std::string_view text, const ParamSpace& space);

}  // namespace commop
