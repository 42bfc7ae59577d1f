#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "commop/diffop.hpp"
#include "commop/param_scalar.hpp"
#include "commop/xpoly.hpp"

namespace testsupport {

using namespace commop;

inline ParamScalar S(const std::string& text, const ParamSpace& space) {
  return parse_scalar(text, space);
}

inline XPoly X(const std::string& text, const ParamSpace& space) {
  return parse_xpoly(text, space);
}

inline DiffOp Op(const std::string& text, const ParamSpace& space) {
  return parse_diffop(text, space);
}

inline Rat random_rat(std::mt19937& rng, long span = 9, long max_den = 4) {
  std::uniform_int_distribution<long> num(-span, span), den(1, max_den);
  return make_rat(num(rng), den(rng));
}

inline Rat random_nonzero_rat(std::mt19937& rng) {
  Rat r;
  do r = random_rat(rng);
  while (r == 0);
  return r;
}

// Sparse random polynomial in the first `vars` parameters.
inline ParamPoly random_poly(std::mt19937& rng, std::size_t vars, unsigned max_deg = 2,
                             int terms = 3) {
  std::uniform_int_distribution<unsigned> deg(0, max_deg);
  ParamPoly p;
  for (int t = 0; t < terms; ++t) {
    Exponents e(vars);
    for (auto& x : e) x = deg(rng);
    p += ParamPoly::monomial(e, random_rat(rng));
  }
  return p;
}

inline ParamScalar random_scalar(std::mt19937& rng, std::size_t vars) {
  ParamPoly den;
  while (den.is_zero()) den = random_poly(rng, vars, 1, 2);
  return ParamScalar::fraction(random_poly(rng, vars), den);
}

inline XPoly random_xpoly(std::mt19937& rng, std::size_t vars, int max_deg = 3) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::vector<ParamScalar> c(static_cast<std::size_t>(deg(rng)) + 1);
  for (auto& s : c) s = ParamScalar(random_poly(rng, vars, 1, 2));
  return XPoly(c);
}

inline DiffOp random_op(std::mt19937& rng, std::size_t vars, int max_order = 3,
                        int max_deg = 3) {
  std::uniform_int_distribution<int> ord(0, max_order);
  std::vector<XPoly> c(static_cast<std::size_t>(ord(rng)) + 1);
  for (auto& p : c) p = random_xpoly(rng, vars, max_deg);
  return DiffOp(c);
}

// Applies an operator to a polynomial function: sum_k c_k(x) f^(k)(x). This
// is the definition of the operator, independent of the composition formula.
inline XPoly apply(const DiffOp& op, const XPoly& f) {
  XPoly out;
  for (std::size_t k = 0; k < op.coefficients().size(); ++k)
    out += op.coefficients()[k] * f.derivative(k);
  return out;
}

}  // namespace testsupport
