#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commop/param_space.hpp"
#include "commop/rat.hpp"

namespace commop {

// Exponent vector over a ParamSpace. Trailing zeros are always trimmed, so a
// vector of length k only mentions the first k parameters and the constant
// monomial is the empty vector.
using Exponents = std::vector<std::uint32_t>;

std::uint32_t total_degree(const Exponents& e);

// Graded lexicographic order, largest first: higher total degree wins, ties
// broken by the exponent of the earliest parameter.
struct GradedLexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

// Multivariate polynomial with rational coefficients over the parameters of a
// ParamSpace. Zero coefficients are never stored.
class ParamPoly {
 public:
  using TermMap = std::map<Exponents, Rat, GradedLexGreater>;

  ParamPoly() = default;
  ParamPoly(const Rat& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c) : ParamPoly(Rat(c)) {}  // NOLINT

  static ParamPoly variable(std::size_t index, std::uint32_t power = 1);
  static ParamPoly monomial(Exponents exps, const Rat& c);

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Constant term; the value of the polynomial when it is constant.
  Rat constant_term() const;

  // Leading term in graded-lex order. Undefined on zero.
  const Exponents& leading_exponents() const { return terms_.begin()->first; }
  const Rat& leading_coefficient() const { return terms_.begin()->second; }

  // One past the largest parameter index that occurs.
  std::size_t var_bound() const noexcept;
  std::uint32_t degree_in(std::size_t var) const;
  std::uint32_t total_degree() const;
  bool mentions(std::size_t var) const { return degree_in(var) > 0; }

  ParamPoly operator-() const;
  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  ParamPoly& operator*=(const Rat& c);

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  friend ParamPoly operator*(ParamPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.terms_ == b.terms_;
  }

  ParamPoly pow(unsigned k) const;
  ParamPoly derivative(std::size_t var) const;
  // Replace one parameter by a rational value.
  ParamPoly substitute(std::size_t var, const Rat& value) const;

  // q with q * divisor == *this, or nullopt when the division is not exact.
  std::optional<ParamPoly> divide_exact(const ParamPoly& divisor) const;

  // Coefficients as a univariate polynomial in `var`, ascending. The entries
  // do not mention `var`.
  std::vector<ParamPoly> coefficients_in(std::size_t var) const;
  static ParamPoly from_coefficients(std::size_t var,
                                     const std::vector<ParamPoly>& coeffs);

  // Scale to integer coefficients with gcd 1 and a positive leading
  // coefficient. Zero stays zero.
  ParamPoly primitive() const;

  std::string to_string(const ParamSpace& space) const;

 private:
  void add_term(const Exponents& e, const Rat& c);

  TermMap terms_;
};

// Greatest common divisor in Q[params], normalized by primitive(). Returns 1
// for coprime inputs (including any pair of nonzero constants).
ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

}  // namespace commop
