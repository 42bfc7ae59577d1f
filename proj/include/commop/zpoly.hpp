#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "commop/xpoly.hpp"

namespace commop {

// Dense ascending polynomial in the spectral variable z with coefficients in
// T (XPoly for Q and residuals, ParamScalar for curves).
template <class T>
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<T> ascending) : c_(std::move(ascending)) { trim(); }

  static ZPoly z_power(std::size_t k) {
    std::vector<T> c(k + 1);
    c[k] = T(1);
    return ZPoly(std::move(c));
  }

  int degree() const noexcept {
    return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1;
  }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<T>& coefficients() const noexcept { return c_; }
  T coefficient(std::size_t k) const { return k < c_.size() ? c_[k] : T(); }

  ZPoly& operator+=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  ZPoly& operator-=(const ZPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<T> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return ZPoly(std::move(out));
  }
  // Coefficientwise scaling.
  friend ZPoly operator*(const ZPoly& a, const T& s) {
    std::vector<T> out;
    out.reserve(a.c_.size());
    for (const auto& c : a.c_) out.push_back(c * s);
    return ZPoly(std::move(out));
  }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

  template <class F>
  auto map(F&& f) const {
    using U = decltype(f(std::declval<const T&>()));
    std::vector<U> out;
    out.reserve(c_.size());
    for (const auto& c : c_) out.push_back(f(c));
    return ZPoly<U>(std::move(out));
  }

  // Highest power first; each coefficient rendered by `show`.
  std::string to_string(const std::function<std::string(const T&)>& show) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::string coeff = show(c_[k]);
      std::string zp = k == 0 ? "" : (k == 1 ? "z" : "z^" + std::to_string(k));
      std::string term;
      if (k == 0)
        term = coeff;
      else if (coeff == "1")
        term = zp;
      else if (coeff == "-1")
        term = "-" + zp;
      else
        term = "(" + coeff + ")*" + zp;
      if (out.empty())
        out = term;
      else if (term.front() == '-')
        out += " - " + term.substr(1);
      else
        out += " + " + term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

using ZXPoly = ZPoly<XPoly>;
using ZScalarPoly = ZPoly<ParamScalar>;

// x-derivative applied to each z-coefficient.
inline ZXPoly x_derivative(const ZXPoly& q, std::size_t k = 1) {
  return q.map([k](const XPoly& c) { return c.derivative(k); });
}

}  // namespace commop
