#include "commop/xpoly.hpp"

#include "commop/error.hpp"

namespace commop {

namespace {

const ParamScalar& zero_scalar() {
  static const ParamScalar zero;
  return zero;
}

bool is_single_term(const ParamScalar& c) {
  return c.is_polynomial() && c.num().term_count() == 1;
}

}  // namespace

XPoly::XPoly(ParamScalar constant) {
  if (!constant.is_zero()) c_.push_back(std::move(constant));
}

XPoly::XPoly(std::vector<ParamScalar> ascending) : c_(std::move(ascending)) { trim(); }

XPoly XPoly::monomial(ParamScalar c, std::size_t power) {
  XPoly p;
  if (c.is_zero()) return p;
  p.c_.resize(power + 1);
  p.c_[power] = std::move(c);
  return p;
}

void XPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const ParamScalar& XPoly::coefficient(std::size_t power) const {
  return power < c_.size() ? c_[power] : zero_scalar();
}

XPoly XPoly::operator-() const {
  XPoly out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

XPoly& XPoly::operator+=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

XPoly& XPoly::operator*=(const ParamScalar& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  XPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  out.c_.resize(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      if (b.c_[j].is_zero()) continue;
      out.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  out.trim();
  return out;
}

XPoly XPoly::derivative(std::size_t k) const {
  if (k >= c_.size()) return XPoly();
  std::vector<ParamScalar> out(c_.size() - k);
  for (std::size_t i = k; i < c_.size(); ++i) {
    // i!/(i-k)!
    Int falling = 1;
    for (std::size_t j = 0; j < k; ++j) falling *= static_cast<unsigned long>(i - j);
    out[i - k] = c_[i] * ParamScalar(Rat(falling));
  }
  return XPoly(std::move(out));
}

XPoly XPoly::integrate(const ParamScalar& constant) const {
  std::vector<ParamScalar> out(c_.size() + 1);
  out[0] = constant;
  for (std::size_t i = 0; i < c_.size(); ++i)
    out[i + 1] = c_[i] * ParamScalar(Rat(1, static_cast<unsigned long>(i + 1)));
  return XPoly(std::move(out));
}

XPoly XPoly::substitute(const std::map<std::size_t, Rat>& bindings) const {
  std::vector<ParamScalar> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.substitute(bindings));
  return XPoly(std::move(out));
}

XPoly XPoly::substitute(const std::map<std::size_t, ParamScalar>& values) const {
  std::vector<ParamScalar> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.substitute(values));
  return XPoly(std::move(out));
}

bool XPoly::mentions(std::size_t var) const {
  for (const auto& c : c_)
    if (c.mentions(var)) return true;
  return false;
}

std::string XPoly::to_string(const ParamSpace& space) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const ParamScalar& c = c_[k];
    if (c.is_zero()) continue;
    std::string power = k == 0 ? "" : (k == 1 ? "x" : "x^" + std::to_string(k));
    std::string term;
    if (k == 0) {
      term = c.to_string(space);
    } else if (c == ParamScalar(1)) {
      term = power;
    } else if (c == ParamScalar(-1)) {
      term = "-" + power;
    } else if (is_single_term(c)) {
      term = c.to_string(space) + "*" + power;
    } else {
      term = "(" + c.to_string(space) + ")*" + power;
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

XPoly xpoly_derivative(const XPoly& p, std::size_t k) { return p.derivative(k); }

XPoly xpoly_integrate(const XPoly& p, std::string_view constant_label,
                      const ParamSpace& space) {
  return p.integrate(ParamScalar::variable(space.index(constant_label)));
}

}  // namespace commop
