#include "commop/diffop.hpp"

namespace commop {

namespace {

const XPoly& zero_xpoly() {
  static const XPoly zero;
  return zero;
}

}  // namespace

DiffOp::DiffOp(XPoly multiplier) {
  if (!multiplier.is_zero()) c_.push_back(std::move(multiplier));
}

DiffOp::DiffOp(std::vector<XPoly> ascending) : c_(std::move(ascending)) { trim(); }

DiffOp DiffOp::derivation(std::size_t order) {
  std::vector<XPoly> c(order + 1);
  c[order] = XPoly(1);
  return DiffOp(std::move(c));
}

void DiffOp::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const XPoly& DiffOp::coefficient(std::size_t order) const {
  return order < c_.size() ? c_[order] : zero_xpoly();
}

DiffOp DiffOp::operator-() const {
  DiffOp out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

DiffOp& DiffOp::operator+=(const DiffOp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

// (a D^i)(b D^j) = sum_k C(i,k) a b^(k) D^(i+j-k)
DiffOp operator*(const DiffOp& a, const DiffOp& b) {
  if (a.is_zero() || b.is_zero()) return DiffOp();
  const std::size_t top_a = a.c_.size() - 1;
  std::vector<XPoly> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t j = 0; j < b.c_.size(); ++j) {
    const XPoly& bj = b.c_[j];
    if (bj.is_zero()) continue;
    std::vector<XPoly> derivs{bj};
    for (std::size_t k = 1; k <= top_a && !derivs.back().is_zero(); ++k)
      derivs.push_back(derivs.back().derivative());
    for (std::size_t i = 0; i <= top_a; ++i) {
      const XPoly& ai = a.c_[i];
      if (ai.is_zero()) continue;
      for (std::size_t k = 0; k <= i && k < derivs.size(); ++k) {
        if (derivs[k].is_zero()) continue;
        out[i + j - k] += (ai * derivs[k]) * ParamScalar(binomial(static_cast<unsigned>(i),
                                                                   static_cast<unsigned>(k)));
      }
    }
  }
  return DiffOp(std::move(out));
}

DiffOp DiffOp::substitute(const std::map<std::size_t, ParamScalar>& values) const {
  std::vector<XPoly> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(c.substitute(values));
  return DiffOp(std::move(out));
}

std::string DiffOp::to_string(const ParamSpace& space) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    const XPoly& c = c_[k];
    if (c.is_zero()) continue;
    std::string d = k == 0 ? "" : (k == 1 ? "D" : "D^" + std::to_string(k));
    std::string coeff = c.to_string(space);
    std::string term;
    if (k == 0) {
      term = coeff;
    } else if (coeff == "1") {
      term = d;
    } else if (coeff == "-1") {
      term = "-" + d;
    } else {
      term = "(" + coeff + ")*" + d;
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

DiffOp diffop_compose(const DiffOp& a, const DiffOp& b) { return a * b; }

DiffOp diffop_commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp diffop_pow(const DiffOp& a, unsigned k) {
  DiffOp out = DiffOp::identity();
  for (unsigned i = 0; i < k; ++i) out = out * a;
  return out;
}

DiffOp build_square_form(const XPoly& V, const XPoly& W) {
  XPoly dV = V.derivative();
  return DiffOp(std::vector<XPoly>{
      V.derivative(2) + V * V + W,
      dV * ParamScalar(2),
      V * ParamScalar(2),
      XPoly(),
      XPoly(1),
  });
}

}  // namespace commop
