#include "commop/curve.hpp"

#include <algorithm>
#include <sstream>

#include "commop/error.hpp"

namespace commop {

std::vector<std::string> SpectralCurve::coefficient_strings() const {
  std::vector<std::string> out;
  const auto& c = F.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) out.push_back(c[k].to_string(space));
  return out;
}

std::string SpectralCurve::to_string() const {
  return F.to_string([this](const ParamScalar& s) { return s.to_string(space); });
}

SpectralCurve spectral_curve(const ZXPoly& Q, const XPoly& V, const XPoly& W,
                             const ParamSpace& space) {
  const ZXPoly q1 = x_derivative(Q, 1);
  const ZXPoly q2 = x_derivative(Q, 2);
  const ZXPoly q3 = x_derivative(Q, 3);
  const ZXPoly q4 = x_derivative(Q, 4);
  const XPoly dV = V.derivative(1);
  const ParamScalar half(Rat(1, 2));

  const ZXPoly z_minus_w(std::vector<XPoly>{-W, XPoly(1)});
  ZXPoly inner = q1 * (dV * ParamScalar(2));
  inner += q2 * (V * ParamScalar(4));
  inner += q4;

  ZXPoly f = z_minus_w * Q * Q;
  f -= (q1 * q1) * V;
  f += (q2 * q2) * XPoly(ParamScalar(Rat(1, 4)));
  f -= (q1 * q3) * XPoly(half);
  f += (Q * inner) * XPoly(half);

  std::vector<ParamScalar> coeffs;
  std::ostringstream bad;
  for (std::size_t k = 0; k < f.coefficients().size(); ++k) {
    const XPoly& c = f.coefficients()[k];
    if (c.degree() > 0) {
      XPoly positive = c - XPoly(c.coefficient(0));
      bad << (bad.tellp() > 0 ? "; " : "") << "z^" << k << ": " << positive.to_string(space);
    }
    coeffs.push_back(c.coefficient(0));
  }
  if (bad.tellp() > 0)
    throw Error(ErrorKind::x_dependence, "spectral curve depends on x: " + bad.str());

  SpectralCurve curve{space, ZScalarPoly(std::move(coeffs))};
  const int expected = 2 * Q.degree() + 1;
  if (curve.F.degree() != expected || curve.F.coefficients().back() != ParamScalar(1))
    throw Error(ErrorKind::invalid_argument, "internal: spectral curve is not monic of degree 2m+1");
  return curve;
}

namespace {

using RatPoly = std::vector<Rat>;  // ascending

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly rat_remainder(RatPoly a, const RatPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

std::string rat_poly_text(const RatPoly& p) {
  std::vector<ParamScalar> c(p.begin(), p.end());
  return ZScalarPoly(std::move(c)).to_string([](const ParamScalar& s) {
    return s.to_string(ParamSpace());
  });
}

}  // namespace

SingularityVerdict curve_is_singular(const SpectralCurve& curve,
                                     const std::map<std::size_t, Rat>& bindings) {
  RatPoly f;
  std::vector<std::string> unbound;
  for (const auto& c : curve.F.coefficients()) {
    ParamScalar s = c.substitute(bindings);
    if (!s.is_numeric()) {
      for (std::size_t v = 0; v < s.var_bound(); ++v) {
        if (!s.mentions(v)) continue;
        std::string name = v < curve.space.size() ? curve.space.name(v) : "?";
        if (std::find(unbound.begin(), unbound.end(), name) == unbound.end())
          unbound.push_back(name);
      }
      f.push_back(0);
      continue;
    }
    f.push_back(s.numeric_value());
  }
  if (!unbound.empty()) {
    std::string names;
    for (const auto& n : unbound) names += (names.empty() ? "" : ", ") + n;
    throw Error(ErrorKind::unbound_parameter, "unbound parameters in curve: " + names);
  }
  RatPoly df;
  for (std::size_t k = 1; k < f.size(); ++k) df.push_back(f[k] * static_cast<unsigned long>(k));
  RatPoly g = rat_gcd(f, df);
  SingularityVerdict v;
  v.singular = g.size() > 1;
  v.witness = g;
  v.witness_text = rat_poly_text(g);
  return v;
}

namespace {

// Polynomials in z over Q[params], ascending.
using UPoly = std::vector<ParamPoly>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ParamPoly exact_div(const ParamPoly& a, const ParamPoly& b) {
  auto q = a.divide_exact(b);
  if (!q) throw Error(ErrorKind::invalid_argument, "internal: inexact division in squarefree split");
  return std::move(*q);
}

UPoly derivative(const UPoly& p) {
  UPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(p[k] * Rat(static_cast<unsigned long>(k)));
  trim(out);
  return out;
}

UPoly sub(UPoly a, const UPoly& b) {
  if (b.size() > a.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

// lc(b)^(deg a - deg b + 1) * a  mod  b.
UPoly prem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const ParamPoly& lb = b.back();
  std::size_t steps = a.size() - db;
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    ParamPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
    --steps;
  }
  if (steps > 0) {
    ParamPoly f = lb.pow(static_cast<unsigned>(steps));
    for (auto& c : a) c *= f;
  }
  return a;
}

// Divides every coefficient by the leading one. Exact whenever p is a
// multiple of a monic polynomial with coefficients in Q[params].
UPoly make_monic(const UPoly& p) {
  UPoly out;
  for (const auto& c : p) out.push_back(exact_div(c, p.back()));
  return out;
}

// Monic gcd over Q(params) via the subresultant remainder sequence; every
// division in it is exact, so no multivariate gcd is ever taken.
UPoly monic_gcd(UPoly a, UPoly b) {
  trim(a);
  trim(b);
  if (b.empty()) return make_monic(a);
  if (a.empty()) return make_monic(b);
  if (a.size() < b.size()) std::swap(a, b);
  ParamPoly g(1);
  ParamPoly h(1);
  for (;;) {
    const std::size_t d = a.size() - b.size();
    UPoly r = prem(a, b);
    if (r.empty()) return make_monic(b);
    if (r.size() == 1) return UPoly{ParamPoly(1)};
    ParamPoly denom = g * h.pow(static_cast<unsigned>(d));
    for (auto& c : r) c = exact_div(c, denom);
    a = std::move(b);
    b = std::move(r);
    g = a.back();
    if (d == 0) {
      // h unchanged
    } else if (d == 1) {
      h = g;
    } else {
      h = exact_div(g.pow(static_cast<unsigned>(d)), h.pow(static_cast<unsigned>(d - 1)));
    }
  }
}

// a / b with b monic; the division must be exact.
UPoly divide_monic(UPoly a, const UPoly& b) {
  trim(a);
  if (a.size() < b.size()) {
    if (a.empty()) return a;
    throw Error(ErrorKind::invalid_argument, "internal: inexact polynomial division");
  }
  UPoly q(a.size() - b.size() + 1);
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    ParamPoly lead = a.back();
    q[shift] = lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= lead * b[i];
    trim(a);
  }
  if (!a.empty()) throw Error(ErrorKind::invalid_argument, "internal: inexact polynomial division");
  trim(q);
  return q;
}

}  // namespace

std::vector<SquarefreeFactor> curve_structure(const SpectralCurve& curve) {
  const auto& coeffs = curve.F.coefficients();
  if (coeffs.empty()) return {};
  const std::size_t n = coeffs.size() - 1;

  // With D the common denominator, G(z) = D^n F(z/D) is monic with
  // polynomial coefficients; factors of G map back through z -> D z.
  ParamPoly common(1);
  for (const auto& c : coeffs) {
    if (c.is_polynomial()) continue;
    ParamPoly g = gcd(common, c.den());
    common = exact_div(common * c.den(), g);
  }
  UPoly G;
  for (std::size_t i = 0; i <= n; ++i)
    G.push_back(exact_div(coeffs[i].num() * common.pow(static_cast<unsigned>(n - i)), coeffs[i].den()));

  std::vector<std::pair<UPoly, unsigned>> parts;
  // Yun's algorithm.
  UPoly dG = derivative(G);
  UPoly a = monic_gcd(G, dG);
  UPoly b = divide_monic(G, a);
  UPoly c = divide_monic(dG, a);
  UPoly d = sub(c, derivative(b));
  for (unsigned i = 1; b.size() > 1; ++i) {
    a = monic_gcd(b, d);
    b = divide_monic(b, a);
    c = divide_monic(d, a);
    d = sub(c, derivative(b));
    if (a.size() > 1) parts.emplace_back(std::move(a), i);
  }

  std::vector<SquarefreeFactor> out;
  const ParamScalar scale(common);
  for (auto& [p, mult] : parts) {
    const std::size_t k = p.size() - 1;
    std::vector<ParamScalar> back;
    for (std::size_t i = 0; i <= k; ++i)
      back.push_back(ParamScalar(p[i]) / scale.pow(static_cast<unsigned>(k - i)));
    out.push_back({ZScalarPoly(std::move(back)), mult});
  }
  return out;
}

}  // namespace commop
