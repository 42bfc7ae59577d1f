#include "commop/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "commop/error.hpp"

namespace commop {

namespace {

void trim(Exponents& e) {
  while (!e.empty() && e.back() == 0) e.pop_back();
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return out;
}

// a - b when b divides a componentwise.
std::optional<Exponents> sub_exponents(const Exponents& a, const Exponents& b) {
  if (b.size() > a.size()) return std::nullopt;
  Exponents out = a;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] > a[i]) return std::nullopt;
    out[i] -= b[i];
  }
  trim(out);
  return out;
}

}  // namespace

std::uint32_t total_degree(const Exponents& e) {
  std::uint32_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedLexGreater::operator()(const Exponents& a, const Exponents& b) const {
  auto da = total_degree(a);
  auto db = total_degree(b);
  if (da != db) return da > db;
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t ea = i < a.size() ? a[i] : 0;
    std::uint32_t eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea > eb;
  }
  return false;
}

ParamPoly::ParamPoly(const Rat& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

ParamPoly ParamPoly::variable(std::size_t index, std::uint32_t power) {
  Exponents e(index + 1, 0);
  e[index] = power;
  return monomial(std::move(e), Rat(1));
}

ParamPoly ParamPoly::monomial(Exponents exps, const Rat& c) {
  ParamPoly p;
  trim(exps);
  if (c != 0) p.terms_.emplace(std::move(exps), c);
  return p;
}

bool ParamPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rat ParamPoly::constant_term() const {
  auto it = terms_.find(Exponents{});
  return it == terms_.end() ? Rat(0) : it->second;
}

std::size_t ParamPoly::var_bound() const noexcept {
  std::size_t n = 0;
  for (const auto& [e, c] : terms_) n = std::max(n, e.size());
  return n;
}

std::uint32_t ParamPoly::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_)
    if (var < e.size()) d = std::max(d, e[var]);
  return d;
}

std::uint32_t ParamPoly::total_degree() const {
  return terms_.empty() ? 0 : commop::total_degree(leading_exponents());
}

void ParamPoly::add_term(const Exponents& e, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

ParamPoly& ParamPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& [e, v] : terms_) v *= c;
  }
  return *this;
}

ParamPoly ParamPoly::pow(unsigned k) const {
  ParamPoly result(1);
  ParamPoly base = *this;
  while (k > 0) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k > 0) base = base * base;
  }
  return result;
}

ParamPoly ParamPoly::derivative(std::size_t var) const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    if (var >= e.size() || e[var] == 0) continue;
    Exponents d = e;
    d[var] -= 1;
    trim(d);
    out.add_term(d, c * e[var]);
  }
  return out;
}

ParamPoly ParamPoly::substitute(std::size_t var, const Rat& value) const {
  ParamPoly out;
  for (const auto& [e, c] : terms_) {
    if (var >= e.size() || e[var] == 0) {
      out.add_term(e, c);
      continue;
    }
    Rat factor;
    mpz_pow_ui(factor.get_num_mpz_t(), value.get_num_mpz_t(), e[var]);
    mpz_pow_ui(factor.get_den_mpz_t(), value.get_den_mpz_t(), e[var]);
    Exponents d = e;
    d[var] = 0;
    trim(d);
    out.add_term(d, c * factor);
  }
  return out;
}

std::optional<ParamPoly> ParamPoly::divide_exact(const ParamPoly& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::division_by_zero, "polynomial division by zero");
  if (divisor.is_constant()) return *this * Rat(1 / divisor.constant_term());
  ParamPoly quotient;
  ParamPoly rest = *this;
  const auto& lead_e = divisor.leading_exponents();
  const auto& lead_c = divisor.leading_coefficient();
  while (!rest.is_zero()) {
    auto shift = sub_exponents(rest.leading_exponents(), lead_e);
    if (!shift) return std::nullopt;
    ParamPoly t = monomial(std::move(*shift), rest.leading_coefficient() / lead_c);
    quotient += t;
    rest -= t * divisor;
  }
  return quotient;
}

std::vector<ParamPoly> ParamPoly::coefficients_in(std::size_t var) const {
  std::vector<ParamPoly> out(degree_in(var) + 1);
  for (const auto& [e, c] : terms_) {
    std::uint32_t k = var < e.size() ? e[var] : 0;
    Exponents rest = e;
    if (var < rest.size()) rest[var] = 0;
    trim(rest);
    out[k].add_term(rest, c);
  }
  while (!out.empty() && out.back().is_zero()) out.pop_back();
  return out;
}

ParamPoly ParamPoly::from_coefficients(std::size_t var,
                                       const std::vector<ParamPoly>& coeffs) {
  ParamPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k].is_zero()) continue;
    out += coeffs[k] * variable(var, static_cast<std::uint32_t>(k));
  }
  return out;
}

ParamPoly ParamPoly::primitive() const {
  if (is_zero()) return *this;
  Int lcm_den = 1;
  for (const auto& [e, c] : terms_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  Int gcd_num = 0;
  for (const auto& [e, c] : terms_) {
    Int scaled = c.get_num() * (lcm_den / c.get_den());
    mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), scaled.get_mpz_t());
  }
  Rat factor(lcm_den, gcd_num);
  factor.canonicalize();
  if (leading_coefficient() < 0) factor = -factor;
  return *this * factor;
}

std::string ParamPoly::to_string(const ParamSpace& space) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rat mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (e.empty() || mag != 1) {
      os << mag.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (need_star) os << '*';
      os << (i < space.size() ? space.name(i) : "_p" + std::to_string(i));
      if (e[i] > 1) os << '^' << e[i];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// gcd: primitive polynomial remainder sequence, recursing on the last variable.

namespace {

using UPoly = std::vector<ParamPoly>;  // ascending in the main variable

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

ParamPoly content(const UPoly& p) {
  ParamPoly g;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

UPoly divide_all(const UPoly& p, const ParamPoly& d) {
  UPoly out;
  out.reserve(p.size());
  for (const auto& c : p) {
    auto q = c.divide_exact(d);
    if (!q) throw Error(ErrorKind::invalid_argument, "gcd: content does not divide");
    out.push_back(std::move(*q));
  }
  return out;
}

UPoly primitive_part(const UPoly& p) { return divide_all(p, content(p)); }

// Pseudo-remainder of a by b (b nonzero, deg a >= deg b).
UPoly prem(UPoly a, const UPoly& b) {
  const std::size_t db = b.size() - 1;
  const ParamPoly& lb = b.back();
  trim(a);
  while (!a.empty() && a.size() - 1 >= db) {
    std::size_t shift = a.size() - 1 - db;
    ParamPoly la = a.back();
    for (auto& c : a) c *= lb;
    for (std::size_t i = 0; i <= db; ++i) a[i + shift] -= la * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

ParamPoly gcd(const ParamPoly& a, const ParamPoly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return ParamPoly(1);
  if (a == b) return a.primitive();

  const std::size_t var = std::max(a.var_bound(), b.var_bound()) - 1;
  UPoly ua = a.coefficients_in(var);
  UPoly ub = b.coefficients_in(var);
  if (ua.size() == 1) return gcd(a, content(ub));
  if (ub.size() == 1) return gcd(content(ua), b);

  ParamPoly ca = content(ua);
  ParamPoly cb = content(ub);
  ParamPoly c = gcd(ca, cb);
  UPoly pa = divide_all(ua, ca);
  UPoly pb = divide_all(ub, cb);
  if (pa.size() < pb.size()) std::swap(pa, pb);

  for (;;) {
    UPoly r = prem(pa, pb);
    if (r.empty()) break;
    if (r.size() == 1) {
      pb = UPoly{ParamPoly(1)};
      break;
    }
    pa = std::move(pb);
    pb = primitive_part(r);
  }
  return (c * ParamPoly::from_coefficients(var, pb)).primitive();
}

}  // namespace commop
