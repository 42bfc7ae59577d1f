#include "commop/chain.hpp"

#include <algorithm>

#include "commop/error.hpp"

namespace commop {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::unique: return "unique";
    case SolveStatus::underdetermined: return "underdetermined";
    case SolveStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

XPoly recursion_step(const XPoly& a, const XPoly& V, const XPoly& W,
                     const ParamScalar& next_constant) {
  const XPoly a1 = a.derivative(1);
  const XPoly a2 = a.derivative(2);
  const XPoly a3 = a.derivative(3);
  const XPoly a5 = a.derivative(5);
  const XPoly dV = V.derivative(1);
  const XPoly ddV = V.derivative(2);
  const XPoly dW = W.derivative(1);

  XPoly integrand = -a5;
  integrand -= V * a3 * ParamScalar(4);
  integrand -= dV * a2 * ParamScalar(6);
  integrand -= a1 * ddV * ParamScalar(2);
  integrand += a * dW * ParamScalar(2);
  integrand += a1 * W * ParamScalar(4);
  return (integrand * ParamScalar(Rat(1, 4))).integrate(next_constant);
}

QChain build_qchain(const XPoly& V, const XPoly& W, int m, const ParamSpace& space) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "chain degree m must be at least 1");
  std::vector<std::string> names;
  for (int i = 1; i <= m + 1; ++i) names.push_back("C" + std::to_string(i));
  for (const auto& n : names)
    if (space.find(n))
      throw Error(ErrorKind::invalid_argument,
                  "parameter '" + n + "' clashes with a chain constant");

  QChain chain;
  chain.space = space.extended(names);
  chain.V = V;
  chain.W = W;
  chain.m = m;
  for (int i = 0; i <= m; ++i) chain.constants.push_back(space.size() + static_cast<std::size_t>(i));

  chain.a.reserve(static_cast<std::size_t>(m) + 1);
  chain.a.push_back(W * ParamScalar(Rat(1, 2)) + XPoly(ParamScalar::variable(chain.constants[0])));
  for (int i = 1; i <= m; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    chain.a.push_back(
        recursion_step(chain.a.back(), V, W, ParamScalar::variable(chain.constants[idx])));
  }
  return chain;
}

ConstraintEquation affine_decompose(const ParamScalar& value,
                                    const std::vector<std::size_t>& constants) {
  for (auto c : constants)
    if (value.den().mentions(c))
      throw Error(ErrorKind::nonlinear, "chain constant in a denominator");

  ConstraintEquation eq;
  std::vector<ParamPoly> parts(constants.size());
  ParamPoly offset;
  for (const auto& [e, coef] : value.num().terms()) {
    std::optional<std::size_t> which;
    std::uint32_t degree = 0;
    for (std::size_t j = 0; j < constants.size(); ++j) {
      std::size_t var = constants[j];
      if (var < e.size() && e[var] > 0) {
        degree += e[var];
        which = j;
      }
    }
    if (degree == 0) {
      offset += ParamPoly::monomial(e, coef);
    } else if (degree == 1) {
      Exponents rest = e;
      rest[constants[*which]] = 0;
      parts[*which] += ParamPoly::monomial(std::move(rest), coef);
    } else {
      throw Error(ErrorKind::nonlinear, "product of chain constants in a constraint");
    }
  }
  ParamScalar den(value.den());
  for (auto& p : parts) eq.coefficients.push_back(ParamScalar(std::move(p)) / den);
  eq.offset = ParamScalar(std::move(offset)) / den;
  return eq;
}

ConstraintSystem extract_constraints(const QChain& chain) {
  ConstraintSystem sys;
  sys.unknowns.assign(chain.constants.begin(), chain.constants.end() - 1);
  const XPoly& last = chain.a.back();
  const std::size_t top_constant = chain.constants.back();
  for (int p = last.degree(); p >= 1; --p) {
    const ParamScalar& c = last.coefficient(static_cast<std::size_t>(p));
    if (c.is_zero()) continue;
    ConstraintEquation full = affine_decompose(c, chain.constants);
    if (!full.coefficients.back().is_zero() || c.mentions(top_constant))
      throw Error(ErrorKind::invalid_argument, "internal: C_{m+1} entered a constraint");
    full.coefficients.pop_back();
    full.x_power = static_cast<std::size_t>(p);
    sys.equations.push_back(std::move(full));
  }
  return sys;
}

namespace {

struct Row {
  std::vector<ParamScalar> coefficients;
  ParamScalar offset;

  // this -= f * other
  void subtract(const ParamScalar& f, const Row& other) {
    for (std::size_t j = 0; j < coefficients.size(); ++j)
      if (!other.coefficients[j].is_zero()) coefficients[j] -= f * other.coefficients[j];
    if (!other.offset.is_zero()) offset -= f * other.offset;
  }

  void scale(const ParamScalar& f) {
    for (auto& c : coefficients) c *= f;
    offset *= f;
  }
};

void note_side_condition(std::vector<ParamScalar>& conds, const ParamScalar& s) {
  if (s.is_numeric()) return;
  if (std::find(conds.begin(), conds.end(), s) == conds.end()) conds.push_back(s);
}

}  // namespace

SolveOutcome solve_constants(const ConstraintSystem& sys) {
  SolveOutcome out;
  const std::size_t n = sys.unknowns.size();
  std::vector<std::pair<Row, std::size_t>> pivots;

  for (const auto& eq : sys.equations) {
    Row r{eq.coefficients, eq.offset};
    r.coefficients.resize(n);
    for (const auto& [prow, pcol] : pivots) {
      ParamScalar f = r.coefficients[pcol];
      if (!f.is_zero()) r.subtract(f, prow);
    }
    std::optional<std::size_t> col;
    for (std::size_t j = n; j-- > 0;) {
      if (!r.coefficients[j].is_zero()) {
        col = j;
        break;
      }
    }
    if (!col) {
      if (r.offset.is_zero()) continue;
      note_side_condition(out.side_conditions, r.offset);
      out.status = SolveStatus::infeasible;
      out.contradiction = ConstraintEquation{eq.x_power, r.coefficients, r.offset};
      return out;
    }
    ParamScalar p = r.coefficients[*col];
    note_side_condition(out.side_conditions, p);
    r.scale(p.inverse());
    for (auto& [prow, pcol] : pivots) {
      ParamScalar f = prow.coefficients[*col];
      if (!f.is_zero()) prow.subtract(f, r);
    }
    pivots.emplace_back(std::move(r), *col);
  }

  std::vector<bool> pinned(n, false);
  for (const auto& [row, col] : pivots) pinned[col] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!pinned[j]) out.free.push_back(sys.unknowns[j]);

  for (const auto& [row, col] : pivots) {
    ParamScalar value = -row.offset;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == col || row.coefficients[j].is_zero()) continue;
      value -= row.coefficients[j] * ParamScalar::variable(sys.unknowns[j]);
    }
    out.assignment.emplace(sys.unknowns[col], std::move(value));
  }
  out.status = out.free.empty() ? SolveStatus::unique : SolveStatus::underdetermined;
  return out;
}

std::map<std::size_t, ParamScalar> resolve_constants(const SolveOutcome& outcome,
                                                     const FreeConstantPolicy& policy) {
  if (outcome.status == SolveStatus::infeasible)
    throw Error(ErrorKind::invalid_argument, "constraint system is infeasible");
  std::map<std::size_t, ParamScalar> free_values;
  for (auto c : outcome.free) {
    auto it = policy.overrides.find(c);
    if (it != policy.overrides.end())
      free_values.emplace(c, it->second);
    else if (!policy.keep_symbolic)
      free_values.emplace(c, ParamScalar(0));
  }
  std::map<std::size_t, ParamScalar> values = free_values;
  for (const auto& [c, v] : outcome.assignment) values.emplace(c, v.substitute(free_values));
  return values;
}

ZXPoly assemble_q(const QChain& chain, const std::map<std::size_t, ParamScalar>& constant_values) {
  const auto m = static_cast<std::size_t>(chain.m);
  std::vector<XPoly> coeffs(m + 1);
  coeffs[m] = XPoly(1);
  for (std::size_t i = 1; i <= m; ++i) coeffs[m - i] = chain.a[i - 1].substitute(constant_values);
  return ZXPoly(std::move(coeffs));
}

ZXPoly residual_eq2(const ZXPoly& Q, const XPoly& V, const XPoly& W) {
  const ZXPoly q1 = x_derivative(Q, 1);
  const ZXPoly q2 = x_derivative(Q, 2);
  const ZXPoly q3 = x_derivative(Q, 3);
  const ZXPoly q5 = x_derivative(Q, 5);
  const XPoly dV = V.derivative(1);
  const XPoly ddV = V.derivative(2);
  const XPoly dW = W.derivative(1);

  // 2z - 2W + V'' as a z-polynomial.
  const ZXPoly bracket(std::vector<XPoly>{ddV - W * ParamScalar(2), XPoly(2)});

  ZXPoly r = q5;
  r += q3 * (V * ParamScalar(4));
  r += q2 * (dV * ParamScalar(6));
  r += (q1 * bracket) * XPoly(2);
  r -= Q * (dW * ParamScalar(2));
  return r;
}

}  // namespace commop
