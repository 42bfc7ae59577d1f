#include "commop/families.hpp"

#include <algorithm>
#include <functional>

#include "commop/error.hpp"
#include "commop/expr.hpp"

namespace commop {

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::thm1: return "thm1";
    case FamilyKind::thm2: return "thm2";
    case FamilyKind::thm3: return "thm3";
    case FamilyKind::mironov_x3: return "mironov_x3";
    case FamilyKind::dixmier_rank2: return "dixmier_rank2";
    case FamilyKind::dixmier_rank3: return "dixmier_rank3";
  }
  return "unknown";
}

FamilyKind parse_family_kind(const std::string& s) {
  for (auto k : {FamilyKind::thm1, FamilyKind::thm2, FamilyKind::thm3, FamilyKind::mironov_x3,
                 FamilyKind::dixmier_rank2, FamilyKind::dixmier_rank3})
    if (to_string(k) == s) return k;
  throw Error(ErrorKind::invalid_argument, "unknown family '" + s + "'");
}

std::string to_string(Claim c) {
  switch (c) {
    case Claim::feasible: return "feasible";
    case Claim::infeasible: return "infeasible";
    case Claim::none: return "none";
  }
  return "none";
}

std::vector<std::string> family_symbols(FamilyKind k) {
  switch (k) {
    case FamilyKind::thm1: return {"A6", "A2"};
    case FamilyKind::thm2: return {"A4", "A2", "A0"};
    case FamilyKind::thm3: return {"A", "B"};
    case FamilyKind::mironov_x3: return {"A3", "A2", "A1", "A0"};
    case FamilyKind::dixmier_rank2:
    case FamilyKind::dixmier_rank3: return {"alpha"};
  }
  return {};
}

namespace {

std::string coefficient_text(const FamilySpec& spec, const std::string& symbol) {
  auto it = spec.coefficients.find(symbol);
  return it == spec.coefficients.end() ? symbol : it->second;
}

bool symbol_used(const FamilySpec& spec, const std::string& symbol) {
  return !(spec.kind == FamilyKind::thm3 && symbol == "B" && spec.admissible_m);
}

void collect_symbols(const ExprNode& node, std::vector<std::string>& out) {
  if (node.kind == ExprNode::Kind::symbol && !is_reserved_symbol(node.symbol) &&
      std::find(out.begin(), out.end(), node.symbol) == out.end())
    out.push_back(node.symbol);
  for (const auto& c : node.children) collect_symbols(*c, out);
}

ParamScalar coefficient(const FamilySpec& spec, const std::string& symbol,
                        const ParamSpace& space) {
  return parse_scalar(coefficient_text(spec, symbol), space);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::invalid_argument, "family constraint violated: " + what);
}

ParamScalar q(long v) { return ParamScalar(v); }
ParamScalar q(long num, long den) { return ParamScalar(make_rat(num, den)); }

}  // namespace

ParamSpace family_default_space(const FamilySpec& spec) {
  std::vector<std::string> names;
  for (const auto& s : family_symbols(spec.kind)) {
    if (!symbol_used(spec, s)) continue;
    collect_symbols(*parse_expression(coefficient_text(spec, s)), names);
  }
  return ParamSpace(std::move(names));
}

FamilyOperator build_family(const FamilySpec& spec, const ParamSpace& space) {
  auto x_pow = [](const ParamScalar& c, int k) {
    return XPoly::monomial(c, static_cast<std::size_t>(k));
  };
  const long g = spec.g;
  switch (spec.kind) {
    case FamilyKind::thm1: {
      require(g >= 1, "g >= 1");
      auto A6 = coefficient(spec, "A6", space);
      auto A2 = coefficient(spec, "A2", space);
      require(!A6.is_zero(), "A6 != 0");
      return {x_pow(A6, 6) + x_pow(A2, 2), x_pow(A6 * q(16 * g * (g + 1)), 4)};
    }
    case FamilyKind::thm2: {
      require(g >= 1, "g >= 1");
      auto A4 = coefficient(spec, "A4", space);
      auto A2 = coefficient(spec, "A2", space);
      auto A0 = coefficient(spec, "A0", space);
      require(!A4.is_zero(), "A4 != 0");
      return {x_pow(A4, 4) + x_pow(A2, 2) + XPoly(A0), x_pow(A4 * q(4 * g * (g + 1)), 2)};
    }
    case FamilyKind::thm3: {
      require(spec.n > 3, "n > 3");
      auto A = coefficient(spec, "A", space);
      require(!A.is_zero(), "A != 0");
      ParamScalar B;
      if (spec.admissible_m) {
        const long m = *spec.admissible_m;
        require(m >= 1, "admissible m >= 1");
        B = A * q((spec.n - 2L) * (spec.n - 2L) * m * (m + 1));
      } else {
        B = coefficient(spec, "B", space);
      }
      const int k = spec.w_degree.value_or(spec.n - 2);
      require(k >= 0, "W degree >= 0");
      return {x_pow(A, spec.n), x_pow(B, k)};
    }
    case FamilyKind::mironov_x3: {
      require(g >= 1, "g >= 1");
      auto A3 = coefficient(spec, "A3", space);
      require(!A3.is_zero(), "A3 != 0");
      XPoly V = x_pow(A3, 3) + x_pow(coefficient(spec, "A2", space), 2) +
                x_pow(coefficient(spec, "A1", space), 1) + XPoly(coefficient(spec, "A0", space));
      return {V, x_pow(A3 * q(g * (g + 1)), 1)};
    }
    case FamilyKind::dixmier_rank2: {
      // (D^2 + x^3 + alpha)^2 + 2x
      auto alpha = coefficient(spec, "alpha", space);
      return {x_pow(q(1), 3) + XPoly(alpha), x_pow(q(2), 1)};
    }
    case FamilyKind::dixmier_rank3:
      throw Error(ErrorKind::invalid_argument,
                  "dixmier_rank3 is not of the form (D^2 + V)^2 + W");
  }
  throw Error(ErrorKind::invalid_argument, "unknown family");
}

XPoly thm1_monomial_step(int k, int g, const ParamScalar& A6, const ParamScalar& A2,
                         const ParamScalar& constant) {
  const long K = k;
  const long G = g;
  XPoly out(constant);
  if (k >= 1)
    out += XPoly::monomial(q(-K * (4 * K - 1) * (4 * K - 2) * (4 * K - 3)),
                           static_cast<std::size_t>(4 * k - 4));
  out += XPoly::monomial(A2 * q(-16 * K * K), static_cast<std::size_t>(4 * k));
  out += XPoly::monomial(A6 * q(8 * (2 * K + 1) * (G - K) * (G + K + 1), K + 1),
                         static_cast<std::size_t>(4 * k + 4));
  return out;
}

XPoly thm2_monomial_step(int k, int g, const ParamScalar& A4, const ParamScalar& A2,
                         const ParamScalar& A0, const ParamScalar& constant) {
  const long K = k;
  const long G = g;
  XPoly out(constant);
  if (k >= 2)
    out += XPoly::monomial(q(-K * (2 * K - 1) * (K - 1) * (2 * K - 3)),
                           static_cast<std::size_t>(2 * k - 4));
  if (k >= 1)
    out += XPoly::monomial(A0 * q(-2 * K * (2 * K - 1)), static_cast<std::size_t>(2 * k - 2));
  out += XPoly::monomial(A2 * q(-4 * K * K), static_cast<std::size_t>(2 * k));
  out += XPoly::monomial(A4 * q(2 * (2 * K + 1) * (G - K) * (G + K + 1), K + 1),
                         static_cast<std::size_t>(2 * k + 2));
  return out;
}

XPoly thm3_monomial_step(int k, int n, const ParamScalar& A, const ParamScalar& B,
                         const ParamScalar& constant) {
  const long K = k;
  const long N = n;
  if (n + k - 2 == 0) throw Error(ErrorKind::invalid_argument, "n + k - 2 must be nonzero");
  XPoly out(constant);
  if (k >= 4)
    out += XPoly::monomial(q(-K * (K - 1) * (K - 2) * (K - 3), 4),
                           static_cast<std::size_t>(k - 4));
  ParamScalar lead = q(N + 2 * K - 2, 2 * (N + K - 2)) * (B - A * q(K * (N + K - 2)));
  out += XPoly::monomial(lead, static_cast<std::size_t>(n + k - 2));
  return out;
}

std::optional<int> thm3_admissible_B(int n, const ParamScalar& A, const ParamScalar& B) {
  if (A.is_zero()) throw Error(ErrorKind::invalid_argument, "A must be nonzero");
  ParamScalar ratio = B / A;
  if (!ratio.is_numeric()) return std::nullopt;
  Rat t = ratio.numeric_value() / Rat((n - 2L) * (n - 2L));
  if (t.get_den() != 1 || t <= 0) return std::nullopt;
  // m(m+1) = t  <=>  (2m+1)^2 = 4t + 1
  Int disc = 4 * t.get_num() + 1;
  if (!mpz_perfect_square_p(disc.get_mpz_t())) return std::nullopt;
  Int root = sqrt(disc);
  Int m = (root - 1) / 2;
  if (m < 1 || !m.fits_sint_p()) return std::nullopt;
  return static_cast<int>(m.get_si());
}

std::pair<DiffOp, DiffOp> dixmier_pair(int rank, const ParamScalar& alpha) {
  const DiffOp x{XPoly::x()};
  const DiffOp a{XPoly(alpha)};
  const DiffOp D = DiffOp::derivation(1);
  auto c = [](long v) { return DiffOp(XPoly(v)); };
  if (rank == 2) {
    DiffOp P = DiffOp::derivation(2) + diffop_pow(x, 3) + a;
    DiffOp L = P * P + c(2) * x;
    DiffOp M = diffop_pow(P, 3) + c(3) * x * DiffOp::derivation(2) + c(3) * D +
               c(3) * x * (diffop_pow(x, 3) + a);
    return {L, M};
  }
  if (rank == 3) {
    DiffOp P = DiffOp::derivation(3) + x * x + a;
    DiffOp L = P * P + c(2) * D;
    DiffOp M = diffop_pow(P, 3) + c(3) * DiffOp::derivation(4) + c(3) * (x * x + a) * D +
               c(3) * x;
    return {L, M};
  }
  throw Error(ErrorKind::invalid_argument, "Dixmier pairs exist for rank 2 and 3 only");
}

namespace {

// Degree at which the family first admits a commuting operator, if known.
std::optional<int> family_genus(const FamilySpec& spec, const ParamSpace& space) {
  switch (spec.kind) {
    case FamilyKind::thm1:
    case FamilyKind::thm2:
    case FamilyKind::mironov_x3: return spec.g;
    case FamilyKind::dixmier_rank2: return 1;
    case FamilyKind::dixmier_rank3: return std::nullopt;
    case FamilyKind::thm3: {
      if (spec.w_degree.value_or(spec.n - 2) != spec.n - 2) return std::nullopt;
      if (spec.admissible_m) return *spec.admissible_m;
      auto A = coefficient(spec, "A", space);
      auto B = coefficient(spec, "B", space);
      if (A.is_zero()) return std::nullopt;
      return thm3_admissible_B(spec.n, A, B);
    }
  }
  return std::nullopt;
}

}  // namespace

Claim family_claim(const FamilySpec& spec, int m) {
  ParamSpace space = family_default_space(spec);
  switch (spec.kind) {
    case FamilyKind::thm1:
    case FamilyKind::thm2:
    case FamilyKind::mironov_x3: return m >= spec.g ? Claim::feasible : Claim::none;
    case FamilyKind::dixmier_rank2: return Claim::feasible;
    case FamilyKind::dixmier_rank3: return Claim::none;
    case FamilyKind::thm3: {
      if (spec.n <= 3) return Claim::none;
      if (spec.w_degree.value_or(spec.n - 2) != spec.n - 2) return Claim::infeasible;
      std::optional<int> mb;
      if (spec.admissible_m) {
        mb = *spec.admissible_m;
      } else {
        auto A = coefficient(spec, "A", space);
        auto B = coefficient(spec, "B", space);
        if (A.is_zero() || !(B / A).is_numeric()) return Claim::none;
        mb = thm3_admissible_B(spec.n, A, B);
        if (!mb) return Claim::infeasible;
      }
      if (spec.n > 6) return Claim::infeasible;
      if (spec.n == 5) return *mb == 1 ? Claim::feasible : Claim::infeasible;
      return m >= *mb ? Claim::feasible : Claim::none;
    }
  }
  return Claim::none;
}

SolvedChain solve_chain(const XPoly& V, const XPoly& W, int m, const ParamSpace& space) {
  SolvedChain s;
  s.chain = build_qchain(V, W, m, space);
  s.system = extract_constraints(s.chain);
  s.outcome = solve_constants(s.system);
  return s;
}

namespace {

DegreeResult summarize(int degree, const SolvedChain& s) {
  DegreeResult r;
  r.degree = degree;
  r.status = s.outcome.status;
  r.free_constants = s.outcome.free.size();
  for (const auto& c : s.outcome.side_conditions)
    r.side_conditions.push_back(c.to_string(s.chain.space));
  return r;
}

}  // namespace

FamilyVerdict run_family_verdict(const FamilySpec& spec, int m, int g_bound,
                                 const ParamSpace& space) {
  if (m < 1) throw Error(ErrorKind::invalid_argument, "target degree m must be at least 1");
  FamilyOperator op = build_family(spec, space);
  FamilyVerdict v;
  v.claim = family_claim(spec, m);

  if (v.claim == Claim::infeasible) {
    if (g_bound < 1) throw Error(ErrorKind::invalid_argument, "g_bound must be at least 1");
    for (int d = 1; d <= g_bound; ++d) {
      SolvedChain s = solve_chain(op.V, op.W, d, space);
      v.degrees.push_back(summarize(d, s));
      if (s.outcome.status != SolveStatus::infeasible) v.claim_holds = false;
    }
    v.note = "infeasibility checked for every degree 1.." + std::to_string(g_bound) +
             "; the claim itself covers all degrees";
    return v;
  }

  SolvedChain s = solve_chain(op.V, op.W, m, space);
  v.degrees.push_back(summarize(m, s));
  if (s.outcome.status != SolveStatus::infeasible) {
    auto values = resolve_constants(s.outcome);
    ZXPoly Q = assemble_q(s.chain, values);
    v.curve = spectral_curve(Q, op.V, op.W, s.chain.space);
  }
  if (v.claim == Claim::feasible) {
    v.claim_holds = s.outcome.status != SolveStatus::infeasible;
    auto genus = family_genus(spec, space);
    if (genus && m > *genus) {
      v.claim_holds = v.claim_holds && s.outcome.status == SolveStatus::underdetermined;
      v.note = "target degree exceeds the family genus; free constants expected";
    }
  }
  return v;
}

}  // namespace commop
