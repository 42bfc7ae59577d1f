#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commop/chain.hpp"
#include "commop/curve.hpp"
#include "commop/diffop.hpp"

namespace commop {

enum class FamilyKind { thm1, thm2, thm3, mironov_x3, dixmier_rank2, dixmier_rank3 };

std::string to_string(FamilyKind k);
FamilyKind parse_family_kind(const std::string& s);

// Operator families L = (D^2 + V)^2 + W:
//   thm1        V = A6 x^6 + A2 x^2,             W = 16 g(g+1) A6 x^4
//   thm2        V = A4 x^4 + A2 x^2 + A0,        W = 4 g(g+1) A4 x^2
//   thm3        V = A x^n,                       W = B x^k  (k = n-2 unless set)
//   mironov_x3  V = A3 x^3 + A2 x^2 + A1 x + A0, W = g(g+1) A3 x
// plus the two Dixmier pairs, which are given directly as (L, M).
struct FamilySpec {
  FamilyKind kind = FamilyKind::thm1;
  int g = 1;
  int n = 5;
  // thm3: when set, B = (n-2)^2 m (m+1) A and the "B" coefficient is ignored.
  std::optional<int> admissible_m;
  // thm3: exponent of the W monomial; defaults to n-2.
  std::optional<int> w_degree;
  // Coefficient symbol -> expression text. Missing symbols stand for
  // themselves, so the family is fully symbolic by default.
  std::map<std::string, std::string> coefficients;
};

// The coefficient symbols a family uses, in declaration order.
std::vector<std::string> family_symbols(FamilyKind k);
// Declares exactly the symbols referenced by the family's coefficients.
ParamSpace family_default_space(const FamilySpec& spec);

struct FamilyOperator {
  XPoly V;
  XPoly W;
};

// Throws Error(invalid_argument) naming the violated constraint (A6 != 0,
// A4 != 0, n > 3 and A != 0, A3 != 0, g >= 1).
FamilyOperator build_family(const FamilySpec& spec, const ParamSpace& space);

// Closed-form images of monomials under recursion_step, independent of it.
XPoly thm1_monomial_step(int k, int g, const ParamScalar& A6, const ParamScalar& A2,
                         const ParamScalar& constant);
XPoly thm2_monomial_step(int k, int g, const ParamScalar& A4, const ParamScalar& A2,
                         const ParamScalar& A0, const ParamScalar& constant);
XPoly thm3_monomial_step(int k, int n, const ParamScalar& A, const ParamScalar& B,
                         const ParamScalar& constant);

// The positive m with B = (n-2)^2 m(m+1) A, if any.
std::optional<int> thm3_admissible_B(int n, const ParamScalar& A, const ParamScalar& B);

// Rank 2: L = (D^2 + x^3 + alpha)^2 + 2x,
//         M = (D^2 + x^3 + alpha)^3 + 3x D^2 + 3D + 3x(x^3 + alpha).
// Rank 3: L = (D^3 + x^2 + alpha)^2 + 2D,
//         M = (D^3 + x^2 + alpha)^3 + 3D^4 + 3(x^2 + alpha) D + 3x.
std::pair<DiffOp, DiffOp> dixmier_pair(int rank, const ParamScalar& alpha);

enum class Claim { feasible, infeasible, none };
std::string to_string(Claim c);

// The known claim for the family at target degree m.
Claim family_claim(const FamilySpec& spec, int m);

struct DegreeResult {
  int degree = 0;
  SolveStatus status = SolveStatus::unique;
  std::size_t free_constants = 0;
  std::vector<std::string> side_conditions;
};

struct FamilyVerdict {
  Claim claim = Claim::none;
  bool claim_holds = true;
  std::vector<DegreeResult> degrees;
  std::optional<SpectralCurve> curve;  // for a feasible target degree
  std::string note;
};

// Feasibility claims are checked at degree m (and, when m exceeds the
// family's genus, also require free constants). Infeasibility claims are
// checked at every degree 1..g_bound.
FamilyVerdict run_family_verdict(const FamilySpec& spec, int m, int g_bound,
                                 const ParamSpace& space);

// Chain, solve and curve for one family at degree m; the workhorse behind
// run_family_verdict and the CLI.
struct SolvedChain {
  QChain chain;
  ConstraintSystem system;
  SolveOutcome outcome;
};
SolvedChain solve_chain(const XPoly& V, const XPoly& W, int m, const ParamSpace& space);

}  // namespace commop
