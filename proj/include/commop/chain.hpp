#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "commop/param_space.hpp"
#include "commop/xpoly.hpp"
#include "commop/zpoly.hpp"

namespace commop {

// The sequence a_1..a_{m+1} for L = (D^2 + V)^2 + W, with a_1 = W/2 + C_1 and
// each later entry obtained by recursion_step with a fresh constant C_{i+1}.
struct QChain {
  ParamSpace space;  // caller's parameters followed by C1..C{m+1}
  XPoly V;
  XPoly W;
  int m = 0;
  std::vector<XPoly> a;                // a[i] holds a_{i+1}
  std::vector<std::size_t> constants;  // parameter indices of C1..C{m+1}
};

// One affine equation  sum_j coefficients[j] * C_{j+1} + offset = 0, taken
// from the coefficient of x^x_power in a_{m+1}.
struct ConstraintEquation {
  std::size_t x_power = 0;
  std::vector<ParamScalar> coefficients;
  ParamScalar offset;
};

struct ConstraintSystem {
  std::vector<std::size_t> unknowns;  // parameter indices of C1..Cm
  std::vector<ConstraintEquation> equations;  // descending x_power
};

enum class SolveStatus { unique, underdetermined, infeasible };

std::string to_string(SolveStatus s);

struct SolveOutcome {
  SolveStatus status = SolveStatus::unique;
  // Pinned constants; values may mention free constants and parameters.
  std::map<std::size_t, ParamScalar> assignment;
  std::vector<std::size_t> free;
  // Parameter expressions divided by during elimination, assumed nonzero.
  std::vector<ParamScalar> side_conditions;
  // For infeasible systems: the reduced equation 0 = offset with offset != 0.
  std::optional<ConstraintEquation> contradiction;
};

// (1/4) * integral(-a^(5) - 4V a''' - 6V' a'' - 2a' V'' + 2a W' + 4a' W) dx,
// with integration constant `next_constant`.
XPoly recursion_step(const XPoly& a, const XPoly& V, const XPoly& W,
                     const ParamScalar& next_constant);

// Chain constants are named C1..C{m+1}; they must not clash with `space`.
QChain build_qchain(const XPoly& V, const XPoly& W, int m, const ParamSpace& space);

ConstraintSystem extract_constraints(const QChain& chain);

// Gauss-Jordan elimination over Q(params). Equations are taken in stored
// order; each pivots on its highest-index surviving constant.
SolveOutcome solve_constants(const ConstraintSystem& sys);

// How free constants are instantiated when a concrete Q is requested.
struct FreeConstantPolicy {
  bool keep_symbolic = false;
  std::map<std::size_t, ParamScalar> overrides;  // by parameter index
};

// Values for C1..Cm: pinned ones from the outcome, free ones from the policy
// (default zero). Infeasible outcomes are rejected.
std::map<std::size_t, ParamScalar> resolve_constants(const SolveOutcome& outcome,
                                                     const FreeConstantPolicy& policy = {});

// Q = z^m + a_1 z^(m-1) + ... + a_m with the constants substituted.
ZXPoly assemble_q(const QChain& chain, const std::map<std::size_t, ParamScalar>& constant_values);

// Q^(5) + 4V Q''' + 6V' Q'' + 2Q'(2z - 2W + V'') - 2Q W'; zero iff Q certifies
// a rank-2 commuting operator.
ZXPoly residual_eq2(const ZXPoly& Q, const XPoly& V, const XPoly& W);

// Splits a scalar into an affine form over the given constants. Throws
// Error(nonlinear) for products of constants.
ConstraintEquation affine_decompose(const ParamScalar& value,
                                    const std::vector<std::size_t>& constants);

}  // namespace commop
