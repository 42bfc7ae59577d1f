#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "commop/param_space.hpp"
#include "commop/zpoly.hpp"

namespace commop {

// w^2 = F(z), F monic of odd degree 2m+1.
struct SpectralCurve {
  ParamSpace space;
  ZScalarPoly F;

  int genus_bound() const { return (F.degree() - 1) / 2; }
  // Descending z-power coefficient texts; the serialized form of the curve.
  std::vector<std::string> coefficient_strings() const;
  std::string to_string() const;
};

// F = (z - W)Q^2 - V(Q')^2 + (Q'')^2/4 - Q'Q'''/2 + Q(2V'Q' + 4VQ'' + Q'''')/2.
// Throws Error(x_dependence) listing the offending terms if any positive power
// of x survives.
SpectralCurve spectral_curve(const ZXPoly& Q, const XPoly& V, const XPoly& W,
                             const ParamSpace& space);

struct SingularityVerdict {
  bool singular = false;
  // Monic gcd(F, F'); the constant 1 when nonsingular.
  std::vector<Rat> witness;  // ascending in z
  std::string witness_text;
};

// Affine singularity test: F has a repeated root after binding every
// parameter that occurs in it. Unbound parameters raise
// Error(unbound_parameter).
SingularityVerdict curve_is_singular(const SpectralCurve& curve,
                                     const std::map<std::size_t, Rat>& bindings);

struct SquarefreeFactor {
  ZScalarPoly factor;  // monic in z
  unsigned multiplicity = 1;
};

// Squarefree decomposition F = prod factor^multiplicity over Q(params).
std::vector<SquarefreeFactor> curve_structure(const SpectralCurve& curve);

}  // namespace commop
