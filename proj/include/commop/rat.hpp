#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace commop {

// Arbitrary-precision rational. mpq_class keeps values canonical after every
// arithmetic operation: reduced, positive denominator, zero as 0/1.
using Rat = mpq_class;
using Int = mpz_class;

inline std::string to_string(const Rat& r) { return r.get_str(); }

// Accepts "p" or "p/q" with an optional leading sign.
Rat parse_rat(std::string_view text);

// Canonical num/den; mpq_class's two-argument constructor does not reduce.
inline Rat make_rat(long num, long den) {
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline Rat binomial(unsigned n, unsigned k) {
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rat(out);
}

}  // namespace commop
