#include <doctest.h>

#include <random>

#include "commop/chain.hpp"
#include "commop/curve.hpp"
#include "commop/error.hpp"
#include "commop/families.hpp"
#include "support.hpp"

using namespace commop;
using testsupport::S;
using testsupport::X;

namespace {

// z-polynomial from descending coefficient texts.
ZScalarPoly Z(const std::vector<std::string>& descending, const ParamSpace& space) {
  std::vector<ParamScalar> c;
  for (auto it = descending.rbegin(); it != descending.rend(); ++it) c.push_back(S(*it, space));
  return ZScalarPoly(c);
}

// F(z + r) by Horner's rule.
ZScalarPoly shifted(const ZScalarPoly& F, const ParamScalar& r) {
  const ZScalarPoly lin(std::vector<ParamScalar>{r, ParamScalar(1)});
  ZScalarPoly out;
  const auto& c = F.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) out = out * lin + ZScalarPoly(std::vector<ParamScalar>{c[k]});
  return out;
}

SpectralCurve family_curve(FamilySpec spec, int m, ParamSpace& space_out) {
  space_out = family_default_space(spec);
  FamilyOperator op = build_family(spec, space_out);
  SolvedChain sc = solve_chain(op.V, op.W, m, space_out);
  REQUIRE(sc.outcome.status != SolveStatus::infeasible);
  return spectral_curve(assemble_q(sc.chain, resolve_constants(sc.outcome)), op.V, op.W,
                        sc.chain.space);
}

ZScalarPoly product(const std::vector<SquarefreeFactor>& parts) {
  ZScalarPoly out(std::vector<ParamScalar>{ParamScalar(1)});
  for (const auto& p : parts)
    for (unsigned k = 0; k < p.multiplicity; ++k) out = out * p.factor;
  return out;
}

}  // namespace

TEST_SUITE("curve") {
  TEST_CASE("Q = 1 and constant W give F = z - c") {
    ParamSpace s({"A", "c"});
    ZXPoly Q(std::vector<XPoly>{XPoly(1)});
    SpectralCurve curve = spectral_curve(Q, X("A*x^3 + x", s), X("c", s), s);
    CHECK(curve.F == Z({"1", "-c"}, s));
    CHECK(curve.genus_bound() == 0);
  }

  TEST_CASE("thm1, g = m = 1") {
    FamilySpec spec;
    ParamSpace s;
    SpectralCurve curve = family_curve(spec, 1, s);
    ZScalarPoly expected = Z({"1", "16*A2"}, s) * Z({"1", "16*A2", "192*A6"}, s);
    CHECK(curve.F == expected);
    CHECK(curve.coefficient_strings() ==
          std::vector<std::string>{"1", "32*A2", "256*A2^2 + 192*A6", "3072*A6*A2"});
    CHECK(curve.genus_bound() == 1);
  }

  TEST_CASE("thm2, g = m = 1") {
    FamilySpec spec;
    spec.kind = FamilyKind::thm2;
    ParamSpace s;
    SpectralCurve curve = family_curve(spec, 1, s);
    CHECK(curve.F == Z({"1", "8*A2", "16*(A2^2 + A0*A4)", "64*A0*A2*A4 + 16*A4^2"}, s));
  }

  TEST_CASE("x-dependence is reported") {
    ParamSpace s({"A"});
    ZXPoly Q(std::vector<XPoly>{X("x", s), XPoly(1)});
    try {
      spectral_curve(Q, XPoly(), XPoly(), s);
      FAIL("expected x dependence");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::x_dependence);
      CHECK(std::string(e.what()).find("x") != std::string::npos);
    }
  }

  TEST_CASE("singularity examples") {
    ParamSpace s({"A"});
    SpectralCurve cube{s, Z({"1", "0", "0", "0"}, s)};
    SingularityVerdict v = curve_is_singular(cube, {});
    CHECK(v.singular);
    CHECK(v.witness_text == "z^2");

    FamilySpec t1;
    t1.g = 3;
    t1.coefficients["A2"] = "0";
    ParamSpace s1;
    SpectralCurve c3 = family_curve(t1, 3, s1);
    CHECK(c3.F == Z({"1", "0", "288000*A6"}, s1) * Z({"1", "0"}, s1) *
                      Z({"1", "0", "289152*A6", "0", "273715200*A6^2"}, s1));
    SingularityVerdict v3 = curve_is_singular(c3, {{s1.index("A6"), Rat(1)}});
    CHECK_FALSE(v3.singular);
    CHECK(v3.witness_text == "1");

    FamilySpec t5;
    t5.kind = FamilyKind::thm3;
    t5.n = 5;
    t5.coefficients["B"] = "18*A";
    ParamSpace s5;
    SpectralCurve c5 = family_curve(t5, 1, s5);
    CHECK(curve_is_singular(c5, {{s5.index("A"), Rat(1)}}).singular);
  }

  TEST_CASE("unbound parameters are an error") {
    ParamSpace s({"A", "B"});
    SpectralCurve c{s, Z({"1", "A", "B"}, s)};
    try {
      curve_is_singular(c, {{0, Rat(1)}});
      FAIL("expected an error");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::unbound_parameter);
      CHECK(std::string(e.what()).find("B") != std::string::npos);
    }
  }

  TEST_CASE("squarefree structure examples") {
    ParamSpace s({"A"});
    SpectralCurve numeric{s, Z({"1", "-1"}, s) * Z({"1", "-1"}, s) * Z({"1", "2"}, s)};
    auto parts = curve_structure(numeric);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].factor == Z({"1", "2"}, s));
    CHECK(parts[0].multiplicity == 1);
    CHECK(parts[1].factor == Z({"1", "-1"}, s));
    CHECK(parts[1].multiplicity == 2);

    SpectralCurve sqfree{s, Z({"1", "0", "A"}, s)};
    auto one = curve_structure(sqfree);
    REQUIRE(one.size() == 1);
    CHECK(one[0].multiplicity == 1);
    CHECK(one[0].factor == sqfree.F);

    SpectralCurve sym{s, Z({"1", "A"}, s) * Z({"1", "A"}, s) * Z({"1", "0", "1/A"}, s)};
    auto sp = curve_structure(sym);
    REQUIRE(sp.size() == 2);
    CHECK(sp[1].factor == Z({"1", "A"}, s));
    CHECK(product(sp) == sym.F);
  }

  TEST_CASE("thm1, g = 1, m = 3 carries a squared factor") {
    FamilySpec spec;
    ParamSpace s = family_default_space(spec);
    FamilyOperator op = build_family(spec, s);
    SolvedChain sc = solve_chain(op.V, op.W, 3, s);
    FreeConstantPolicy keep;
    keep.keep_symbolic = true;
    SpectralCurve curve = spectral_curve(assemble_q(sc.chain, resolve_constants(sc.outcome, keep)),
                                         op.V, op.W, sc.chain.space);
    CHECK(curve.F.degree() == 7);
    auto parts = curve_structure(curve);
    bool squared = false;
    for (const auto& p : parts)
      if (p.multiplicity >= 2 && p.factor.degree() >= 1) squared = true;
    CHECK(squared);
    CHECK(product(parts) == curve.F);
    // The cubic from g = m = 1 survives as the squarefree part.
    const ParamSpace& cs = sc.chain.space;
    CHECK(parts[0].factor == Z({"1", "16*A2"}, cs) * Z({"1", "16*A2", "192*A6"}, cs));
  }
}

TEST_SUITE("curve properties") {
  TEST_CASE("solved chains give monic odd-degree curves") {
    for (auto kind : {FamilyKind::thm1, FamilyKind::thm2}) {
      for (int g = 1; g <= 3; ++g) {
        for (int m = g; m <= g + 1; ++m) {
          FamilySpec spec;
          spec.kind = kind;
          spec.g = g;
          ParamSpace s;
          SpectralCurve c = family_curve(spec, m, s);
          CHECK(c.F.degree() == 2 * m + 1);
          CHECK(c.F.coefficients().back() == ParamScalar(1));
        }
      }
    }
  }

  TEST_CASE("singularity is invariant under shifts of z (randomized)") {
    std::mt19937 rng(61);
    ParamSpace s({"A"});
    for (int i = 0; i < 30; ++i) {
      std::vector<ParamScalar> roots;
      for (int k = 0; k < 3; ++k) roots.push_back(ParamScalar(testsupport::random_rat(rng, 3, 2)));
      ZScalarPoly F(std::vector<ParamScalar>{ParamScalar(1)});
      for (const auto& r : roots) F = F * ZScalarPoly(std::vector<ParamScalar>{-r, ParamScalar(1)});
      F = F * Z({"1", "0", "1"}, s);
      SpectralCurve c{s, F};
      const bool base = curve_is_singular(c, {}).singular;
      const bool repeated = roots[0] == roots[1] || roots[1] == roots[2] || roots[0] == roots[2];
      CHECK(base == repeated);
      for (int t = 0; t < 3; ++t) {
        SpectralCurve moved{s, shifted(F, ParamScalar(testsupport::random_rat(rng)))};
        CHECK(curve_is_singular(moved, {}).singular == base);
      }
    }
  }

  TEST_CASE("squarefree decomposition multiplies back (randomized)") {
    std::mt19937 rng(67);
    ParamSpace s({"A"});
    for (int i = 0; i < 20; ++i) {
      ZScalarPoly F(std::vector<ParamScalar>{ParamScalar(1)});
      std::uniform_int_distribution<int> mult(1, 3);
      for (int k = 0; k < 3; ++k) {
        ZScalarPoly f(std::vector<ParamScalar>{
            S("A", s) * ParamScalar(testsupport::random_rat(rng)) + ParamScalar(k), ParamScalar(1)});
        for (int e = mult(rng); e > 0; --e) F = F * f;
      }
      SpectralCurve c{s, F};
      auto parts = curve_structure(c);
      CHECK(product(parts) == F);
      for (const auto& p : parts) CHECK(p.factor.coefficients().back() == ParamScalar(1));
    }
  }
}
