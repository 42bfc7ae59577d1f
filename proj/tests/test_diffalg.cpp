#include <doctest.h>

#include <random>

#include "commop/diffop.hpp"
#include "commop/error.hpp"
#include "commop/families.hpp"
#include "support.hpp"

using namespace commop;
using testsupport::apply;
using testsupport::Op;
using testsupport::S;
using testsupport::X;

TEST_SUITE("xpoly") {
  TEST_CASE("derivative examples") {
    ParamSpace s({"A6"});
    CHECK(xpoly_derivative(X("x^4", s), 1) == X("4*x^3", s));
    CHECK(xpoly_derivative(X("x^4", s), 5).is_zero());
    CHECK(xpoly_derivative(X("x^4", s), 5).degree() == kMinusInfinity);
    const long g = 1;
    XPoly W = X("16*A6*x^4", s) * ParamScalar(g * (g + 1));
    CHECK(xpoly_derivative(W, 4) == X("768*A6", s));
    CHECK(xpoly_derivative(W, 0) == W);
  }

  TEST_CASE("integrate examples") {
    ParamSpace s({"A6", "A2", "C1", "C2"});
    CHECK(xpoly_integrate(X("4*x^3", s), "C2", s) == X("x^4 + C2", s));
    CHECK(xpoly_integrate(XPoly(), "C1", s) == X("C1", s));
    // The x^4 coefficient of a_2 for thm1 at g = 1.
    const long g = 1;
    XPoly integrand = X("(32*C1*A6 - 512*A2*A6)*x^3", s) * ParamScalar(g * (g + 1));
    CHECK(xpoly_integrate(integrand, "C2", s) == X("8*A6*(C1 - 16*A2)*2*x^4 + C2", s));
    CHECK_THROWS_AS(xpoly_integrate(X("x", s), "C9", s), Error);
  }

  TEST_CASE("integral then derivative is the identity (randomized)") {
    ParamSpace s({"A", "B", "C"});
    std::mt19937 rng(3);
    for (int i = 0; i < 40; ++i) {
      XPoly p = testsupport::random_xpoly(rng, 2, 6);
      CHECK(xpoly_derivative(xpoly_integrate(p, "C", s), 1) == p);
      CHECK(xpoly_integrate(p, "C", s).coefficient(0) == S("C", s));
    }
  }

  TEST_CASE("rendering and parsing") {
    ParamSpace s({"A6", "A2"});
    CHECK(X("32*A6*x^4", s).to_string(s) == "32*A6*x^4");
    CHECK(X("(A2 + 1)*x^2", s).to_string(s) == "(A2 + 1)*x^2");
    CHECK(X("x*x - x^2", s).is_zero());
    CHECK(XPoly().to_string(s) == "0");
    CHECK_THROWS_AS(X("D*x", s), Error);
    CHECK_THROWS_AS(X("x/x", s), Error);
    CHECK_THROWS_AS(X("A7*x", s), Error);
    std::mt19937 rng(8);
    for (int i = 0; i < 30; ++i) {
      XPoly p = testsupport::random_xpoly(rng, 2, 5);
      CHECK(X(p.to_string(s), s) == p);
    }
  }
}

TEST_SUITE("diffop") {
  TEST_CASE("composition examples") {
    ParamSpace s({"alpha"});
    CHECK(diffop_compose(Op("D", s), Op("x", s)) == Op("x*D + 1", s));
    CHECK(diffop_compose(Op("D^2", s), Op("x^3", s)) == DiffOp(std::vector<XPoly>{
                                                           X("6*x", s), X("6*x^2", s), X("x^3", s)}));
    DiffOp P = Op("D^2 + x^3 + alpha", s);
    DiffOp L = diffop_compose(P, P) + Op("2*x", s);
    CHECK(L.order() == 4);
    CHECK(L.coefficient(4) == XPoly(1));
    CHECK(L == Op("(D^2 + x^3 + alpha)^2 + 2*x", s));
  }

  TEST_CASE("commutator examples") {
    ParamSpace s({"alpha"});
    CHECK(diffop_commutator(Op("D^2", s), Op("x^3", s)) == Op("6*x^2*D + 6*x", s));
    std::mt19937 rng(4);
    for (int i = 0; i < 10; ++i) {
      DiffOp L = testsupport::random_op(rng, 1);
      CHECK(diffop_commutator(L, L).is_zero());
    }
  }

  TEST_CASE("powers") {
    ParamSpace s({"alpha"});
    CHECK(diffop_pow(Op("D", s), 2) == Op("D^2", s));
    CHECK(diffop_pow(Op("x*D", s), 0) == DiffOp::identity());
    CHECK(diffop_pow(Op("x*D", s), 2) == Op("x^2*D^2 + x*D", s));
  }

  TEST_CASE("Dixmier rank 2 relation") {
    ParamSpace s({"alpha"});
    auto [L, M] = dixmier_pair(2, S("alpha", s));
    CHECK(diffop_commutator(L, M).is_zero());
    CHECK(diffop_pow(M, 2) - diffop_pow(L, 3) == DiffOp(X("-alpha", s)));
  }

  TEST_CASE("square form") {
    ParamSpace s({"alpha", "A4", "A2", "A0"});
    CHECK(build_square_form(XPoly(), XPoly()) == Op("D^4", s));
    DiffOp expected = Op("D^4 + 2*(x^3 + alpha)*D^2 + 6*x^2*D + (6*x + (x^3 + alpha)^2 + 2*x)", s);
    DiffOp built = build_square_form(X("x^3 + alpha", s), X("2*x", s));
    CHECK(built == expected);
    CHECK(built == diffop_compose(Op("D^2 + x^3 + alpha", s), Op("D^2 + x^3 + alpha", s)) +
                       Op("2*x", s));
    const long g = 2;
    XPoly V = X("A4*x^4 + A2*x^2 + A0", s);
    XPoly W = X("A4*x^2", s) * ParamScalar(4 * g * (g + 1));
    CHECK(build_square_form(V, W) == Op("(D^2 + A4*x^4 + A2*x^2 + A0)^2 + 24*A4*x^2", s));
  }

  TEST_CASE("order of compose is additive and coefficients are rendered") {
    ParamSpace s({"A6", "A2"});
    DiffOp a = Op("(D^2 + A6*x^6 + A2*x^2)^2", s);
    CHECK(a.order() == 4);
    CHECK(a.to_string(s).rfind("D^4 + (2*A6*x^6 + 2*A2*x^2)*D^2", 0) == 0);
    CHECK(DiffOp().order() == kMinusInfinity);
    CHECK(DiffOp().to_string(s) == "0");
  }

  TEST_CASE("parser rejects non-scalar division and bad input") {
    ParamSpace s({"A"});
    CHECK_THROWS_AS(Op("1/D", s), Error);
    CHECK_THROWS_AS(Op("1/x", s), Error);
    CHECK_THROWS_AS(Op("D^", s), Error);
    CHECK_THROWS_AS(Op("D + B", s), Error);
    CHECK(Op("D/2", s) == Op("(1/2)*D", s));
    CHECK(Op("D/A", s) == DiffOp(std::vector<XPoly>{XPoly(), X("1/A", s)}));
  }

  TEST_CASE("composition agrees with applying operators to functions (randomized)") {
    std::mt19937 rng(19);
    for (int i = 0; i < 25; ++i) {
      DiffOp a = testsupport::random_op(rng, 1);
      DiffOp b = testsupport::random_op(rng, 1);
      XPoly f = testsupport::random_xpoly(rng, 1, 8);
      CHECK(apply(diffop_compose(a, b), f) == apply(a, apply(b, f)));
      if (!a.is_zero() && !b.is_zero())
        CHECK(diffop_compose(a, b).order() == a.order() + b.order());
    }
  }

  TEST_CASE("associativity, bilinearity and Jacobi (randomized)") {
    std::mt19937 rng(23);
    for (int i = 0; i < 15; ++i) {
      DiffOp a = testsupport::random_op(rng, 1);
      DiffOp b = testsupport::random_op(rng, 1);
      DiffOp c = testsupport::random_op(rng, 1);
      CHECK(diffop_compose(diffop_compose(a, b), c) == diffop_compose(a, diffop_compose(b, c)));
      CHECK(diffop_compose(a, b + c) == diffop_compose(a, b) + diffop_compose(a, c));
      DiffOp jacobi = diffop_commutator(a, diffop_commutator(b, c)) +
                      diffop_commutator(b, diffop_commutator(c, a)) +
                      diffop_commutator(c, diffop_commutator(a, b));
      CHECK(jacobi.is_zero());
      DiffOp ab = diffop_commutator(a, b);
      CHECK(ab == -diffop_commutator(b, a));
      if (!ab.is_zero() && !a.is_zero() && !b.is_zero())
        CHECK(ab.order() < a.order() + b.order());
    }
  }

  TEST_CASE("substitute") {
    ParamSpace s({"alpha"});
    DiffOp a = Op("alpha*D + x", s);
    CHECK(a.substitute({{0, ParamScalar(2)}}) == Op("2*D + x", s));
  }
}
