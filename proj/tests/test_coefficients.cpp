#include <doctest.h>

#include <functional>
#include <random>

#include "commop/error.hpp"
#include "commop/expr.hpp"
#include "commop/param_scalar.hpp"
#include "support.hpp"

using namespace commop;
using testsupport::S;

namespace {

const ParamSpace thm1_space({"A6", "A2"});

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::invalid_argument;
}

}  // namespace

TEST_SUITE("rat") {
  TEST_CASE("parse gives canonical values") {
    CHECK(parse_rat("6/4") == make_rat(3, 2));
    CHECK(parse_rat("-6/4").get_num() == -3);
    CHECK(parse_rat("-6/4").get_den() == 2);
    CHECK(parse_rat("+7") == 7);
    CHECK(parse_rat("0/5").get_den() == 1);
    CHECK(to_string(parse_rat("10/2")) == "5");
    CHECK(to_string(parse_rat("-3/9")) == "-1/3");
  }

  TEST_CASE("malformed rationals") {
    for (const char* bad : {"", "/", "1/", "/2", "1.5", "a", "6/-4", "1//2", "--1"})
      CHECK_MESSAGE(kind_of([&] { parse_rat(bad); }) == ErrorKind::parse, bad);
    CHECK(kind_of([] { parse_rat("1/0"); }) == ErrorKind::division_by_zero);
  }

  TEST_CASE("make_rat and binomial") {
    CHECK(make_rat(4, -6) == make_rat(-2, 3));
    CHECK(make_rat(4, -6).get_den() == 3);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(3, 4) == 0);
  }
}

TEST_SUITE("param_space") {
  TEST_CASE("declarations") {
    ParamSpace s = ParamSpace::parse("A6, A2 alpha");
    CHECK(s.size() == 3);
    CHECK(s.index("alpha") == 2);
    CHECK_FALSE(s.find("B"));
    CHECK(kind_of([&] { s.index("B"); }) == ErrorKind::unbound_parameter);
  }

  TEST_CASE("reserved, duplicate and malformed names are rejected") {
    CHECK_THROWS_AS(ParamSpace({"x"}), Error);
    CHECK_THROWS_AS(ParamSpace({"D"}), Error);
    CHECK_THROWS_AS(ParamSpace({"z"}), Error);
    CHECK_THROWS_AS(ParamSpace({"A", "A"}), Error);
    CHECK_THROWS_AS(ParamSpace({"1A"}), Error);
    CHECK_THROWS_AS(ParamSpace::parse("A, +"), Error);
  }

  TEST_CASE("extension keeps indices") {
    ParamSpace s({"A"});
    ParamSpace t = s.extended({"C1", "C2"});
    CHECK(t.index("A") == 0);
    CHECK(t.index("C2") == 2);
    CHECK_THROWS_AS(s.extended({"A"}), Error);
  }
}

TEST_SUITE("param_poly") {
  TEST_CASE("graded lex rendering") {
    ParamSpace s({"A6", "A2"});
    ParamPoly A6 = ParamPoly::variable(0), A2 = ParamPoly::variable(1);
    ParamPoly p = A2 * A2 * Rat(16) + A6 * Rat(192);
    CHECK(p.to_string(s) == "16*A2^2 + 192*A6");
    CHECK((A6 * A2 - A6 * A6).to_string(s) == "-A6^2 + A6*A2");
    CHECK(ParamPoly().to_string(s) == "0");
    CHECK((A6 - Rat(1)).to_string(s) == "A6 - 1");
  }

  TEST_CASE("no zero terms are stored") {
    ParamPoly a = ParamPoly::variable(0);
    ParamPoly z = a - a;
    CHECK(z.is_zero());
    CHECK(z.term_count() == 0);
    CHECK((a * Rat(0)).is_zero());
  }

  TEST_CASE("derivative, substitute and coefficients") {
    ParamPoly a = ParamPoly::variable(0), b = ParamPoly::variable(1);
    ParamPoly p = a.pow(3) * b + a * Rat(2);
    CHECK(p.derivative(0) == a.pow(2) * b * Rat(3) + ParamPoly(2));
    CHECK(p.substitute(0, Rat(2)) == b * Rat(8) + ParamPoly(4));
    auto cs = p.coefficients_in(0);
    REQUIRE(cs.size() == 4);
    CHECK(cs[1] == ParamPoly(2));
    CHECK(cs[3] == b);
    CHECK(ParamPoly::from_coefficients(0, cs) == p);
  }

  TEST_CASE("exact division") {
    ParamPoly a = ParamPoly::variable(0), b = ParamPoly::variable(1);
    auto q = (a * a - b * b).divide_exact(a - b);
    REQUIRE(q);
    CHECK(*q == a + b);
    CHECK_FALSE((a * a + Rat(1)).divide_exact(a - b));
    CHECK_THROWS_AS(a.divide_exact(ParamPoly()), Error);
  }

  TEST_CASE("gcd examples") {
    ParamPoly A6 = ParamPoly::variable(0), A2 = ParamPoly::variable(1);
    CHECK(mpoly_gcd(A6 * A6, A6 * A2) == A6);
    CHECK(mpoly_gcd(ParamPoly(6), ParamPoly(4)) == ParamPoly(1));
    CHECK(mpoly_gcd(A2 * A2 - Rat(256), A2 - Rat(16)) == A2 - Rat(16));
    CHECK(mpoly_gcd(A2 * Rat(-3) + Rat(48), A2 * A2 - Rat(256)) == A2 - Rat(16));
  }

  TEST_CASE("gcd divides both arguments (randomized)") {
    std::mt19937 rng(11);
    for (int i = 0; i < 60; ++i) {
      ParamPoly common = testsupport::random_poly(rng, 3, 1, 2);
      ParamPoly a = testsupport::random_poly(rng, 3) * common;
      ParamPoly b = testsupport::random_poly(rng, 3) * common;
      if (a.is_zero() || b.is_zero()) continue;
      ParamPoly g = mpoly_gcd(a, b);
      REQUIRE_FALSE(g.is_zero());
      CHECK(a.divide_exact(g));
      CHECK(b.divide_exact(g));
      if (!common.is_zero()) CHECK(g.divide_exact(common.primitive()));
    }
  }
}

TEST_SUITE("param_scalar") {
  TEST_CASE("scalar_arith examples") {
    ParamSpace s = thm1_space;
    auto sum = scalar_arith(S("1/2", s), S("1/3", s), ArithOp::add);
    REQUIRE(sum);
    CHECK(*sum == S("5/6", s));
    auto q = scalar_arith(S("A6^2 - A2^2", s), S("A6 - A2", s), ArithOp::div);
    REQUIRE(q);
    CHECK(*q == S("A6 + A2", s));
    CHECK(q->is_polynomial());
    const long g = 1;
    CHECK(S("8*A6", s) * ParamScalar(g * (g + 1)) == S("16*A6", s));
  }

  TEST_CASE("division by zero is an error value") {
    ParamSpace s = thm1_space;
    CHECK_FALSE(scalar_arith(S("A6", s), S("A2 - A2", s), ArithOp::div));
    CHECK_THROWS_AS(S("A6", s) / ParamScalar(0), Error);
    CHECK(kind_of([&] { S("1/(A2 - A2)", s); }) == ErrorKind::division_by_zero);
  }

  TEST_CASE("canonical form") {
    ParamSpace s = thm1_space;
    ParamScalar a = S("(2*A6 + 2)/(4*A6*A2 + 4*A2)", s);
    CHECK(a == S("1/(2*A2)", s));
    CHECK(a.den().leading_coefficient() == 1);
    ParamScalar b = S("3/(-6*A2)", s);
    CHECK(b.den().leading_coefficient() == 1);
    CHECK(b.to_string(s) == "(-1/2)/(A2)");
    CHECK(S("6/4", s).den() == ParamPoly(1));
    CHECK(S("6/4", s).numeric_value() == make_rat(3, 2));
    CHECK_THROWS_AS(S("A6", s).numeric_value(), Error);
  }

  TEST_CASE("substitute examples") {
    ParamSpace s = thm1_space;
    const std::size_t A6 = 0;
    CHECK(S("192*A6", s).substitute(std::map<std::size_t, Rat>{{A6, Rat(1)}}) == S("192", s));
    CHECK(S("288000*A6", s).substitute(std::map<std::size_t, Rat>{{A6, Rat(2)}}) ==
          S("576000", s));
    CHECK(kind_of([&] {
            S("A2/A6", s).substitute(std::map<std::size_t, Rat>{{A6, Rat(0)}});
          }) == ErrorKind::division_by_zero);
    ParamScalar partial = S("A2/A6 + A6", s).substitute(std::map<std::size_t, Rat>{{A6, Rat(2)}});
    CHECK(partial == S("A2/2 + 2", s));
    CHECK(S("A6*A2", s).substitute(std::map<std::size_t, ParamScalar>{{A6, S("A2 + 1", s)}}) ==
          S("A2^2 + A2", s));
  }

  TEST_CASE("field axioms (randomized)") {
    std::mt19937 rng(2024);
    for (int i = 0; i < 40; ++i) {
      ParamScalar a = testsupport::random_scalar(rng, 2);
      ParamScalar b = testsupport::random_scalar(rng, 2);
      ParamScalar c = testsupport::random_scalar(rng, 2);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(a - a == ParamScalar(0));
      if (!a.is_zero()) CHECK(a * a.inverse() == ParamScalar(1));
    }
  }

  TEST_CASE("normalization is idempotent") {
    std::mt19937 rng(5);
    for (int i = 0; i < 30; ++i) {
      ParamScalar a = testsupport::random_scalar(rng, 3);
      ParamScalar again = ParamScalar::fraction(a.num(), a.den());
      CHECK(again == a);
      CHECK(again.num() == a.num());
      CHECK(again.den() == a.den());
    }
  }

  TEST_CASE("render then parse round-trips (randomized)") {
    ParamSpace s({"A", "B", "C"});
    std::mt19937 rng(77);
    for (int i = 0; i < 60; ++i) {
      ParamScalar a = testsupport::random_scalar(rng, 3);
      const std::string text = a.to_string(s);
      CHECK_MESSAGE(S(text, s) == a, text);
    }
  }

  TEST_CASE("pow") {
    ParamSpace s = thm1_space;
    CHECK(S("A6 + 1", s).pow(0) == ParamScalar(1));
    CHECK(S("A6 + 1", s).pow(2) == S("A6^2 + 2*A6 + 1", s));
    CHECK(S("1/A6", s).pow(3) == S("1/A6^3", s));
  }
}

TEST_SUITE("scalar grammar") {
  TEST_CASE("accepted forms") {
    ParamSpace s = thm1_space;
    CHECK(S("16*A2^2 + 192*A6", s).to_string(s) == "16*A2^2 + 192*A6");
    CHECK(S("-(A6 - 2)", s) == S("2 - A6", s));
    CHECK(S("2^10", s) == ParamScalar(1024));
    CHECK(S("1/2/2", s) == S("1/4", s));
    CHECK(S("  A6*A2 ", s) == S("A2*A6", s));
  }

  TEST_CASE("errors carry the offset") {
    ParamSpace s = thm1_space;
    try {
      S("A6 + * 2", s);
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.position() == 5);
    }
    CHECK(kind_of([&] { S("A6 + x", s); }) == ErrorKind::parse);
    CHECK(kind_of([&] { S("A6 + Q", s); }) == ErrorKind::parse);
    CHECK(kind_of([&] { S("1.5", s); }) == ErrorKind::parse);
    CHECK(kind_of([&] { S("(A6", s); }) == ErrorKind::parse);
    CHECK(kind_of([&] { S("A6^1234567", s); }) == ErrorKind::parse);
  }
}
