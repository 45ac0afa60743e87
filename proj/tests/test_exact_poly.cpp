#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace plas;
using namespace plas::test;

TEST_CASE("rationals are kept in lowest terms", "[rational]") {
  Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.to_string() == "-3/2");
  CHECK(r.denominator() == 2);
  CHECK(Rational(mpz_class(0), mpz_class(7)).to_string() == "0");
  CHECK(Rational::parse("10/4") == Rational(mpz_class(5), mpz_class(2)));
  CHECK_THROWS_AS(Rational(mpz_class(1), mpz_class(0)), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
}

TEST_CASE("ring operations produce canonical forms", "[multipoly]") {
  CHECK((P("x1 + x2") + P("-x1")) == P("x2"));
  CHECK((P("x1") * P("x2") - P("x2") * P("x1")).is_zero());
  MultiPoly half_y1 = Rational(1, 2) * P("y1");
  MultiPoly sq = half_y1 * P("y1");
  REQUIRE(sq.term_count() == 1);
  CHECK(sq.leading_term().second == Rational(1, 2));
  CHECK(sq.degree_in(ctx().index("y1")) == 2);
  CHECK(format_poly(sq) == "1/2*y1^2");
  CHECK((-P("x1 - 3")) == P("3 - x1"));
}

TEST_CASE("mixing symbol contexts is an error", "[multipoly]") {
  SymbolContext other({"a", "b"});
  MultiPoly a = MultiPoly::variable(other, "a");
  CHECK_THROWS_AS(a + P("x1"), ContextError);
  CHECK_THROWS_AS(a * P("x1"), ContextError);
}

TEST_CASE("evaluation at rational points", "[multipoly]") {
  CHECK(P("x3^2 + 1").eval({{"x3", Rational(2)}}) == Rational(5));
  CHECK(P("0").eval({}) == Rational(0));
  CHECK(P("1 - 1/2*y1^2 - 1/2*y2^2").eval({{"y1", Rational(1)}, {"y2", Rational(1)}}) == Rational(0));
  CHECK_THROWS_AS(P("x1 + x2").eval({{"x1", Rational(1)}}), UnboundSymbolError);
}

TEST_CASE("partial substitution keeps the remaining symbols", "[multipoly]") {
  MultiPoly p = P("lambda*x1 + mu^2*x2");
  CHECK(p.substitute({{"lambda", Rational(3)}}) == P("3*x1 + mu^2*x2"));
  CHECK(p.substitute({{"mu", Rational(-1, 2)}}) == P("lambda*x1 + 1/4*x2"));
}

TEST_CASE("parsing the polynomial grammar", "[parse]") {
  MultiPoly p = P("-1/2*x2");
  REQUIRE(p.term_count() == 1);
  CHECK(p.leading_term().second == Rational(-1, 2));
  CHECK(P("x1*x2 - x2*x1").is_zero());
  CHECK(P("lambda*x1") == MultiPoly::variable(ctx(), "lambda") * MultiPoly::variable(ctx(), "x1"));
  CHECK(P("(x1 + 1)*(x1 + 1)") == P("x1^2 + 2*x1 + 1"));
  CHECK(P("-(x1 - x2)") == P("x2 - x1"));
  // exponents attach to symbols only
  CHECK_THROWS_AS(P("(x1 + 1)^2"), ParseError);
  CHECK_THROWS_AS(P("2^3"), ParseError);
}

TEST_CASE("parse errors carry positions", "[parse]") {
  try {
    P("x1 + * x2");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(P("x1 +"), ParseError);
  CHECK_THROWS_AS(P("(x1"), ParseError);
  CHECK_THROWS_AS(P("1/0"), Error);
  CHECK_THROWS_AS(P("kappa*x1"), Error);
  CHECK_THROWS_AS(P("x1 x2"), ParseError);
}

TEST_CASE("ring laws on random polynomials", "[multipoly][property]") {
  std::mt19937 rng(1234);
  const std::vector<std::string> syms{"x1", "x2", "y1", "lambda"};
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly a = random_poly(rng, syms, 6, 4), b = random_poly(rng, syms, 6, 4), c = random_poly(rng, syms, 6, 4);
    CHECK(((a + b) + c) == (a + (b + c)));
    CHECK(((a * b) * c) == (a * (b * c)));
    CHECK((a * (b + c)) == (a * b + a * c));
    CHECK((a * b) == (b * a));
    CHECK((a - a).is_zero());
    // canonical form: equal values have equal term maps
    MultiPoly d = a * b + c;
    MultiPoly d2 = c + b * a;
    CHECK(d.terms() == d2.terms());
  }
}

TEST_CASE("evaluation is a ring homomorphism", "[multipoly][property]") {
  std::mt19937 rng(99);
  const std::vector<std::string> syms{"x1", "x2", "y1", "lambda"};
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly a = random_poly(rng, syms, 6, 4), b = random_poly(rng, syms, 6, 4), c = random_poly(rng, syms, 6, 4);
    Assignment pt;
    for (const auto& s : syms) pt[s] = random_rational(rng);
    CHECK((a * b + c).eval(pt) == a.eval(pt) * b.eval(pt) + c.eval(pt));
  }
}

TEST_CASE("format then parse is the identity on random and catalog polynomials", "[parse][property]") {
  std::mt19937 rng(7);
  const std::vector<std::string> syms{"x1", "x2", "y3", "mu", "gamma"};
  for (int trial = 0; trial < 200; ++trial) {
    MultiPoly a = random_poly(rng, syms, 6, 4);
    CHECK(P(format_poly(a)) == a);
  }
  std::size_t checked = 0;
  auto round_trip = [&](const PolyMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        CHECK(P(format_poly(m(i, j))) == m(i, j));
        ++checked;
      }
  };
  for (const auto& row : catalog().rows) {
    round_trip(row.expected_L);
    round_trip(row.expected_R);
    round_trip(row.embedding.t);
    for (const auto& d : row.embedding.d) round_trip(d);
  }
  for (const auto& g : catalog().algebras)
    for (const auto& entry : g.constants().entries)
      for (const auto& c : entry.value) {
        CHECK(P(format_poly(c)) == c);
        ++checked;
      }
  CHECK(checked > 500);
}

TEST_CASE("univariate gcd, squarefree part and rational roots", "[upoly]") {
  // (X - 1/2)^2 (X + 3) = X^3 + 2X^2 - 11/4 X + 3/4
  UPoly p({Rational(3, 4), Rational(-11, 4), Rational(2), Rational(1)});
  auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Rational(-3));
  CHECK(roots[1] == Rational(1, 2));
  CHECK_FALSE(is_squarefree(p));
  UPoly sf = squarefree_part(p);
  CHECK(sf.degree() == 2);
  CHECK(is_squarefree(sf));
  // X^2 + 1 has no rational roots
  CHECK(rational_roots(UPoly({Rational(1), Rational(0), Rational(1)})).empty());
  UPoly g = gcd(UPoly({Rational(-1), Rational(0), Rational(1)}), UPoly({Rational(1), Rational(1)}));
  CHECK(g == UPoly({Rational(1), Rational(1)}));
}
