#include "doctest.h"

#include "qyoung/hecke.hpp"
#include "qyoung/parser.hpp"
#include "qyoung/young.hpp"

using namespace qyoung;

TEST_CASE("scalar precedence and powers") {
  CHECK(parse_scalar("1+2*3") == RationalFunction(7));
  CHECK(parse_scalar("2^3^1") == RationalFunction(8));
  CHECK(parse_scalar("-q^2") == -(rf_var(VQ) * rf_var(VQ)));
  CHECK(parse_scalar("(1+q)/(1+q)") == RationalFunction(1));
  CHECK(parse_scalar("q^0") == RationalFunction(1));
}

TEST_CASE("caret is wedge unless the exponent is an integer literal") {
  Multivector e1 = Multivector::generator(8, 1), e5 = Multivector::generator(8, 5);
  CHECK(parse_expression("e1^e5") == wedge(e1, e5));
  // b1^2 is a repeated Clifford power: (1-q) b1 + q.
  Multivector expect = parse_expression("(1-q)*b1 + q*Id");
  CHECK(parse_expression("b1^2") == expect);
}

TEST_CASE("named operators match the library constructions") {
  HeckeAlgebra h(3);
  CHECK(parse_expression("Y3") == h.to_multivector(young::Y3(h)));
  CHECK(parse_expression("Y21_132") == h.to_multivector(young::Y21_132(h)));
  CHECK(parse_expression("b121") == h.to_multivector(h.word({1, 2, 1})));
  CHECK(parse_expression("R12 - q*Id - b1").is_zero());
}

TEST_CASE("functions rev, alphaq, lim1") {
  HeckeAlgebra h(3);
  CHECK(parse_expression("rev(Y3) - Y111").is_zero());
  CHECK(parse_expression("alphaq(b1)") ==
        h.to_multivector(h.alpha(h.word({1}))));
  CHECK(parse_expression("lim1(Y3 - (Id+b1+b2+b12+b21+b121)/6)").is_zero());
}

TEST_CASE("error reporting with offsets") {
  CHECK_THROWS_AS(parse_expression("e1^(e5"), ParseError);
  try {
    parse_expression("e1^(e5");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 6);
  }
  CHECK_THROWS_AS(parse_expression("bogus_name"), ParseError);
  CHECK_THROWS_AS(parse_expression("1 +"), ParseError);
  CHECK_THROWS_AS(parse_scalar("K7"), ParseError);
  // Division by a non-scalar is rejected.
  CHECK_THROWS_AS(parse_expression("Id/b1"), ParseError);
  // alphaq of something outside the Hecke span is an evaluation error.
  CHECK_THROWS_AS(parse_expression("alphaq(e1)"), ParseError);
}

TEST_CASE("whitespace and nesting") {
  CHECK(parse_expression("  ( b1 * b2 ) * b1 - b121 ").is_zero());
  CHECK_THROWS_AS(parse_expression("-(−1+1)*b1"), ParseError);  // unicode minus is rejected
}
