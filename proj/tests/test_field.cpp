#include "doctest.h"

#include "qyoung/parser.hpp"
#include "qyoung/ratfunc.hpp"

using namespace qyoung;

TEST_CASE("rational function canonical form") {
  RationalFunction q = rf_var(VQ);
  // (q^2 - 1)/(q - 1) reduces to q + 1.
  RationalFunction r = (q * q - RationalFunction(1)) / (q - RationalFunction(1));
  CHECK(r == q + RationalFunction(1));
  CHECK(r.is_polynomial());
  // Denominator is primitive with a positive leading coefficient.
  RationalFunction s = RationalFunction(1) / (RationalFunction(-2) * q + RationalFunction(-2));
  CHECK(s.den().is_one() == false);
  CHECK(s.str() == "(-1/2)/(q + 1)");
}

TEST_CASE("field axioms on sample elements") {
  RationalFunction q = rf_var(VQ), k = rf_var(VK4);
  RationalFunction a = (q + k) / (q - k), b = q * k + RationalFunction(3), c = q / (k + RationalFunction(1));
  CHECK((a + b) * c == a * c + b * c);
  CHECK(a - a == RationalFunction(0));
  CHECK(a / a == RationalFunction(1));
  CHECK(a * a.inverse() == RationalFunction(1));
  CHECK(a.pow(3) == a * a * a);
  CHECK(a.pow(-2) == (a * a).inverse());
}

TEST_CASE("substitution and poles") {
  RationalFunction q = rf_var(VQ);
  RationalFunction r = RationalFunction(1) / (q - RationalFunction(1));
  Bindings good;
  good.set(VQ, Rational(3));
  CHECK(r.substitute(good) == RationalFunction(Rational(1, 2)));
  Bindings bad;
  bad.set(VQ, Rational(1));
  CHECK_THROWS_AS(r.substitute(bad), PoleError);
  // evaluate returns nullopt with unbound variables present.
  RationalFunction s = q + rf_var(VK2);
  CHECK(!s.evaluate(good).has_value());
  Bindings full = good;
  full.set(VK2, Rational(-3));
  CHECK(*s.evaluate(full) == 0);
}

TEST_CASE("gcd cancellation on dense multivariate inputs") {
  RationalFunction q = rf_var(VQ), k2 = rf_var(VK2), k4 = rf_var(VK4);
  RationalFunction common = (q * k2 + k4 + RationalFunction(1)).pow(3);
  RationalFunction num = common * (q - k2), den = common * (q + k4);
  RationalFunction r(num.num(), den.num());
  CHECK(r == (q - k2) / (q + k4));
}

TEST_CASE("parse_scalar round trips the appendix-scale expressions") {
  RationalFunction p = parse_scalar("-K6*q^2-K4*q^2+2*K6*q+K5*q+K4*q-K6-K4");
  RationalFunction q = rf_var(VQ);
  CHECK(p.substitute(Bindings{}.set(VK4, Rational(0)).set(VK5, Rational(0)).set(VK6, Rational(0)))
        == RationalFunction(0));
  CHECK(parse_scalar("(1+q)^2") == (RationalFunction(1) + q) * (RationalFunction(1) + q));
  CHECK(parse_scalar("1/2 + 1/2") == RationalFunction(1));
}

TEST_CASE("string rendering is stable") {
  RationalFunction r = parse_scalar("(q^2-1)/(q^2+2*q+1)");
  CHECK(r.str() == "(q - 1)/(q + 1)");
  CHECK(parse_scalar(r.str()) == r);
}
