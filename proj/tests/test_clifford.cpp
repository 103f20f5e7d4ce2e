#include "doctest.h"

#include "qyoung/clifford.hpp"
#include "qyoung/hecke.hpp"
#include "qyoung/parser.hpp"

using namespace qyoung;

namespace {
Multivector gen(int i) { return Multivector::generator(8, i); }
const BilinearForm& B() {
  static BilinearForm b = BilinearForm::standard(4);
  return b;
}
}  // namespace

TEST_CASE("bilinear form five-case structure") {
  const BilinearForm& b = B();
  // Zero blocks on the diagonal.
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j) {
      CHECK(b.at(i, j) == RationalFunction(0));
      CHECK(b.at(i + 4, j + 4) == RationalFunction(0));
    }
  RationalFunction q = rf_var(VQ);
  CHECK(b.at(1, 5) == q);                                  // i = j - n
  CHECK(b.at(6, 1) == q);                                  // i - 1 - n = j
  CHECK(b.at(2, 5) == -(RationalFunction(1) + q));         // i = j + 1 - n
  CHECK(b.at(1, 6) == -(RationalFunction(1) + q));         // i + 1 = j - n
  CHECK(b.at(1, 7) == RationalFunction(1));                // generic upper
  CHECK(b.at(8, 1) == RationalFunction(-1));               // |i - j - n| >= 2, i > n
}

TEST_CASE("wedge is associative and alternating on generators") {
  Multivector e1 = gen(1), e2 = gen(2), e3 = gen(3);
  CHECK(wedge(e1, e1).is_zero());
  CHECK(wedge(e1, e2) == -wedge(e2, e1));
  CHECK(wedge(wedge(e1, e2), e3) == wedge(e1, wedge(e2, e3)));
}

TEST_CASE("clifford product of one-vectors") {
  // e_i e_j = e_i ^ e_j + B(i,j).
  for (int i = 1; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Multivector lhs = cmul(gen(i), gen(j), B());
      Multivector rhs = wedge(gen(i), gen(j)) + Multivector::scalar(8, B().at(i, j));
      CHECK(lhs == rhs);
    }
}

TEST_CASE("left contraction lowers grade") {
  Multivector x = wedge(gen(1), gen(5));
  Multivector c = contract_left(gen(1), x, B());
  for (const auto& t : c.terms()) CHECK(blade_grade(t.first) == 1);
}

TEST_CASE("grade involution and projection") {
  Multivector x = Multivector::scalar(8, RationalFunction(2)) + wedge(gen(1), gen(5)) + gen(3);
  CHECK(grade_project(x, 0) == Multivector::scalar(8, RationalFunction(2)));
  CHECK(grade_project(x, 2) == wedge(gen(1), gen(5)));
  Multivector gi = grade_involute(x);
  CHECK(grade_project(gi, 1) == -gen(3));
  CHECK(grade_project(gi, 2) == wedge(gen(1), gen(5)));
}

TEST_CASE("reversion is not a per-blade sign flip here") {
  // rev(e1^e5) = e5 e1 reversed through the product expansion; on the Hecke
  // generator it acts as b1 -> (1-q) - b1.
  Multivector b1 = hecke_generator(1, 4);
  Multivector expect =
      Multivector::scalar(8, RationalFunction(1) - rf_var(VQ)) - b1;
  CHECK(reverse(b1, B()) == expect);
  // Anti-automorphism on a mixed sample.
  Multivector x = b1 + gen(2), y = wedge(gen(1), gen(6)) - Multivector::scalar(8, rf_var(VQ));
  CHECK(reverse(cmul(x, y, B()), B()) == cmul(reverse(y, B()), reverse(x, B()), B()));
}

TEST_CASE("hecke generators satisfy the quadratic relation") {
  RationalFunction q = rf_var(VQ);
  for (int i = 1; i <= 3; ++i) {
    Multivector bi = hecke_generator(i, 4);
    Multivector lhs = cmul(bi, bi, B());
    Multivector rhs = bi.scaled(RationalFunction(1) - q) + Multivector::scalar(8, q);
    CHECK(lhs == rhs);
  }
}
