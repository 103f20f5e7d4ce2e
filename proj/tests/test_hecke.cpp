#include "doctest.h"

#include "qyoung/hecke.hpp"
#include "qyoung/parser.hpp"

using namespace qyoung;

TEST_CASE("relation residuals vanish for n = 2, 3, 4") {
  for (int n = 2; n <= 4; ++n) {
    auto checks = check_relations(n);
    CHECK(!checks.empty());
    for (const auto& c : checks) {
      INFO("n=", n, " relation ", c.name);
      CHECK(c.pass);
      CHECK(c.residual.is_zero());
    }
  }
}

TEST_CASE("word basis and coordinate round trip") {
  HeckeAlgebra h(3);
  CHECK(h.size() == 6);
  for (int i = 0; i < h.size(); ++i) {
    HeckeElement e = h.zero();
    e[i] = RationalFunction(1);
    CHECK(h.to_coords(h.to_multivector(e)) == e);
  }
  // b1 * b2 lands on the b12 word.
  CHECK(h.mul(h.word({1}), h.word({2})) == h.word({1, 2}));
  CHECK(h.mul(h.word({2}), h.word({1})) == h.word({2, 1}));
}

TEST_CASE("elements outside the span are rejected") {
  HeckeAlgebra h(3);
  Multivector odd = Multivector::generator(8, 1);
  CHECK_THROWS_AS(h.to_coords(odd), NotInSubalgebra);
}

TEST_CASE("multiplication agrees with the Clifford product") {
  HeckeAlgebra h(3);
  HeckeElement x = h.add(h.word({1, 2}), h.scale(h.one(), parse_scalar("q-1")));
  HeckeElement y = h.sub(h.word({2, 1}), h.word({1}));
  Multivector direct = cmul(h.to_multivector(x), h.to_multivector(y), h.B());
  CHECK(h.to_coords(direct) == h.mul(x, y));
}

TEST_CASE("inverse and alpha") {
  HeckeAlgebra h(3);
  HeckeElement b1 = h.word({1});
  CHECK(h.mul(h.inverse(b1), b1) == h.one());
  CHECK(h.mul(b1, h.inverse(b1)) == h.one());
  // alpha_q is the versor inverse on words but not linear-inverse in general.
  CHECK(h.mul(h.alpha(h.word({1, 2, 1})), h.word({1, 2, 1})) == h.one());
  HeckeElement s = h.add(h.one(), b1);
  CHECK(h.alpha(s) != h.inverse(s));
  CHECK(h.gamma_q_member(b1));
  CHECK(!h.gamma_q_member(s));
}

TEST_CASE("alpha against its closed description") {
  // alpha_q(w) = (-1/q)^s rev(w) for a length-s word.
  HeckeAlgebra h(3);
  RationalFunction mq = parse_scalar("-1/q");
  struct Case { std::vector<int> w; int s; };
  for (const Case& c : {Case{{1}, 1}, Case{{2}, 1}, Case{{1, 2}, 2}, Case{{1, 2, 1}, 3}}) {
    HeckeElement lhs = h.alpha(h.word(c.w));
    HeckeElement rhs = h.scale(h.reversed(h.word(c.w)), mq.pow(c.s));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("q to 1 limit contracts to the symmetric group algebra") {
  HeckeAlgebra h(3);
  // b1^2 = (1-q) b1 + q becomes s1^2 = 1.
  HeckeElement sq = h.limit_q1(h.mul(h.word({1}), h.word({1})));
  CHECK(sq == h.one());
  CHECK_THROWS(h.limit_q1(h.scale(h.one(), parse_scalar("1/(q-1)"))));
}

TEST_CASE("left and right multiplication matrices") {
  HeckeAlgebra h(3);
  HeckeElement x = h.add(h.word({1}), h.scale(h.word({2, 1}), parse_scalar("q")));
  FieldMatrix L = h.left_mult_matrix(x), R = h.right_mult_matrix(x);
  for (int j = 0; j < h.size(); ++j) {
    HeckeElement ej = h.zero();
    ej[j] = RationalFunction(1);
    HeckeElement lcol = h.mul(x, ej), rcol = h.mul(ej, x);
    for (int i = 0; i < h.size(); ++i) {
      CHECK(L.at(i, j) == lcol[i]);
      CHECK(R.at(i, j) == rcol[i]);
    }
  }
}
