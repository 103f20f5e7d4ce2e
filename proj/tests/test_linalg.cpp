#include "doctest.h"

#include "qyoung/linalg.hpp"
#include "qyoung/parser.hpp"

using namespace qyoung;

namespace {
FieldMatrix from_longs(std::initializer_list<std::initializer_list<long>> rows) {
  FieldMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& row : rows) {
    int j = 0;
    for (long v : row) m.at(i, j++) = RationalFunction(v);
    ++i;
  }
  return m;
}
}  // namespace

TEST_CASE("rank, det and inverse on integer matrices") {
  FieldMatrix m = from_longs({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
  CHECK(rank(m) == 3);
  CHECK(det(m) == RationalFunction(18));
  FieldMatrix inv = inverse(m);
  CHECK((m * inv) == FieldMatrix::identity(3));
  FieldMatrix singular = from_longs({{1, 2}, {2, 4}});
  CHECK(rank(singular) == 1);
  CHECK(det(singular) == RationalFunction(0));
}

TEST_CASE("nullspace and solve") {
  FieldMatrix m = from_longs({{1, 2, 3}, {2, 4, 6}});
  auto ker = nullspace(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) {
    RationalFunction r;
    for (int j = 0; j < 3; ++j) r += m.at(0, j) * v[j];
    CHECK(r == RationalFunction(0));
  }
  LinearSolution sol = solve(m, {RationalFunction(6), RationalFunction(12)});
  CHECK(sol.consistent);
  RationalFunction r0;
  for (int j = 0; j < 3; ++j) r0 += m.at(0, j) * sol.particular[j];
  CHECK(r0 == RationalFunction(6));
  LinearSolution bad = solve(m, {RationalFunction(1), RationalFunction(0)});
  CHECK(!bad.consistent);
}

TEST_CASE("symbolic elimination keeps exact entries") {
  RationalFunction q = rf_var(VQ);
  FieldMatrix m(2, 2);
  m.at(0, 0) = q;
  m.at(0, 1) = RationalFunction(1);
  m.at(1, 0) = RationalFunction(1);
  m.at(1, 1) = q;
  CHECK(det(m) == q * q - RationalFunction(1));
  FieldMatrix inv = inverse(m);
  CHECK(inv.at(0, 0) == q / (q * q - RationalFunction(1)));
  CHECK((m * inv) == FieldMatrix::identity(2));
}

TEST_CASE("charpoly and minpoly") {
  // Diagonalizable with eigenvalues 1, 1, 2.
  FieldMatrix m = from_longs({{1, 0, 0}, {0, 1, 0}, {0, 0, 2}});
  UniPoly c = charpoly(m);
  UniPoly expected_c = uni_mul(uni_pow({RationalFunction(-1), RationalFunction(1)}, 2),
                               {RationalFunction(-2), RationalFunction(1)});
  CHECK(uni_equal(c, expected_c));
  UniPoly p = minpoly(m);
  UniPoly expected_m = uni_mul({RationalFunction(-1), RationalFunction(1)},
                               {RationalFunction(-2), RationalFunction(1)});
  CHECK(uni_equal(p, expected_m));
}

TEST_CASE("charpoly with a symbolic parameter") {
  RationalFunction q = rf_var(VQ);
  FieldMatrix m(2, 2);
  m.at(0, 0) = RationalFunction(1) - q;  // companion of x^2 - (1-q)x - q
  m.at(0, 1) = q;
  m.at(1, 0) = RationalFunction(1);
  // charpoly = (x - 1)(x + q)
  UniPoly expected = uni_mul({RationalFunction(-1), RationalFunction(1)}, {q, RationalFunction(1)});
  CHECK(uni_equal(charpoly(m), expected));
  CHECK(uni_equal(minpoly(m), expected));
}
