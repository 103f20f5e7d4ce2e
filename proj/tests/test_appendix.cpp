#include "doctest.h"

#include <set>

#include "qyoung/appendix.hpp"
#include "qyoung/parser.hpp"

using namespace qyoung;

TEST_CASE("stored polynomial table shape") {
  auto t = appendix::table();
  CHECK(t.size() == 33);  // p1..p25 and t1..t8
  std::set<std::string> names;
  for (const auto& [name, poly] : t) {
    CHECK(names.insert(name).second);
    CHECK(poly.is_polynomial());
  }
  for (int i = 1; i <= 25; ++i) CHECK(names.count("p" + std::to_string(i)));
  for (int i = 1; i <= 8; ++i) CHECK(names.count("t" + std::to_string(i)));
  CHECK(appendix::poly("p21") == parse_scalar("-K4*q-K2*q+K6+K5"));
  CHECK_THROWS(appendix::poly("p26"));
}

TEST_CASE("stored matrices have the stored block structure") {
  for (int g = 1; g <= 2; ++g) {
    FieldMatrix m = appendix::Mb(g);
    CHECK(m.rows() == 6);
    CHECK(m.cols() == 6);
    CHECK(m.at(0, 0) == RationalFunction(1));
    CHECK(m.at(5, 5) == -rf_var(VQ));
    // Off-block entries vanish.
    for (int i = 1; i < 3; ++i)
      for (int j = 3; j < 6; ++j) {
        CHECK(m.at(i, j).is_zero());
        CHECK(m.at(j, i).is_zero());
      }
  }
  // Both stored generator matrices satisfy the Hecke quadratic exactly.
  RationalFunction q = rf_var(VQ);
  for (int g = 1; g <= 2; ++g) {
    FieldMatrix m = appendix::Mb(g);
    FieldMatrix r = m * m - m.scaled(RationalFunction(1) - q) -
                    FieldMatrix::identity(6).scaled(q);
    CHECK(r.is_zero());
  }
}

TEST_CASE("stored Young-basis matrices represent the unit correctly") {
  CHECK(appendix::MS(1) * appendix::MS(1) == appendix::MS(1));
  // 1 = S1 + S2 + S5 + S6, so the stored matrices must sum to the identity.
  FieldMatrix sum = appendix::MS(1);
  for (int i : {2, 5, 6}) sum = sum + appendix::MS(i);
  CHECK(sum == FieldMatrix::identity(6));
}

TEST_CASE("word coordinate table is consistent with unity") {
  auto rows = appendix::word_coords_in_S();
  CHECK(rows.size() == 6);
  // Row of 1 is (1, 1, 0, 0, 1, 1).
  CHECK(rows[0] == std::vector<RationalFunction>{
            RationalFunction(1), RationalFunction(1), RationalFunction(0), RationalFunction(0),
            RationalFunction(1), RationalFunction(1)});
}
