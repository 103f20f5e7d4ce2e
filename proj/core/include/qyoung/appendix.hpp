#ifndef QYOUNG_APPENDIX_HPP
#define QYOUNG_APPENDIX_HPP

#include <string>
#include <utility>
#include <vector>

#include "qyoung/hecke.hpp"
#include "qyoung/linalg.hpp"

namespace qyoung {
namespace appendix {

/// Golden abbreviation polynomials p1..p25 and t1..t8 used by the stored
/// coordinate tables and representation matrices, in a fixed order.
const std::vector<std::pair<std::string, RationalFunction>>& table();
const RationalFunction& poly(const std::string& name);

/// Displayed coordinates of [1, b1, b2, b12, b21, b121] in the Young basis S
/// (row i = word element i, column j = coefficient of S_j).
std::vector<std::vector<RationalFunction>> word_coords_in_S();

/// Displayed left-regular matrices of b1 / b2 (i = 1, 2) and of the Young
/// basis elements S_1..S_6 (i = 1..6) in the Young basis.
FieldMatrix Mb(int i);
FieldMatrix MS(int i);

struct GoldenCheck {
  std::string name;
  bool pass;
  std::string detail;
};

/// Recomputes every golden table entry from first principles and compares it
/// with the stored data. A mismatch is reported as a failed check, never as a
/// thrown error: this validates the data, not the build.
std::vector<GoldenCheck> verify(const HeckeAlgebra& h);

/// One reconciliation entry per stored polynomial p1..p25, t1..t8 (33 total):
/// an expression where the polynomial occurs is recomputed from
/// first principles and compared against the stored form.
std::vector<GoldenCheck> verify_polynomials(const HeckeAlgebra& h);

}  // namespace appendix
}  // namespace qyoung

#endif
