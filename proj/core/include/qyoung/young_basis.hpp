#ifndef QYOUNG_YOUNG_BASIS_HPP
#define QYOUNG_YOUNG_BASIS_HPP

#include <vector>

#include "qyoung/hecke.hpp"
#include "qyoung/linalg.hpp"

namespace qyoung {

/// The six-element basis
///   S = [Y3, Y21_123, G*Y21_123, alpha_q(G)*Y21_132, Y21_132, Y111]
/// of H(3,q), symbolic in the parameters K2, K4, K5, K6 of the Young
/// operators and the Garnir element. Provides the change of coordinates from
/// the word basis and the left-regular matrices in this basis.
class YoungBasis {
 public:
  explicit YoungBasis(const HeckeAlgebra& h);

  const HeckeAlgebra& algebra() const { return h_; }
  const std::vector<HeckeElement>& elements() const { return s_; }
  /// Column j holds the word-basis coordinates of S_j.
  const FieldMatrix& change_of_basis() const { return m_; }

  /// Coordinates of a word-basis element in S (exact solve).
  std::vector<RationalFunction> coords_in_S(const HeckeElement& x) const;

  /// Left-regular matrix of x: column j = coords_in_S(x * S_j).
  FieldMatrix left_regular_matrix(const HeckeElement& x) const;

 private:
  const HeckeAlgebra& h_;
  std::vector<HeckeElement> s_;
  FieldMatrix m_;
  FieldMatrix m_inv_;
};

}  // namespace qyoung

#endif
