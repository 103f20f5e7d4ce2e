#include "qyoung/young_basis.hpp"

#include <stdexcept>

#include "qyoung/garnir.hpp"
#include "qyoung/young.hpp"

namespace qyoung {

YoungBasis::YoungBasis(const HeckeAlgebra& h) : h_(h), m_(6, 6), m_inv_(6, 6) {
  if (h.n() != 3) throw std::invalid_argument("the Young basis needs the n = 3 word basis");
  HeckeElement y123 = young::Y21_123(h);
  HeckeElement y132 = young::Y21_132(h);
  HeckeElement g = garnir::garnir_element(h);
  s_ = {young::Y3(h), y123,          h_.mul(g, y123),
        h_.mul(h_.alpha(g), y132),   y132,            young::Y111(h)};
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < 6; ++i) m_.at(i, j) = s_[j][i];
  if (rank(m_) != 6) throw std::logic_error("Young basis elements are linearly dependent");
  m_inv_ = inverse(m_);
}

std::vector<RationalFunction> YoungBasis::coords_in_S(const HeckeElement& x) const {
  return m_inv_.apply(x);
}

FieldMatrix YoungBasis::left_regular_matrix(const HeckeElement& x) const {
  FieldMatrix out(6, 6);
  for (int j = 0; j < 6; ++j) {
    std::vector<RationalFunction> col = coords_in_S(h_.mul(x, s_[j]));
    for (int i = 0; i < 6; ++i) out.at(i, j) = col[i];
  }
  return out;
}

}  // namespace qyoung
