#ifndef QYOUNG_GARNIR_HPP
#define QYOUNG_GARNIR_HPP

#include <vector>

#include "qyoung/hecke.hpp"

namespace qyoung {
namespace garnir {

/// Solutions X of  A * X = 0  (left annihilation by A) as a kernel basis.
std::vector<HeckeElement> solve_right_annihilator(const HeckeAlgebra& h, const HeckeElement& A);

/// The three stored solution families of  Y21_123 * X = 0.
/// XX1 is linear and injective in (K2, K4, K5, K6) and spans the kernel;
/// XX2 and XX3 are affine slices in (K1, K5, K6).
HeckeElement XX1(const HeckeAlgebra& h);
HeckeElement XX2(const HeckeAlgebra& h);
HeckeElement XX3(const HeckeAlgebra& h);

/// The chosen Garnir element G = XX1, symbolic in K2, K4, K5, K6. It kills
/// Y21_123 from the right and acts nontrivially from the left.
HeckeElement garnir_element(const HeckeAlgebra& h);

/// G with explicit parameter values; throws std::invalid_argument when the
/// choice is degenerate (G * Y21_123 = 0, so G is unusable as a Garnir element).
HeckeElement garnir_element_at(const HeckeAlgebra& h, const RationalFunction& K2,
                               const RationalFunction& K4, const RationalFunction& K5,
                               const RationalFunction& K6);

/// Closed form of alpha_q applied to the Garnir element.
HeckeElement alpha_q_garnir_closed(const HeckeAlgebra& h);

/// Kernel basis of  X * A = B * X  (intertwiners from A to B).
std::vector<HeckeElement> solve_intertwiner(const HeckeAlgebra& h, const HeckeElement& A,
                                            const HeckeElement& B);

/// True when every intertwiner from A to B annihilates A (i.e. the pair has
/// no nontrivial intertwiner).
bool only_trivial_intertwiners(const HeckeAlgebra& h, const HeckeElement& A,
                               const HeckeElement& B);

}  // namespace garnir
}  // namespace qyoung

#endif
