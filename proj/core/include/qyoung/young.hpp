#ifndef QYOUNG_YOUNG_HPP
#define QYOUNG_YOUNG_HPP

#include <vector>

#include "qyoung/hecke.hpp"
#include "qyoung/quadext.hpp"

namespace qyoung {
namespace young {

/// Hecke element with coordinates in a quadratic extension of the
/// coefficient field (carries the kappa / alpha split roots).
using ExtElement = std::vector<QuadExt>;

// --- n = 2 (word basis [1, b1]) ---------------------------------------

/// Unnormalized row symmetrizer q*1 + b1 and column antisymmetrizer 1 - b1,
/// exchanged by reversion; R12 * R12 = (1+q) * R12.
HeckeElement R12(const HeckeAlgebra& h);
HeckeElement C12(const HeckeAlgebra& h);
/// Normalized Young operators Y2 = R12/(1+q), Y11 = C12/(1+q).
HeckeElement Y2(const HeckeAlgebra& h);
HeckeElement Y11(const HeckeAlgebra& h);

// --- n = 3 (word basis [1, b1, b2, b12, b21, b121]) --------------------

/// Full symmetrizer (q^3 + q^2 b1 + q^2 b2 + q b12 + q b21 + b121) / ((1+q+q^2)(1+q)).
HeckeElement Y3(const HeckeAlgebra& h);
/// Full antisymmetrizer, the reversion of Y3.
HeckeElement Y111(const HeckeAlgebra& h);

/// The King-Wybourne row operator q^3*1 + b121 and column operator 1 - b121;
/// these two are NOT related by reversion for generic q.
HeckeElement kw_R13(const HeckeAlgebra& h);
HeckeElement kw_C13(const HeckeAlgebra& h);
/// The closed form of kw_C13 - reversed(kw_R13); vanishes only at q = 1.
HeckeElement kw_discrepancy(const HeckeAlgebra& h);

/// All X with X + reversed(X) = 1: an affine family of dimension four.
struct SplitFamily {
  HeckeElement particular;                // one solution from the linear solve
  std::vector<HeckeElement> directions;   // kernel basis of (I + R)
  HeckeElement general;                   // closed form, free in K2, K3, K4, K6
};
SplitFamily solve_reversion_split(const HeckeAlgebra& h);

/// Minimal quadratics (in K2 and K4) of the two split roots.
QuadRelationPtr kappa_relation();
QuadRelationPtr alpha_root_relation();

/// Representatives r1..r6 of the idempotent solution families of the
/// reversion split. r1..r4 live over the base field (free K4);
/// r5 and r6 need the kappa / alpha quadratic extension (free K2, K4).
HeckeElement representative(const HeckeAlgebra& h, int i);     // i in 1..4
ExtElement representative_ext(const HeckeAlgebra& h, int i);   // i in 5..6

/// r5 (i = 5) or r6 (i = 6) with K2, K4 and the corresponding root replaced
/// by explicit base-field values; the caller must supply an exact root of the
/// matching quadratic. Used for the extension-free cross-check.
HeckeElement representative_at(const HeckeAlgebra& h, int i, const RationalFunction& K2,
                               const RationalFunction& K4, const RationalFunction& root);

/// The chosen independent set f1 = r1, f2 = r2, f3 = r3 (f4 = r5 lives in
/// the extension; use representative_ext(h, 5)).
HeckeElement f(const HeckeAlgebra& h, int i);  // i in 1..3

/// Mixed-symmetry Young operators (free parameter K4).
HeckeElement Y21_132(const HeckeAlgebra& h);   // f1 - Y111
HeckeElement Y21_123(const HeckeAlgebra& h);   // reversed(Y21_132)
/// Their closed forms, transcribed independently of the computation above.
HeckeElement Y21_132_closed(const HeckeAlgebra& h);
HeckeElement Y21_123_closed(const HeckeAlgebra& h);

/// Row symmetrizer R(13) solving Y21_132 = R13 * f1 (free parameter P3),
/// and its reversion C(13). C12 in this setting is f1 itself.
HeckeElement R13(const HeckeAlgebra& h);
HeckeElement C13(const HeckeAlgebra& h);

/// The stored one-parameter intertwiner T with T*Y21_123 = Y21_132*T != 0,
/// valid away from the excluded K4 value below.
HeckeElement T_intertwiner(const HeckeAlgebra& h);
RationalFunction T_excluded_K4();

/// Convert base-field coordinates into the extension.
ExtElement to_ext(const HeckeElement& x);
bool ext_is_zero(const ExtElement& x);
ExtElement ext_sub(const ExtElement& x, const ExtElement& y);

}  // namespace young
}  // namespace qyoung

#endif
