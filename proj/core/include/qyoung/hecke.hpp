#ifndef QYOUNG_HECKE_HPP
#define QYOUNG_HECKE_HPP

#include <string>
#include <vector>

#include "qyoung/clifford.hpp"
#include "qyoung/linalg.hpp"
#include "qyoung/quadext.hpp"

namespace qyoung {

/// Coordinates of an even multivector in the fixed word basis
/// [1, b1] (n = 2) or [1, b1, b2, b12, b21, b121] (n = 3).
using HeckeElement = std::vector<RationalFunction>;

/// An element outside the span of the word basis.
struct NotInSubalgebra : std::domain_error {
  explicit NotInSubalgebra(const std::string& residual)
      : std::domain_error("element is not in the Hecke subalgebra; residual: " + residual) {}
};

/// b_i = e_i ^ e_{i+n} in the algebra of the standard 2n x 2n form.
Multivector hecke_generator(int i, int n);

struct RelationCheck {
  std::string name;
  Multivector residual;
  bool pass;
};

/// Verifies the quadratic, distance-commutation and braid relations of the
/// embedded generators for 2 <= n <= 4; residuals are exact multivectors.
std::vector<RelationCheck> check_relations(int n);

/// H(n,q) for n = 2 or 3, realized inside the dimension-8 Clifford algebra of
/// the standard form with b_i = e_i ^ e_{i+4} (so the stored Grassmann
/// expansions hold verbatim). Word products, reversion and the alpha_q map
/// are tabulated once as structure constants over Q(q).
class HeckeAlgebra {
 public:
  explicit HeckeAlgebra(int n);

  int n() const { return n_; }
  int size() const { return static_cast<int>(words_.size()); }
  const BilinearForm& B() const { return B_; }
  const std::vector<std::vector<int>>& words() const { return words_; }
  const std::vector<Multivector>& basis() const { return basis_; }
  const Multivector& generator_mv(int i) const { return gens_.at(i - 1); }

  HeckeElement one() const;
  HeckeElement zero() const { return HeckeElement(size()); }
  /// Coordinates of the word basis element holding generator word w.
  HeckeElement word(const std::vector<int>& w) const;

  Multivector to_multivector(const HeckeElement& x) const;
  HeckeElement to_coords(const Multivector& x) const;

  HeckeElement mul(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement reversed(const HeckeElement& x) const;
  HeckeElement alpha(const HeckeElement& x) const;
  HeckeElement kw_transform(const HeckeElement& x) const;
  HeckeElement limit_q1(const HeckeElement& x) const;
  HeckeElement substitute(const HeckeElement& x, const Bindings& b) const;
  /// Exact two-sided inverse; throws if the element is not invertible.
  HeckeElement inverse(const HeckeElement& x) const;
  bool gamma_q_member(const HeckeElement& x) const;

  static bool is_zero(const HeckeElement& x);
  HeckeElement add(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement sub(const HeckeElement& x, const HeckeElement& y) const;
  HeckeElement scale(const HeckeElement& x, const RationalFunction& c) const;

  /// Matrix of left multiplication by x on the word basis (column j = x * w_j).
  FieldMatrix left_mult_matrix(const HeckeElement& x) const;
  /// Matrix of right multiplication by x on the word basis (column j = w_j * x).
  FieldMatrix right_mult_matrix(const HeckeElement& x) const;

  std::string str(const HeckeElement& x) const;

  /// Arithmetic over any commutative ring extending Q(q,...), e.g. the
  /// quadratic extensions carrying the split-family roots.
  template <class S>
  std::vector<S> mul_generic(const std::vector<S>& x, const std::vector<S>& y) const {
    std::vector<S> r(size(), S(RationalFunction(0)));
    for (int i = 0; i < size(); ++i) {
      if (x[i].is_zero()) continue;
      for (int j = 0; j < size(); ++j) {
        if (y[j].is_zero()) continue;
        S c = x[i] * y[j];
        for (int k = 0; k < size(); ++k) {
          const RationalFunction& s = mult_[i][j][k];
          if (!s.is_zero()) r[k] += c * S(s);
        }
      }
    }
    return r;
  }
  template <class S>
  std::vector<S> reversed_generic(const std::vector<S>& x) const {
    std::vector<S> r(size(), S(RationalFunction(0)));
    for (int i = 0; i < size(); ++i) {
      if (x[i].is_zero()) continue;
      for (int k = 0; k < size(); ++k) {
        const RationalFunction& s = rev_[i][k];
        if (!s.is_zero()) r[k] += x[i] * S(s);
      }
    }
    return r;
  }

 private:
  int n_;
  BilinearForm B_;
  std::vector<std::vector<int>> words_;
  std::vector<Multivector> gens_;
  std::vector<Multivector> basis_;
  std::vector<Blade> span_blades_;
  FieldMatrix coord_matrix_;  // blade coordinates of the word basis
  std::vector<std::vector<HeckeElement>> mult_;  // structure constants
  std::vector<HeckeElement> rev_;                // reversion of each word
};

}  // namespace qyoung

#endif
