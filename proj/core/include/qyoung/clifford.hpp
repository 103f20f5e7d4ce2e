#ifndef QYOUNG_CLIFFORD_HPP
#define QYOUNG_CLIFFORD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qyoung/ratfunc.hpp"

namespace qyoung {

/// Basis blade as a bitmask over generators e1..e{2n}; bit i-1 set means e_i
/// is a factor. The empty mask is the unit Id.
using Blade = std::uint32_t;

inline int blade_grade(Blade b) { return __builtin_popcount(b); }

/// Bilinear form on a 2n-dimensional generator space. No symmetry assumed.
class BilinearForm {
 public:
  BilinearForm(int n, std::vector<std::vector<RationalFunction>> entries);

  /// The deformation-compatible form: zero n x n diagonal blocks, q on the
  /// shifted diagonals, -(1+q) adjacent to them, -1 for |i-j-n| >= 2 in the
  /// lower block, 1 everywhere else. Indices are 1-based.
  static BilinearForm standard(int n);

  int n() const { return n_; }
  int dim() const { return 2 * n_; }
  /// 1-based generator indices.
  const RationalFunction& at(int i, int j) const { return entries_[i - 1][j - 1]; }

 private:
  int n_;
  std::vector<std::vector<RationalFunction>> entries_;
};

/// Finite sum of blades with rational-function coefficients, in an algebra of
/// fixed dimension 2n. Terms sorted ascending by blade mask; no zeros stored.
class Multivector {
 public:
  using Term = std::pair<Blade, RationalFunction>;

  explicit Multivector(int dim) : dim_(dim) {}
  static Multivector zero(int dim) { return Multivector(dim); }
  static Multivector scalar(int dim, const RationalFunction& c);
  static Multivector generator(int dim, int i);  // e_i, 1-based
  static Multivector blade(int dim, Blade b, const RationalFunction& c);

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  RationalFunction coeff(Blade b) const;
  RationalFunction scalar_part() const { return coeff(0); }
  int max_grade() const;
  bool is_even() const;

  Multivector operator-() const;
  Multivector operator+(const Multivector& o) const;
  Multivector operator-(const Multivector& o) const;
  Multivector scaled(const RationalFunction& c) const;
  Multivector& operator+=(const Multivector& o) { return *this = *this + o; }
  Multivector& operator-=(const Multivector& o) { return *this = *this - o; }
  bool operator==(const Multivector& o) const {
    return dim_ == o.dim_ && terms_ == o.terms_;
  }

  Multivector substitute(const Bindings& b) const;

  std::string str() const;

  static Multivector from_sorted(int dim, std::vector<Term> terms);

 private:
  int dim_;
  std::vector<Term> terms_;
};

/// Exterior product.
Multivector wedge(const Multivector& x, const Multivector& y);

/// Left contraction of a 1-vector into a multivector, weighted by B.
Multivector contract_left(const Multivector& v, const Multivector& y, const BilinearForm& B);

/// Clifford product of the pair (B, V): on a 1-vector e_i acting from the
/// left, e_i y = e_i ^ y + e_i _| y; longer blades peel one generator at a
/// time with the contraction correction.
Multivector cmul(const Multivector& x, const Multivector& y, const BilinearForm& B);

/// Reversion: the anti-automorphism of cmul fixing 1-vectors. With a
/// non-symmetric B this is not a per-blade sign flip; it is computed by the
/// recursion reverse(e_i ^ I') = reverse(I') e_i - reverse(e_i _| I').
Multivector reverse(const Multivector& x, const BilinearForm& B);

Multivector grade_involute(const Multivector& x);
Multivector grade_project(const Multivector& x, int k);

}  // namespace qyoung

#endif
