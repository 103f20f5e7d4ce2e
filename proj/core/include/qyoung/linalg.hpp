#ifndef QYOUNG_LINALG_HPP
#define QYOUNG_LINALG_HPP

#include <optional>
#include <string>
#include <vector>

#include "qyoung/ratfunc.hpp"

namespace qyoung {

/// Dense matrix over Q(q,K1..K6,P3).
class FieldMatrix {
 public:
  FieldMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(rows, std::vector<RationalFunction>(cols)) {}
  static FieldMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  RationalFunction& at(int r, int c) { return a_[r][c]; }
  const RationalFunction& at(int r, int c) const { return a_[r][c]; }

  FieldMatrix operator*(const FieldMatrix& o) const;
  FieldMatrix operator-(const FieldMatrix& o) const;
  FieldMatrix operator+(const FieldMatrix& o) const;
  FieldMatrix scaled(const RationalFunction& c) const;
  FieldMatrix transposed() const {
    FieldMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = a_[i][j];
    return t;
  }
  bool operator==(const FieldMatrix& o) const { return a_ == o.a_; }
  bool is_zero() const;

  std::vector<RationalFunction> apply(const std::vector<RationalFunction>& v) const;
  RationalFunction trace() const;
  FieldMatrix substitute(const Bindings& b) const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<std::vector<RationalFunction>> a_;
};

/// Exact rank via fraction-free (Bareiss) elimination.
int rank(const FieldMatrix& m);

/// Exact determinant via Bareiss; matrix must be square.
RationalFunction det(const FieldMatrix& m);

/// Basis of the right nullspace { x : M x = 0 }.
std::vector<std::vector<RationalFunction>> nullspace(const FieldMatrix& m);

struct LinearSolution {
  bool consistent = false;
  std::vector<RationalFunction> particular;            // one solution, if consistent
  std::vector<std::vector<RationalFunction>> kernel;   // homogeneous directions
};

/// Full solution set of M x = b; throws nothing, reports inconsistency.
LinearSolution solve(const FieldMatrix& m, const std::vector<RationalFunction>& b);

/// Unique solution of a square nonsingular system; throws on singular input.
std::vector<RationalFunction> solve_unique(const FieldMatrix& m,
                                           const std::vector<RationalFunction>& b);

/// Inverse of a square nonsingular matrix.
FieldMatrix inverse(const FieldMatrix& m);

/// Dense univariate polynomial over the field, coefficients ascending in x.
using UniPoly = std::vector<RationalFunction>;

UniPoly uni_mul(const UniPoly& a, const UniPoly& b);
UniPoly uni_sub(const UniPoly& a, const UniPoly& b);
UniPoly uni_pow(const UniPoly& a, int k);
bool uni_equal(const UniPoly& a, const UniPoly& b);
std::string uni_str(const UniPoly& p, const std::string& var = "x");

/// Monic characteristic polynomial det(xI - M), division-free in the entries
/// (Faddeev-LeVerrier; only integer divisions occur).
UniPoly charpoly(const FieldMatrix& m);

/// Monic minimal polynomial via the first linear dependence among powers.
UniPoly minpoly(const FieldMatrix& m);

}  // namespace qyoung

#endif
