#include "qyoung/linalg.hpp"

#include <sstream>

namespace qyoung {

FieldMatrix FieldMatrix::identity(int n) {
  FieldMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction(1);
  return m;
}

FieldMatrix FieldMatrix::operator*(const FieldMatrix& o) const {
  if (cols_ != o.rows_) throw std::domain_error("matrix product shape mismatch");
  FieldMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (a_[i][k].is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.a_[k][j].is_zero()) continue;
        r.a_[i][j] += a_[i][k] * o.a_[k][j];
      }
    }
  return r;
}

FieldMatrix FieldMatrix::operator-(const FieldMatrix& o) const {
  FieldMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.a_[i][j] = a_[i][j] - o.a_[i][j];
  return r;
}

FieldMatrix FieldMatrix::operator+(const FieldMatrix& o) const {
  FieldMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.a_[i][j] = a_[i][j] + o.a_[i][j];
  return r;
}

FieldMatrix FieldMatrix::scaled(const RationalFunction& c) const {
  FieldMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.a_[i][j] = a_[i][j] * c;
  return r;
}

bool FieldMatrix::is_zero() const {
  for (const auto& row : a_)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

std::vector<RationalFunction> FieldMatrix::apply(const std::vector<RationalFunction>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::domain_error("vector length mismatch");
  std::vector<RationalFunction> r(rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!a_[i][j].is_zero() && !v[j].is_zero()) r[i] += a_[i][j] * v[j];
  return r;
}

RationalFunction FieldMatrix::trace() const {
  RationalFunction t;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += a_[i][i];
  return t;
}

FieldMatrix FieldMatrix::substitute(const Bindings& b) const {
  FieldMatrix r(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.a_[i][j] = a_[i][j].substitute(b);
  return r;
}

std::string FieldMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << a_[i][j].str();
    }
    os << "]\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Fraction-free elimination.
// ---------------------------------------------------------------------------

namespace {

struct Echelon {
  std::vector<std::vector<MultiPoly>> rows;  // upper echelon, polynomial entries
  std::vector<int> pivot_cols;               // one per nonzero row, ascending
  int cols = 0;
};

// Clear denominators row-wise and run Bareiss with column pivoting.
Echelon bareiss(const FieldMatrix& m, const std::vector<RationalFunction>* rhs) {
  int nr = m.rows(), nc = m.cols() + (rhs ? 1 : 0);
  std::vector<std::vector<MultiPoly>> a(nr, std::vector<MultiPoly>(nc));
  for (int i = 0; i < nr; ++i) {
    MultiPoly common = MultiPoly::constant(1);
    auto entry = [&](int j) -> const RationalFunction& {
      return j < m.cols() ? m.at(i, j) : (*rhs)[i];
    };
    for (int j = 0; j < nc; ++j) {
      const MultiPoly& d = entry(j).den();
      MultiPoly g = gcd(common, d);
      common = common * d.divide_exact(g);
    }
    for (int j = 0; j < nc; ++j) {
      const RationalFunction& x = entry(j);
      a[i][j] = x.num() * common.divide_exact(x.den());
    }
  }

  Echelon e;
  e.cols = nc;
  MultiPoly prev = MultiPoly::constant(1);
  int row = 0;
  for (int col = 0; col < m.cols() && row < nr; ++col) {
    int piv = -1;
    for (int i = row; i < nr; ++i)
      if (!a[i][col].is_zero()) {
        if (piv < 0 || a[i][col].size() < a[piv][col].size()) piv = i;
      }
    if (piv < 0) continue;
    std::swap(a[row], a[piv]);
    for (int i = row + 1; i < nr; ++i) {
      for (int j = col + 1; j < nc; ++j)
        a[i][j] = (a[row][col] * a[i][j] - a[i][col] * a[row][j]).divide_exact(prev);
      a[i][col] = MultiPoly{};
    }
    prev = a[row][col];
    e.pivot_cols.push_back(col);
    ++row;
  }
  a.resize(nr);
  e.rows = std::move(a);
  return e;
}

}  // namespace

int rank(const FieldMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return static_cast<int>(bareiss(m, nullptr).pivot_cols.size());
}

RationalFunction det(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
  int n = m.rows();
  if (n == 0) return RationalFunction(1);
  // Track the denominator scaling introduced by clearing each row.
  RationalFunction scale(1);
  for (int i = 0; i < n; ++i) {
    MultiPoly common = MultiPoly::constant(1);
    for (int j = 0; j < n; ++j) {
      const MultiPoly& d = m.at(i, j).den();
      MultiPoly g = gcd(common, d);
      common = common * d.divide_exact(g);
    }
    scale *= RationalFunction(MultiPoly::constant(1), common);
  }
  // Sign-tracked Bareiss: the last pivot is the determinant of the cleared
  // matrix, up to the row-swap sign.
  std::vector<std::vector<MultiPoly>> a(n, std::vector<MultiPoly>(n));
  int sign = 1;
  for (int i = 0; i < n; ++i) {
    MultiPoly common = MultiPoly::constant(1);
    for (int j = 0; j < n; ++j) {
      const MultiPoly& d = m.at(i, j).den();
      MultiPoly g = gcd(common, d);
      common = common * d.divide_exact(g);
    }
    for (int j = 0; j < n; ++j)
      a[i][j] = m.at(i, j).num() * common.divide_exact(m.at(i, j).den());
  }
  MultiPoly prev = MultiPoly::constant(1);
  for (int k = 0; k < n; ++k) {
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (!a[i][k].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) return RationalFunction(0);
    if (piv != k) {
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j)
        a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]).divide_exact(prev);
      a[i][k] = MultiPoly{};
    }
    prev = a[k][k];
  }
  RationalFunction d(a[n - 1][n - 1]);
  if (sign < 0) d = -d;
  return d * scale;
}

namespace {

// Back-substitution over the field from a Bareiss echelon form.
// Returns particular solution (if rhs used) and kernel basis.
LinearSolution back_substitute(const Echelon& e, int ncols, bool with_rhs) {
  LinearSolution sol;
  int nrows = static_cast<int>(e.pivot_cols.size());
  // Consistency: any zero row with nonzero rhs entry kills it.
  if (with_rhs) {
    for (std::size_t i = e.pivot_cols.size(); i < e.rows.size(); ++i)
      if (!e.rows[i][ncols].is_zero()) return sol;  // inconsistent
    // A pivot in the rhs column also signals inconsistency.
    if (!e.pivot_cols.empty() && e.pivot_cols.back() >= ncols) return sol;
  }
  sol.consistent = true;

  std::vector<bool> is_pivot(ncols, false);
  for (int c : e.pivot_cols)
    if (c < ncols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < ncols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  auto solve_with = [&](const std::vector<RationalFunction>& free_vals,
                        bool use_rhs) {
    std::vector<RationalFunction> x(ncols);
    for (std::size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = free_vals[k];
    for (int r = nrows - 1; r >= 0; --r) {
      int pc = e.pivot_cols[r];
      RationalFunction acc = use_rhs ? RationalFunction(e.rows[r][ncols]) : RationalFunction(0);
      for (int c = pc + 1; c < ncols; ++c)
        if (!e.rows[r][c].is_zero() && !x[c].is_zero())
          acc -= RationalFunction(e.rows[r][c]) * x[c];
      x[pc] = acc / RationalFunction(e.rows[r][pc]);
    }
    return x;
  };

  std::vector<RationalFunction> zeros(free_cols.size());
  if (with_rhs) sol.particular = solve_with(zeros, true);
  else sol.particular.assign(ncols, RationalFunction(0));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    auto vals = zeros;
    vals[k] = RationalFunction(1);
    sol.kernel.push_back(solve_with(vals, false));
  }
  return sol;
}

}  // namespace

std::vector<std::vector<RationalFunction>> nullspace(const FieldMatrix& m) {
  Echelon e = bareiss(m, nullptr);
  return back_substitute(e, m.cols(), false).kernel;
}

LinearSolution solve(const FieldMatrix& m, const std::vector<RationalFunction>& b) {
  if (static_cast<int>(b.size()) != m.rows()) throw std::domain_error("rhs length mismatch");
  Echelon e = bareiss(m, &b);
  return back_substitute(e, m.cols(), true);
}

std::vector<RationalFunction> solve_unique(const FieldMatrix& m,
                                           const std::vector<RationalFunction>& b) {
  LinearSolution s = solve(m, b);
  if (!s.consistent) throw std::domain_error("inconsistent linear system");
  if (!s.kernel.empty()) throw std::domain_error("singular system: solution not unique");
  return s.particular;
}

FieldMatrix inverse(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  int n = m.rows();
  FieldMatrix inv(n, n);
  for (int j = 0; j < n; ++j) {
    std::vector<RationalFunction> ej(n);
    ej[j] = RationalFunction(1);
    auto col = solve_unique(m, ej);
    for (int i = 0; i < n; ++i) inv.at(i, j) = col[i];
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Univariate polynomials over the field.
// ---------------------------------------------------------------------------

namespace {
void uni_trim(UniPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}
}  // namespace

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
  if (a.empty() || b.empty()) return {};
  UniPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  uni_trim(r);
  return r;
}

UniPoly uni_sub(const UniPoly& a, const UniPoly& b) {
  UniPoly r = a;
  if (b.size() > r.size()) r.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  uni_trim(r);
  return r;
}

UniPoly uni_pow(const UniPoly& a, int k) {
  UniPoly r{RationalFunction(1)};
  for (int i = 0; i < k; ++i) r = uni_mul(r, a);
  return r;
}

bool uni_equal(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  uni_trim(x);
  uni_trim(y);
  return x == y;
}

std::string uni_str(const UniPoly& p, const std::string& var) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
    if (p[d].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << p[d].str() << ")";
    if (d >= 1) os << "*" << var;
    if (d >= 2) os << "^" << d;
  }
  return first ? "0" : os.str();
}

UniPoly charpoly(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("charpoly of non-square matrix");
  int n = m.rows();
  // Faddeev-LeVerrier: M_k = A (M_{k-1} + c_{k-1} I), c_k = -tr(M_k)/k.
  std::vector<RationalFunction> c(n + 1);
  c[0] = RationalFunction(1);
  FieldMatrix mk = m;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      FieldMatrix t = mk;
      for (int i = 0; i < n; ++i) t.at(i, i) += c[k - 1];
      mk = m * t;
    }
    c[k] = -(mk.trace() / RationalFunction(k));
  }
  UniPoly p(n + 1);
  for (int k = 0; k <= n; ++k) p[n - k] = c[k];
  return p;
}

UniPoly minpoly(const FieldMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("minpoly of non-square matrix");
  int n = m.rows();
  int nn = n * n;
  auto vectorize = [&](const FieldMatrix& a) {
    std::vector<RationalFunction> v(nn);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) v[i * n + j] = a.at(i, j);
    return v;
  };
  std::vector<std::vector<RationalFunction>> powers;
  FieldMatrix p = FieldMatrix::identity(n);
  powers.push_back(vectorize(p));
  for (int d = 1; d <= n; ++d) {
    p = p * m;
    powers.push_back(vectorize(p));
    // Is A^d a combination of lower powers?
    FieldMatrix sys(nn, d);
    for (int r = 0; r < nn; ++r)
      for (int c = 0; c < d; ++c) sys.at(r, c) = powers[c][r];
    LinearSolution s = solve(sys, powers[d]);
    if (s.consistent) {
      UniPoly mp(d + 1);
      mp[d] = RationalFunction(1);
      for (int c = 0; c < d; ++c) mp[c] = -s.particular[c];
      return mp;
    }
  }
  throw std::logic_error("minimal polynomial search exceeded matrix dimension");
}

}  // namespace qyoung
