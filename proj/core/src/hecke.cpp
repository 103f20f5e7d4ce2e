#include "qyoung/hecke.hpp"

#include <algorithm>
#include <sstream>

namespace qyoung {

Multivector hecke_generator(int i, int n) {
  if (i < 1 || i > n - 1) throw std::out_of_range("generator index out of range");
  int dim = 2 * n;
  return wedge(Multivector::generator(dim, i), Multivector::generator(dim, i + n));
}

std::vector<RelationCheck> check_relations(int n) {
  if (n < 2 || n > 4) throw std::out_of_range("relation check supports 2 <= n <= 4");
  BilinearForm B = BilinearForm::standard(n);
  int dim = 2 * n;
  RationalFunction q = rf_var(VQ);
  std::vector<Multivector> b;
  for (int i = 1; i <= n - 1; ++i) b.push_back(hecke_generator(i, n));
  auto mul = [&](const Multivector& x, const Multivector& y) { return cmul(x, y, B); };
  Multivector one = Multivector::scalar(dim, RationalFunction(1));

  std::vector<RelationCheck> out;
  for (int i = 1; i <= n - 1; ++i) {
    Multivector res = mul(b[i - 1], b[i - 1]) -
                      (b[i - 1].scaled(RationalFunction(1) - q) + one.scaled(q));
    out.push_back({"b" + std::to_string(i) + "^2 = (1-q)*b" + std::to_string(i) + " + q",
                   res, res.is_zero()});
  }
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) {
      Multivector res = mul(b[i - 1], b[j - 1]) - mul(b[j - 1], b[i - 1]);
      out.push_back({"b" + std::to_string(i) + "*b" + std::to_string(j) + " = b" +
                         std::to_string(j) + "*b" + std::to_string(i),
                     res, res.is_zero()});
    }
  for (int i = 1; i <= n - 2; ++i) {
    Multivector res = mul(mul(b[i - 1], b[i]), b[i - 1]) - mul(mul(b[i], b[i - 1]), b[i]);
    out.push_back({"b" + std::to_string(i) + "*b" + std::to_string(i + 1) + "*b" +
                       std::to_string(i) + " = b" + std::to_string(i + 1) + "*b" +
                       std::to_string(i) + "*b" + std::to_string(i + 1),
                   res, res.is_zero()});
  }
  return out;
}

namespace {
constexpr int kEmbeddingN = 4;  // everything lives in the 8-dimensional algebra
}

HeckeAlgebra::HeckeAlgebra(int n)
    : n_(n), B_(BilinearForm::standard(kEmbeddingN)), coord_matrix_(0, 0) {
  if (n != 2 && n != 3) throw std::out_of_range("Hecke word basis built for n = 2 or 3");
  if (n == 2)
    words_ = {{}, {1}};
  else
    words_ = {{}, {1}, {2}, {1, 2}, {2, 1}, {1, 2, 1}};

  int dim = 2 * kEmbeddingN;
  for (int i = 1; i <= n - 1; ++i)
    gens_.push_back(wedge(Multivector::generator(dim, i),
                          Multivector::generator(dim, i + kEmbeddingN)));

  for (const auto& w : words_) {
    Multivector m = Multivector::scalar(dim, RationalFunction(1));
    for (int g : w) m = cmul(m, gens_[g - 1], B_);
    basis_.push_back(m);
  }

  // Blade support of the span, in ascending mask order.
  for (const auto& m : basis_)
    for (const auto& [b, c] : m.terms())
      if (std::find(span_blades_.begin(), span_blades_.end(), b) == span_blades_.end())
        span_blades_.push_back(b);
  std::sort(span_blades_.begin(), span_blades_.end());
  if (span_blades_.size() != words_.size())
    throw std::logic_error("word basis span has unexpected blade support");

  coord_matrix_ = FieldMatrix(size(), size());
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < size(); ++i)
      coord_matrix_.at(i, j) = basis_[j].coeff(span_blades_[i]);
  if (rank(coord_matrix_) != size())
    throw std::logic_error("word basis is not linearly independent");

  mult_.assign(size(), std::vector<HeckeElement>(size()));
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      mult_[i][j] = to_coords(cmul(basis_[i], basis_[j], B_));
  for (int i = 0; i < size(); ++i) rev_.push_back(to_coords(reverse(basis_[i], B_)));
}

HeckeElement HeckeAlgebra::one() const {
  HeckeElement x(size());
  x[0] = RationalFunction(1);
  return x;
}

HeckeElement HeckeAlgebra::word(const std::vector<int>& w) const {
  auto it = std::find(words_.begin(), words_.end(), w);
  if (it == words_.end()) throw std::out_of_range("not a word basis element");
  HeckeElement x(size());
  x[it - words_.begin()] = RationalFunction(1);
  return x;
}

Multivector HeckeAlgebra::to_multivector(const HeckeElement& x) const {
  if (static_cast<int>(x.size()) != size()) throw std::domain_error("coordinate length mismatch");
  Multivector m(2 * kEmbeddingN);
  for (int i = 0; i < size(); ++i) m += basis_[i].scaled(x[i]);
  return m;
}

HeckeElement HeckeAlgebra::to_coords(const Multivector& x) const {
  // Any blade outside the span support makes membership impossible.
  std::vector<RationalFunction> rhs(size());
  Multivector residual(x.dim());
  for (const auto& [b, c] : x.terms()) {
    auto it = std::lower_bound(span_blades_.begin(), span_blades_.end(), b);
    if (it != span_blades_.end() && *it == b)
      rhs[it - span_blades_.begin()] = c;
    else
      residual += Multivector::blade(x.dim(), b, c);
  }
  if (!residual.is_zero()) throw NotInSubalgebra(residual.str());
  return solve_unique(coord_matrix_, rhs);
}

HeckeElement HeckeAlgebra::mul(const HeckeElement& x, const HeckeElement& y) const {
  return mul_generic<RationalFunction>(x, y);
}

HeckeElement HeckeAlgebra::reversed(const HeckeElement& x) const {
  return reversed_generic<RationalFunction>(x);
}

HeckeElement HeckeAlgebra::alpha(const HeckeElement& x) const {
  RationalFunction minus_inv_q = RationalFunction(-1) / rf_var(VQ);
  HeckeElement r(size());
  for (int i = 0; i < size(); ++i) {
    if (x[i].is_zero()) continue;
    RationalFunction c = x[i] * minus_inv_q.pow(static_cast<int>(words_[i].size()));
    for (int k = 0; k < size(); ++k) r[k] += c * rev_[i][k];
  }
  return r;
}

HeckeElement HeckeAlgebra::kw_transform(const HeckeElement& x) const {
  HeckeElement r = x;
  for (int i = 0; i < size(); ++i)
    if (words_[i].size() % 2 != 0) r[i] = -r[i];
  return r;
}

HeckeElement HeckeAlgebra::limit_q1(const HeckeElement& x) const {
  Bindings b;
  b.set(VQ, Rational(1));
  return substitute(x, b);
}

HeckeElement HeckeAlgebra::substitute(const HeckeElement& x, const Bindings& b) const {
  HeckeElement r(size());
  for (int i = 0; i < size(); ++i) r[i] = x[i].substitute(b);
  return r;
}

HeckeElement HeckeAlgebra::inverse(const HeckeElement& x) const {
  FieldMatrix lm = left_mult_matrix(x);
  HeckeElement y;
  try {
    y = solve_unique(lm, one());
  } catch (const std::domain_error&) {
    throw std::domain_error("Hecke element is not invertible");
  }
  if (mul(y, x) != one()) throw std::domain_error("Hecke element has no two-sided inverse");
  return y;
}

bool HeckeAlgebra::gamma_q_member(const HeckeElement& x) const {
  return mul(alpha(x), x) == one();
}

bool HeckeAlgebra::is_zero(const HeckeElement& x) {
  return std::all_of(x.begin(), x.end(), [](const RationalFunction& c) { return c.is_zero(); });
}

HeckeElement HeckeAlgebra::add(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement r(size());
  for (int i = 0; i < size(); ++i) r[i] = x[i] + y[i];
  return r;
}

HeckeElement HeckeAlgebra::sub(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement r(size());
  for (int i = 0; i < size(); ++i) r[i] = x[i] - y[i];
  return r;
}

HeckeElement HeckeAlgebra::scale(const HeckeElement& x, const RationalFunction& c) const {
  HeckeElement r(size());
  for (int i = 0; i < size(); ++i) r[i] = x[i] * c;
  return r;
}

FieldMatrix HeckeAlgebra::left_mult_matrix(const HeckeElement& x) const {
  FieldMatrix m(size(), size());
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < size(); ++i) {
      RationalFunction acc;
      for (int k = 0; k < size(); ++k)
        if (!x[k].is_zero()) acc += x[k] * mult_[k][j][i];
      m.at(i, j) = acc;
    }
  return m;
}

FieldMatrix HeckeAlgebra::right_mult_matrix(const HeckeElement& x) const {
  FieldMatrix m(size(), size());
  for (int j = 0; j < size(); ++j)
    for (int i = 0; i < size(); ++i) {
      RationalFunction acc;
      for (int k = 0; k < size(); ++k)
        if (!x[k].is_zero()) acc += x[k] * mult_[j][k][i];
      m.at(i, j) = acc;
    }
  return m;
}

std::string HeckeAlgebra::str(const HeckeElement& x) const {
  static const char* names2[] = {"Id", "b1"};
  static const char* names3[] = {"Id", "b1", "b2", "b12", "b21", "b121"};
  const char** names = size() == 2 ? names2 : names3;
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < size(); ++i) {
    if (x[i].is_zero()) continue;
    bool neg = x[i].num().leading().second < 0;
    RationalFunction a = neg ? -x[i] : x[i];
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (a.is_one()) {
      os << names[i];
    } else {
      bool parens = a.is_polynomial() && a.num().size() > 1;
      if (parens)
        os << "(" << a.str() << ")";
      else
        os << a.str();
      os << "*" << names[i];
    }
  }
  if (first) return "0";
  return os.str();
}

}  // namespace qyoung
