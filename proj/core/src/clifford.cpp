#include "qyoung/clifford.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qyoung {

BilinearForm::BilinearForm(int n, std::vector<std::vector<RationalFunction>> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n_ < 1) throw std::domain_error("bilinear form needs n >= 1");
  if (entries_.size() != static_cast<std::size_t>(2 * n_))
    throw std::domain_error("bilinear form dimension mismatch");
  for (const auto& row : entries_)
    if (row.size() != static_cast<std::size_t>(2 * n_))
      throw std::domain_error("bilinear form dimension mismatch");
}

BilinearForm BilinearForm::standard(int n) {
  if (n < 1) throw std::domain_error("bilinear form needs n >= 1");
  RationalFunction q = rf_var(VQ);
  RationalFunction one(1), minus_one(-1);
  RationalFunction minus_one_q = -(RationalFunction(1) + q);
  std::vector<std::vector<RationalFunction>> m(2 * n, std::vector<RationalFunction>(2 * n));
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j) {
      RationalFunction v;
      if ((i <= n && j <= n) || (i > n && j > n))
        v = RationalFunction(0);
      else if (i == j - n || i - 1 - n == j)
        v = q;
      else if (i + 1 == j - n || i == j + 1 - n)
        v = minus_one_q;
      else if (std::abs(i - j - n) >= 2 && i > n)
        v = minus_one;
      else
        v = one;
      m[i - 1][j - 1] = v;
    }
  return BilinearForm(n, std::move(m));
}

Multivector Multivector::scalar(int dim, const RationalFunction& c) {
  Multivector r(dim);
  if (!c.is_zero()) r.terms_.push_back({0, c});
  return r;
}

Multivector Multivector::generator(int dim, int i) {
  if (i < 1 || i > dim) throw std::out_of_range("generator index out of range");
  Multivector r(dim);
  r.terms_.push_back({Blade(1u << (i - 1)), RationalFunction(1)});
  return r;
}

Multivector Multivector::blade(int dim, Blade b, const RationalFunction& c) {
  if (b >= (1u << dim)) throw std::out_of_range("blade outside algebra");
  Multivector r(dim);
  if (!c.is_zero()) r.terms_.push_back({b, c});
  return r;
}

Multivector Multivector::from_sorted(int dim, std::vector<Term> terms) {
  Multivector r(dim);
  r.terms_ = std::move(terms);
  return r;
}

RationalFunction Multivector::coeff(Blade b) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), b,
                             [](const Term& t, Blade key) { return t.first < key; });
  if (it != terms_.end() && it->first == b) return it->second;
  return RationalFunction(0);
}

int Multivector::max_grade() const {
  int g = 0;
  for (const auto& [b, c] : terms_) g = std::max(g, blade_grade(b));
  return g;
}

bool Multivector::is_even() const {
  for (const auto& [b, c] : terms_)
    if (blade_grade(b) % 2 != 0) return false;
  return true;
}

Multivector Multivector::operator-() const {
  Multivector r = *this;
  for (auto& [b, c] : r.terms_) c = -c;
  return r;
}

namespace {
void check_dim(const Multivector& x, const Multivector& y) {
  if (x.dim() != y.dim()) throw std::domain_error("multivector algebra dimension mismatch");
}
}  // namespace

Multivector Multivector::operator+(const Multivector& o) const {
  check_dim(*this, o);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first < o.terms_[j].first) {
      out.push_back(terms_[i++]);
    } else if (terms_[i].first > o.terms_[j].first) {
      out.push_back(o.terms_[j++]);
    } else {
      RationalFunction s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) out.push_back({terms_[i].first, s});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return from_sorted(dim_, std::move(out));
}

Multivector Multivector::operator-(const Multivector& o) const { return *this + (-o); }

Multivector Multivector::scaled(const RationalFunction& c) const {
  if (c.is_zero()) return Multivector(dim_);
  Multivector r = *this;
  for (auto& [b, x] : r.terms_) x *= c;
  return r;
}

Multivector Multivector::substitute(const Bindings& b) const {
  Multivector r(dim_);
  for (const auto& [bl, c] : terms_) {
    RationalFunction s = c.substitute(b);
    if (!s.is_zero()) r.terms_.push_back({bl, s});
  }
  return r;
}

// --- products ---------------------------------------------------------------

namespace {

// Sorting the concatenation (bx generators, then by generators) into
// ascending order costs one transposition per inverted cross pair.
int wedge_sign(Blade bx, Blade by) {
  int inversions = 0;
  Blade rest = bx;
  while (rest) {
    int i = __builtin_ctz(rest) + 1;
    rest &= rest - 1;
    inversions += __builtin_popcount(by & ((1u << (i - 1)) - 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

}  // namespace

Multivector wedge(const Multivector& x, const Multivector& y) {
  check_dim(x, y);
  std::map<Blade, RationalFunction> acc;
  for (const auto& [bx, cx] : x.terms())
    for (const auto& [by, cy] : y.terms()) {
      if (bx & by) continue;  // repeated generator
      RationalFunction v = cx * cy;
      if (wedge_sign(bx, by) < 0) v = -v;
      auto [it, inserted] = acc.try_emplace(bx | by, v);
      if (!inserted) it->second += v;
    }
  std::vector<Multivector::Term> out;
  for (auto& [b, c] : acc)
    if (!c.is_zero()) out.push_back({b, c});
  return Multivector::from_sorted(x.dim(), std::move(out));
}

Multivector contract_left(const Multivector& v, const Multivector& y, const BilinearForm& B) {
  check_dim(v, y);
  std::map<Blade, RationalFunction> acc;
  for (const auto& [bv, cv] : v.terms()) {
    if (blade_grade(bv) != 1) throw std::domain_error("left contraction needs a 1-vector");
    int i = __builtin_ctz(bv) + 1;
    for (const auto& [by, cy] : y.terms()) {
      Blade rest = by;
      int m = 1;
      while (rest) {
        int j = __builtin_ctz(rest) + 1;
        rest &= rest - 1;
        const RationalFunction& bij = B.at(i, j);
        if (!bij.is_zero()) {
          RationalFunction t = cv * cy * bij;
          if (m % 2 == 0) t = -t;
          Blade nb = by & ~(1u << (j - 1));
          auto [it, inserted] = acc.try_emplace(nb, t);
          if (!inserted) it->second += t;
        }
        ++m;
      }
    }
  }
  std::vector<Multivector::Term> out;
  for (auto& [b, c] : acc)
    if (!c.is_zero()) out.push_back({b, c});
  return Multivector::from_sorted(y.dim(), std::move(out));
}

namespace {

// e_i * y = e_i ^ y + e_i _| y
Multivector vec_mul(int i, const Multivector& y, const BilinearForm& B) {
  Multivector ei = Multivector::generator(y.dim(), i);
  return wedge(ei, y) + contract_left(ei, y, B);
}

// e_I * y, peeling the lowest generator of I.
Multivector blade_mul(Blade I, const Multivector& y, const BilinearForm& B) {
  if (I == 0) return y;
  int i1 = __builtin_ctz(I) + 1;
  Blade rest = I & ~(1u << (i1 - 1));
  Multivector main = vec_mul(i1, blade_mul(rest, y, B), B);
  if (rest == 0) return main;
  Multivector corr = contract_left(Multivector::generator(y.dim(), i1),
                                   Multivector::blade(y.dim(), rest, RationalFunction(1)), B);
  return main - cmul(corr, y, B);
}

}  // namespace

Multivector cmul(const Multivector& x, const Multivector& y, const BilinearForm& B) {
  check_dim(x, y);
  if (B.dim() != x.dim()) throw std::domain_error("bilinear form dimension mismatch");
  Multivector acc(x.dim());
  for (const auto& [bx, cx] : x.terms())
    acc += blade_mul(bx, y, B).scaled(cx);
  return acc;
}

namespace {

Multivector reverse_blade(Blade I, const BilinearForm& B, int dim) {
  if (blade_grade(I) <= 1) return Multivector::blade(dim, I, RationalFunction(1));
  int i1 = __builtin_ctz(I) + 1;
  Blade rest = I & ~(1u << (i1 - 1));
  Multivector ei = Multivector::generator(dim, i1);
  Multivector main = cmul(reverse_blade(rest, B, dim), ei, B);
  Multivector corr = reverse(contract_left(ei, Multivector::blade(dim, rest, RationalFunction(1)), B), B);
  return main - corr;
}

}  // namespace

Multivector reverse(const Multivector& x, const BilinearForm& B) {
  Multivector acc(x.dim());
  for (const auto& [b, c] : x.terms()) acc += reverse_blade(b, B, x.dim()).scaled(c);
  return acc;
}

Multivector grade_involute(const Multivector& x) {
  std::vector<Multivector::Term> out;
  out.reserve(x.terms().size());
  for (const auto& [b, c] : x.terms())
    out.push_back({b, blade_grade(b) % 2 == 0 ? c : -c});
  return Multivector::from_sorted(x.dim(), std::move(out));
}

Multivector grade_project(const Multivector& x, int k) {
  std::vector<Multivector::Term> out;
  for (const auto& [b, c] : x.terms())
    if (blade_grade(b) == k) out.push_back({b, c});
  return Multivector::from_sorted(x.dim(), std::move(out));
}

std::string Multivector::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    // Pull a leading minus out of the coefficient for readability.
    bool neg = c.num().leading().second < 0;
    RationalFunction a = neg ? -c : c;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string blade_str;
    Blade rest = b;
    while (rest) {
      int i = __builtin_ctz(rest) + 1;
      rest &= rest - 1;
      if (!blade_str.empty()) blade_str += "^";
      blade_str += "e" + std::to_string(i);
    }
    if (blade_str.empty()) blade_str = "Id";
    if (a.is_one()) {
      os << blade_str;
    } else {
      std::string cs = a.str();
      bool needs_parens = a.is_polynomial() && a.num().size() > 1;
      if (needs_parens)
        os << "(" << cs << ")";
      else
        os << cs;
      os << "*" << blade_str;
    }
  }
  return os.str();
}

}  // namespace qyoung
