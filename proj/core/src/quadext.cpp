#include "qyoung/quadext.hpp"

namespace qyoung {

QuadRelationPtr QuadExt::join(const QuadRelationPtr& x, const QuadRelationPtr& y) {
  if (!x) return y;
  if (!y) return x;
  if (x != y && !(*x == *y))
    throw std::domain_error("mixing elements of different quadratic extensions");
  return x;
}

QuadExt QuadExt::operator+(const QuadExt& o) const {
  return QuadExt(a_ + o.a_, b_ + o.b_, join(rel_, o.rel_));
}

QuadExt QuadExt::operator*(const QuadExt& o) const {
  QuadRelationPtr rel = join(rel_, o.rel_);
  RationalFunction a = a_ * o.a_;
  RationalFunction b = a_ * o.b_ + b_ * o.a_;
  RationalFunction bb = b_ * o.b_;
  if (!bb.is_zero()) {
    // z^2 = -(c1 z + c0)/c2
    const auto& r = *rel;
    a -= bb * r.c0 / r.c2;
    b -= bb * r.c1 / r.c2;
  }
  return QuadExt(std::move(a), std::move(b), std::move(rel));
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (b_.is_zero()) return QuadExt(a_.inverse(), RationalFunction(0), rel_);
  // (a + b z)(x + y z) = 1. Conjugate trick: multiply by a + b*zbar where
  // zbar = -c1/c2 - z; norm = (a + b z)(a + b zbar) lies in the base field.
  const auto& r = *rel_;
  RationalFunction tr = -r.c1 / r.c2;   // z + zbar
  RationalFunction nm = r.c0 / r.c2;    // z * zbar
  RationalFunction norm = a_ * a_ + a_ * b_ * tr + b_ * b_ * nm;
  if (norm.is_zero()) throw std::domain_error("element is not invertible (zero norm)");
  RationalFunction conj_a = a_ + b_ * tr;
  return QuadExt(conj_a / norm, -b_ / norm, rel_);
}

std::string QuadExt::str() const {
  std::string name = rel_ ? rel_->root_name : "z";
  if (b_.is_zero()) return a_.str();
  std::string out;
  if (!a_.is_zero()) out = a_.str() + " + ";
  out += "(" + b_.str() + ")*" + name;
  return out;
}

}  // namespace qyoung
