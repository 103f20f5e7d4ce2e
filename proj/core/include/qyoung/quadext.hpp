#ifndef QYOUNG_QUADEXT_HPP
#define QYOUNG_QUADEXT_HPP

#include <memory>
#include <string>

#include "qyoung/ratfunc.hpp"

namespace qyoung {

/// Minimal relation c2*z^2 + c1*z + c0 = 0 of an adjoined quadratic root z.
struct QuadRelation {
  RationalFunction c2, c1, c0;
  std::string root_name = "z";

  QuadRelation(RationalFunction c2_, RationalFunction c1_, RationalFunction c0_,
               std::string name = "z")
      : c2(std::move(c2_)), c1(std::move(c1_)), c0(std::move(c0_)), root_name(std::move(name)) {
    if (c2.is_zero()) throw std::domain_error("quadratic relation needs c2 != 0");
  }
  bool operator==(const QuadRelation& o) const {
    return c2 == o.c2 && c1 == o.c1 && c0 == o.c0;
  }
};

using QuadRelationPtr = std::shared_ptr<const QuadRelation>;

/// Element a + b*z of the quadratic extension of Q(q,K1..K6,P3) by a root z.
/// A null relation marks a base-field element; arithmetic adopts the relation
/// of the other operand and rejects mixing two distinct relations.
class QuadExt {
 public:
  QuadExt() = default;
  /*implicit*/ QuadExt(RationalFunction a) : a_(std::move(a)) {}
  /*implicit*/ QuadExt(long c) : a_(RationalFunction(c)) {}
  QuadExt(RationalFunction a, RationalFunction b, QuadRelationPtr rel)
      : a_(std::move(a)), b_(std::move(b)), rel_(std::move(rel)) {
    if (!rel_ && !b_.is_zero()) throw std::domain_error("root term without a relation");
  }

  static QuadExt root(QuadRelationPtr rel) {
    return QuadExt(RationalFunction(0), RationalFunction(1), std::move(rel));
  }

  const RationalFunction& base() const { return a_; }
  const RationalFunction& root_coeff() const { return b_; }
  const QuadRelationPtr& relation() const { return rel_; }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool in_base_field() const { return b_.is_zero(); }

  QuadExt operator-() const { return QuadExt(-a_, -b_, rel_); }
  QuadExt operator+(const QuadExt& o) const;
  QuadExt operator-(const QuadExt& o) const { return *this + (-o); }
  QuadExt operator*(const QuadExt& o) const;
  QuadExt operator/(const QuadExt& o) const { return *this * o.inverse(); }
  QuadExt& operator+=(const QuadExt& o) { return *this = *this + o; }
  QuadExt& operator-=(const QuadExt& o) { return *this = *this - o; }
  QuadExt& operator*=(const QuadExt& o) { return *this = *this * o; }
  bool operator==(const QuadExt& o) const { return a_ == o.a_ && b_ == o.b_; }

  /// Field inverse; throws for zero or a norm-zero element.
  QuadExt inverse() const;

  std::string str() const;

 private:
  static QuadRelationPtr join(const QuadRelationPtr& x, const QuadRelationPtr& y);

  RationalFunction a_, b_;
  QuadRelationPtr rel_;
};

}  // namespace qyoung

#endif
