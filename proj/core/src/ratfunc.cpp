#include "qyoung/ratfunc.hpp"

namespace qyoung {

RationalFunction::RationalFunction(const MultiPoly& num, const MultiPoly& den) {
  if (den.is_zero()) throw std::domain_error("malformed rational function: zero denominator");
  if (num.is_zero()) {
    num_ = MultiPoly{};
    den_ = MultiPoly::constant(1);
    return;
  }
  MultiPoly n = num, d = den;
  if (!d.is_constant()) {
    MultiPoly g = gcd(n, d);
    if (!g.is_one()) {
      n = n.divide_exact(g);
      d = d.divide_exact(g);
    }
  }
  Rational c = d.signed_content();
  num_ = n.scaled(1 / c);
  den_ = d.scaled(1 / c);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
  MultiPoly g = gcd(den_, o.den_);
  if (g.is_one()) return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  MultiPoly db = den_.divide_exact(g), dd = o.den_.divide_exact(g);
  return RationalFunction(num_ * dd + o.num_ * db, db * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return *this + (-o);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  if (is_zero() || o.is_zero()) return RationalFunction();
  MultiPoly g1 = gcd(num_, o.den_), g2 = gcd(o.num_, den_);
  MultiPoly n1 = g1.is_one() ? num_ : num_.divide_exact(g1);
  MultiPoly d2 = g1.is_one() ? o.den_ : o.den_.divide_exact(g1);
  MultiPoly n2 = g2.is_one() ? o.num_ : o.num_.divide_exact(g2);
  MultiPoly d1 = g2.is_one() ? den_ : den_.divide_exact(g2);
  return RationalFunction(n1 * n2, d1 * d2);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  return *this * o.inverse();
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction r(1), base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    if (k >>= 1) base *= base;
  }
  return r;
}

RationalFunction pow(const RationalFunction& x, int k) { return x.pow(k); }

RationalFunction RationalFunction::substitute(const Bindings& b) const {
  MultiPoly d = den_.substitute(b.raw());
  if (d.is_zero()) throw PoleError(den_.str());
  MultiPoly n = num_.substitute(b.raw());
  return RationalFunction(n, d);
}

std::optional<Rational> RationalFunction::evaluate(const Bindings& b) const {
  RationalFunction s = substitute(b);
  if (!s.is_constant()) return std::nullopt;
  return s.constant_value();
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  std::string den_str = den_.str();
  bool den_simple = den_.is_monomial() && den_.leading().second == 1;
  std::string out = "(" + num_.str() + ")/";
  if (den_simple && den_.leading().first.total_degree() <= 1)
    out += den_str;
  else
    out += "(" + den_str + ")";
  return out;
}

}  // namespace qyoung
