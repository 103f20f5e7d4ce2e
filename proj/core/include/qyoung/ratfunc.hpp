#ifndef QYOUNG_RATFUNC_HPP
#define QYOUNG_RATFUNC_HPP

#include <optional>
#include <string>

#include "qyoung/multipoly.hpp"

namespace qyoung {

/// Partial assignment of rational values to variables.
class Bindings {
 public:
  Bindings& set(Var v, const Rational& value) {
    map_[v] = {true, value};
    return *this;
  }
  bool bound(Var v) const { return map_[v].first; }
  const Rational& value(Var v) const { return map_[v].second; }
  const std::array<std::pair<bool, Rational>, kNumVars>& raw() const { return map_; }

 private:
  std::array<std::pair<bool, Rational>, kNumVars> map_{};
};

/// Raised when a substitution hits a vanishing denominator.
struct PoleError : std::domain_error {
  explicit PoleError(const std::string& factor)
      : std::domain_error("denominator vanishes at binding: " + factor) {}
};

/// Element of Q(q, K1..K6, P3), always held in canonical form:
/// gcd(num, den) is a unit and den is a primitive integer polynomial with a
/// positive leading coefficient.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(MultiPoly::constant(1)) {}
  RationalFunction(const MultiPoly& num, const MultiPoly& den);
  /*implicit*/ RationalFunction(const MultiPoly& p)
      : num_(p), den_(MultiPoly::constant(1)) {}
  /*implicit*/ RationalFunction(const Rational& c)
      : num_(MultiPoly::constant(c)), den_(MultiPoly::constant(1)) {}
  /*implicit*/ RationalFunction(long c) : RationalFunction(Rational(c)) {}

  static RationalFunction variable(Var v) { return MultiPoly::variable(v); }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }
  Rational constant_value() const { return num_.constant_value(); }

  RationalFunction operator-() const;
  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator-(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;
  RationalFunction operator/(const RationalFunction& o) const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }
  bool operator==(const RationalFunction& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

  RationalFunction inverse() const;
  RationalFunction pow(int k) const;

  /// Substitution; throws PoleError naming the vanished denominator.
  RationalFunction substitute(const Bindings& b) const;

  /// Full evaluation; std::nullopt if any variable is left unbound.
  std::optional<Rational> evaluate(const Bindings& b) const;

  std::string str() const;

 private:
  MultiPoly num_, den_;
};

inline RationalFunction rf_var(Var v) { return RationalFunction::variable(v); }
RationalFunction pow(const RationalFunction& x, int k);

}  // namespace qyoung

#endif
