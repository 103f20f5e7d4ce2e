#ifndef QYOUNG_MULTIPOLY_HPP
#define QYOUNG_MULTIPOLY_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qyoung {

/// Exact rational scalar (arbitrary precision, always canonical).
using Rational = mpq_class;

/// The fixed variable set carried by every coefficient in the system.
inline constexpr int kNumVars = 8;
enum Var : int { VQ = 0, VK1, VK2, VK3, VK4, VK5, VK6, VP3 };
extern const std::array<const char*, kNumVars> kVarNames;

/// Exponent vector over {q, K1..K6, P3}. Ordered graded-lexicographically
/// with q most significant, then K1 < ... < K6 < P3.
struct Monomial {
  std::array<std::uint16_t, kNumVars> e{};

  int total_degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool is_unit() const { return total_degree() == 0; }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }
  Monomial operator*(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] + m.e[i]);
    return r;
  }
  /// Quotient; caller guarantees divisibility.
  Monomial operator/(const Monomial& m) const {
    Monomial r;
    for (int i = 0; i < kNumVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - m.e[i]);
    return r;
  }
  bool operator==(const Monomial& m) const { return e == m.e; }
};

/// Graded-lex comparison, q before K1 < ... < K6 < P3.
int cmp(const Monomial& a, const Monomial& b);
inline bool operator<(const Monomial& a, const Monomial& b) { return cmp(a, b) < 0; }

/// Sparse multivariate polynomial over Q with terms kept sorted descending
/// in the canonical monomial order; zero coefficients never stored.
class MultiPoly {
 public:
  using Term = std::pair<Monomial, Rational>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& c);
  static MultiPoly constant(long c) { return constant(Rational(c)); }
  static MultiPoly variable(Var v, int power = 1);
  static MultiPoly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || terms_.front().first.is_unit(); }
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  /// Leading term in the canonical order. Polynomial must be nonzero.
  const Term& leading() const { return terms_.front(); }
  /// Value as a rational; polynomial must be constant.
  Rational constant_value() const;

  int degree(Var v) const;
  int total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  MultiPoly operator-() const;
  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }

  MultiPoly scaled(const Rational& c) const;
  MultiPoly pow(int k) const;

  /// Exact division; throws std::domain_error if the quotient is not a polynomial.
  MultiPoly divide_exact(const MultiPoly& d) const;

  /// Substitute the bound variables by rational values; unbound variables remain.
  MultiPoly substitute(const std::array<std::pair<bool, Rational>, kNumVars>& bindings) const;

  /// Rational content: positive rational c such that (*this)/c has coprime
  /// integer coefficients; sign chosen so the primitive part has a positive
  /// leading coefficient. Zero for the zero polynomial.
  Rational signed_content() const;
  MultiPoly primitive_part() const;

  std::string str() const;

  /// Sorted term vector must already be canonical; used by arithmetic kernels.
  static MultiPoly from_sorted(std::vector<Term> terms);

 private:
  std::vector<Term> terms_;
};

/// GCD in Q[q,K1..K6,P3], returned as a primitive integer polynomial with a
/// positive leading coefficient (1 for coprime inputs, 0 only if both are 0).
MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace qyoung

#endif
