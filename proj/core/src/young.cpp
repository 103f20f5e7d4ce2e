#include "qyoung/young.hpp"

#include <stdexcept>

#include "qyoung/linalg.hpp"
#include "qyoung/parser.hpp"

namespace qyoung {
namespace young {

namespace {

void require_n(const HeckeAlgebra& h, int n) {
  if (h.n() != n)
    throw std::invalid_argument("operator needs the n = " + std::to_string(n) + " word basis");
}

HeckeElement make(const HeckeAlgebra& h, std::initializer_list<const char*> coords) {
  if (static_cast<int>(coords.size()) != h.size())
    throw std::invalid_argument("coordinate count does not match the word basis");
  HeckeElement out;
  out.reserve(coords.size());
  for (const char* c : coords) out.push_back(parse_scalar(c));
  return out;
}

// Coordinates of r5 (kind = 5) or r6 (kind = 6) over any commutative ring S
// containing Q(q): the same rational formulas serve the symbolic extension
// element, the specialized base-field cross-check, and sampled evaluation.
template <class S>
std::vector<S> split_rep_coords(int kind, const S& K2, const S& K4, const S& z) {
  const S q{rf_var(VQ)};
  const S one{RationalFunction(1)};
  if (kind == 5) {
    const S d = K2 + K4 - q * K4 + z;
    const S num2 = z + K2 - q * K4 + K4 - q * q * K4 * K4 + q * K2 * K2 - q * q * K2 * K4 -
                   q * K4 * K4 + K2 * K2 + K4 * K2;
    return {one / (one + q),
            K2,
            -(num2 / (d * (one + q))),
            K4,
            -((q * z * K4 + q * K2 * K4 + q * z * K2 - z * K2) / (q * d)),
            (z * K2 + q * K4 * K4) / (q * (-d))};
  }
  if (kind == 6) {
    const S d = -K2 - K4 + q * K4 - z;
    const S num2 = q * q * K4 * K4 - q * K2 * K2 + q * q * K2 * K4 + q * K4 * K4 + z - q * K4 +
                   K2 + K4 - K2 * K2 - K4 * K2;
    return {q / (one + q),
            K2,
            -(num2 / (d * (one + q))),
            K4,
            (q * K2 * K4 + q * z * K4 + q * z * K2 - z * K2) / (d * q),
            (z * K2 + q * K4 * K4) / (q * d)};
  }
  throw std::invalid_argument("split representative kind must be 5 or 6");
}

}  // namespace

HeckeElement R12(const HeckeAlgebra& h) {
  require_n(h, 2);
  return make(h, {"q", "1"});
}

HeckeElement C12(const HeckeAlgebra& h) {
  require_n(h, 2);
  return make(h, {"1", "-1"});
}

HeckeElement Y2(const HeckeAlgebra& h) {
  require_n(h, 2);
  return make(h, {"q/(1+q)", "1/(1+q)"});
}

HeckeElement Y11(const HeckeAlgebra& h) {
  require_n(h, 2);
  return make(h, {"1/(1+q)", "-1/(1+q)"});
}

HeckeElement Y3(const HeckeAlgebra& h) {
  require_n(h, 3);
  return make(h, {"q^3/((1+q+q^2)*(1+q))", "q^2/((1+q+q^2)*(1+q))", "q^2/((1+q+q^2)*(1+q))",
                  "q/((1+q+q^2)*(1+q))", "q/((1+q+q^2)*(1+q))", "1/((1+q+q^2)*(1+q))"});
}

HeckeElement Y111(const HeckeAlgebra& h) {
  require_n(h, 3);
  return make(h, {"1/((1+q+q^2)*(1+q))", "-1/((1+q+q^2)*(1+q))", "-1/((1+q+q^2)*(1+q))",
                  "1/((1+q+q^2)*(1+q))", "1/((1+q+q^2)*(1+q))", "-1/((1+q+q^2)*(1+q))"});
}

HeckeElement kw_R13(const HeckeAlgebra& h) {
  require_n(h, 3);
  return make(h, {"q^3", "0", "0", "0", "0", "1"});
}

HeckeElement kw_C13(const HeckeAlgebra& h) {
  require_n(h, 3);
  return make(h, {"1", "0", "0", "0", "0", "-1"});
}

HeckeElement kw_discrepancy(const HeckeAlgebra& h) {
  require_n(h, 3);
  // Note the overall sign: expanding rev(q^3 + b121) with rev(b_i) = (1-q) - b_i
  // forces 2(q - q^2) on the identity component, not 2(q^2 - q).
  return make(h, {"2*(q-q^2)", "1-2*q+q^2", "1-2*q+q^2", "-1+q", "-1+q", "0"});
}

SplitFamily solve_reversion_split(const HeckeAlgebra& h) {
  require_n(h, 3);
  const int m = h.size();
  FieldMatrix M(m, m);
  for (int j = 0; j < m; ++j) {
    HeckeElement ej = h.zero();
    ej[j] = RationalFunction(1);
    HeckeElement col = h.add(ej, h.reversed(ej));  // (I + R) e_j
    for (int i = 0; i < m; ++i) M.at(i, j) = col[i];
  }
  std::vector<RationalFunction> rhs(m);
  rhs[0] = RationalFunction(1);
  LinearSolution sol = solve(M, rhs);
  if (!sol.consistent) throw std::logic_error("reversion split system is inconsistent");

  SplitFamily fam;
  fam.particular = sol.particular;
  fam.directions = sol.kernel;
  fam.general =
      make(h, {"(q*K2 - q*K6 + 1 + q*K3 - K2 + q^2*K6 - K3)/2", "K2", "K3", "K4",
               "-K4 + q*K6 - K6", "K6"});
  return fam;
}

QuadRelationPtr kappa_relation() {
  return std::make_shared<const QuadRelation>(
      parse_scalar("1+q"), parse_scalar("-q^2*K4 + K4 + q*K2 + 1 + K2"),
      parse_scalar("K4*K2 + K2^2 + K4 + K2 - q*K4 - q^2*K4^2 - q*K4^2 - q^2*K2*K4 + q*K2^2"),
      "kappa");
}

QuadRelationPtr alpha_root_relation() {
  return std::make_shared<const QuadRelation>(
      parse_scalar("1+q"), parse_scalar("-q^2*K4 + K4 + q*K2 - 1 + K2"),
      parse_scalar("K4*K2 + K2^2 - K4 - K2 + q*K4 - q^2*K4^2 - q*K4^2 - q^2*K2*K4 + q*K2^2"),
      "alpha");
}

HeckeElement representative(const HeckeAlgebra& h, int i) {
  require_n(h, 3);
  switch (i) {
    case 1:
      return make(h, {"1/(1+q)", "-K4", "q*K4", "K4", "-(q^3*K4 + q + K4 - 1)/(q*(1+q))",
                      "-(-K4 + q^2*K4 + 1)/(q*(1+q))"});
    case 2:
      return make(h, {"q/(1+q)", "-K4", "q*K4", "K4", "-(q^3*K4 - q + K4 + 1)/(q*(1+q))",
                      "-(-K4 + q^2*K4 - 1)/(q*(1+q))"});
    case 3:
      return make(h, {"1/(1+q)", "q*K4", "-K4", "K4", "-(q^3*K4 + q + K4 - 1)/(q*(1+q))",
                      "-(-K4 + q^2*K4 + 1)/(q*(1+q))"});
    case 4:
      return make(h, {"q/(1+q)", "q*K4", "-K4", "K4", "-(q^3*K4 - q + K4 + 1)/(q*(1+q))",
                      "-(-K4 + q^2*K4 - 1)/(q*(1+q))"});
    default:
      throw std::invalid_argument("base-field representatives are r1..r4");
  }
}

ExtElement representative_ext(const HeckeAlgebra& h, int i) {
  require_n(h, 3);
  if (i != 5 && i != 6) throw std::invalid_argument("extension representatives are r5 and r6");
  QuadRelationPtr rel = (i == 5) ? kappa_relation() : alpha_root_relation();
  return split_rep_coords<QuadExt>(i, QuadExt(rf_var(VK2)), QuadExt(rf_var(VK4)),
                                   QuadExt::root(rel));
}

HeckeElement representative_at(const HeckeAlgebra& h, int i, const RationalFunction& K2,
                               const RationalFunction& K4, const RationalFunction& root) {
  require_n(h, 3);
  if (i != 5 && i != 6) throw std::invalid_argument("specialized representatives are r5 and r6");
  const RationalFunction q = rf_var(VQ);
  const RationalFunction c2 = parse_scalar("1+q");
  RationalFunction c1q, c0q;  // quadratic coefficients at the given K2, K4
  if (i == 5) {
    c1q = -q * q * K4 + K4 + q * K2 + RationalFunction(1) + K2;
    c0q = K4 * K2 + K2 * K2 + K4 + K2 - q * K4 - q * q * K4 * K4 - q * K4 * K4 -
          q * q * K2 * K4 + q * K2 * K2;
  } else {
    c1q = -q * q * K4 + K4 + q * K2 - RationalFunction(1) + K2;
    c0q = K4 * K2 + K2 * K2 - K4 - K2 + q * K4 - q * q * K4 * K4 - q * K4 * K4 -
          q * q * K2 * K4 + q * K2 * K2;
  }
  if (!(c2 * root * root + c1q * root + c0q).is_zero())
    throw std::invalid_argument("supplied value is not a root of the split quadratic");
  return split_rep_coords<RationalFunction>(i, K2, K4, root);
}

HeckeElement f(const HeckeAlgebra& h, int i) {
  if (i < 1 || i > 3)
    throw std::invalid_argument("base-field members of the independent set are f1..f3");
  return representative(h, i);
}

HeckeElement Y21_132(const HeckeAlgebra& h) {
  require_n(h, 3);
  return h.sub(f(h, 1), Y111(h));
}

HeckeElement Y21_123(const HeckeAlgebra& h) { return h.reversed(Y21_132(h)); }

HeckeElement Y21_132_closed(const HeckeAlgebra& h) {
  require_n(h, 3);
  return make(
      h,
      {"q/(q+1+q^2)", "-(q^3*K4 + 2*q^2*K4 + 2*q*K4 - 1 + K4)/(q^3 + 2*q^2 + 2*q + 1)",
       "(K4*q^4 + 2*q^3*K4 + 2*q^2*K4 + q*K4 + 1)/(q^3 + 2*q^2 + 2*q + 1)",
       "(q^3*K4 + 2*q^2*K4 + 2*q*K4 - 1 + K4)/(q^3 + 2*q^2 + 2*q + 1)",
       "-(K4*q^5 + K4*q^4 + q^3*K4 + q^3 + q^2*K4 + q*K4 + q + K4 - 1)/((q^3 + 2*q^2 + 2*q + 1)*q)",
       "-(K4*q^4 + q^3*K4 + q^2 - q*K4 + 1 - K4)/((q + 1 + q^2)*q*(1+q))"});
}

HeckeElement Y21_123_closed(const HeckeAlgebra& h) {
  require_n(h, 3);
  return make(
      h,
      {"q/(q+1+q^2)", "(q^3*K4 - q^2 + 2*q^2*K4 + 2*q*K4 + K4)/((1+q)*(q + 1 + q^2))",
       "-q*(q^3*K4 + 2*q^2*K4 + 2*q*K4 + q + K4)/((1+q)*(q + 1 + q^2))",
       "-(q^3*K4 + 2*q^2*K4 + 2*q*K4 + q + K4)/(q^3 + 2*q^2 + 2*q + 1)",
       "(K4*q^5 + K4*q^4 + q^3*K4 + q^3 - q^2 + q^2*K4 + q*K4 - 1 + K4)/(q*(q^3 + 2*q^2 + 2*q + 1))",
       "(K4*q^4 + q^3*K4 + q^2 - q*K4 + 1 - K4)/((q + 1 + q^2)*q*(1+q))"});
}

HeckeElement R13(const HeckeAlgebra& h) {
  require_n(h, 3);
  return make(
      h, {"q/(1+q)", "-(-q^2 + q^2*P3 + P3*q - 1 + P3)/((q + 1 + q^2)*q)", "P3",
          "(q^2*P3 + P3*q + P3 - 1)/(q*(1 + q + q^2))",
          "-(q^5*P3 + q^4*P3 + q^3*P3 + q^2*P3 - q^2 + P3*q - 1 + P3)/((1+q)*q^2*(1 + q + q^2))",
          "-(q^4*P3 + q^3*P3 - P3*q + 1 - P3)/((1+q)*q^2*(1 + q + q^2))"});
}

HeckeElement C13(const HeckeAlgebra& h) { return h.reversed(R13(h)); }

HeckeElement T_intertwiner(const HeckeAlgebra& h) {
  require_n(h, 3);
  static const char* den =
      "q*(2*K4 - q^2 - q - q^3 + 2*q^4*K4 + 8*K4*q^2 + 6*K4*q + 6*K4*q^3 - 1)";
  HeckeElement t = make(h, {"0", "0", "-1/(1+q)", "-1/(q*(1+q))", "1/(1+q)", "1/(q*(1+q))"});
  t[0] = parse_scalar("1 - K4 - q^3 - K4*q + K4*q^3 + q^4*K4") / parse_scalar(den);
  t[1] = parse_scalar("2*(-1 - q - q^2 + K4 + 2*K4*q + K4*q^3 + 2*K4*q^2)") / parse_scalar(den);
  return t;
}

RationalFunction T_excluded_K4() {
  return parse_scalar("(q^2 + 1)/(2*(q^3 + 2*q^2 + 2*q + 1))");
}

ExtElement to_ext(const HeckeElement& x) {
  ExtElement out;
  out.reserve(x.size());
  for (const auto& c : x) out.emplace_back(c);
  return out;
}

bool ext_is_zero(const ExtElement& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}

ExtElement ext_sub(const ExtElement& x, const ExtElement& y) {
  ExtElement out;
  out.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out.push_back(x[i] - y[i]);
  return out;
}

}  // namespace young
}  // namespace qyoung
