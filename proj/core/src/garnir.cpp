#include "qyoung/garnir.hpp"

#include <stdexcept>

#include "qyoung/linalg.hpp"
#include "qyoung/parser.hpp"
#include "qyoung/young.hpp"

namespace qyoung {
namespace garnir {

namespace {

void require_n3(const HeckeAlgebra& h) {
  if (h.n() != 3) throw std::invalid_argument("Garnir constructions need the n = 3 word basis");
}

HeckeElement make(const HeckeAlgebra& h, std::initializer_list<const char*> coords) {
  HeckeElement out;
  out.reserve(coords.size());
  for (const char* c : coords) out.push_back(parse_scalar(c));
  if (static_cast<int>(out.size()) != h.size())
    throw std::invalid_argument("coordinate count does not match the word basis");
  return out;
}

}  // namespace

std::vector<HeckeElement> solve_right_annihilator(const HeckeAlgebra& h, const HeckeElement& A) {
  return nullspace(h.left_mult_matrix(A));
}

HeckeElement XX1(const HeckeAlgebra& h) {
  require_n3(h);
  return make(h, {"-K6*q + K2*q + K4", "K2",
                  "(K6*q^2 + K4*q^2 - K5*q - K4*q - K6*q + K2 + K4)/q", "K4", "K5", "K6"});
}

HeckeElement XX2(const HeckeAlgebra& h) {
  require_n3(h);
  return make(
      h,
      {"K1", "(K6*q^3 + K6*q^2 + q^2*K1 + q*K1 + 1)/(q^2*(1+q))",
       "(q^5*K6 - q^4*K5 - q^3 - q^3*K5 + q^2*K1 + K6*q^2 + q^2 + q*K1 - q + 1)/(q^3*(1+q))",
       "-1/(q*(1+q))", "K5", "K6"});
}

HeckeElement XX3(const HeckeAlgebra& h) {
  require_n3(h);
  return make(
      h,
      {"K1",
       "(q - 1 + K6*q + 2*K6*q^2 + 2*K6*q^3 + 2*q*K1 + 2*q^2*K1 + K1 + q^3*K1 + q^4*K6)"
       "/(q*(q^3 + 2*q^2 + 2*q + 1))",
       "(q^6*K6 + q^5*K6 - q^5*K5 + q^4*K6 - q^4 - 2*q^4*K5 + K6*q^3 + q^3*K1 + 2*q^3"
       " - 2*q^3*K5 - K5*q^2 + K6*q^2 + 2*q^2*K1 - 2*q^2 + 2*q*K1 + K6*q + 2*q + K1 - 1)"
       "/(q^2*(q^3 + 2*q^2 + 2*q + 1))",
       "-(q - 1)/(q^3 + 2*q^2 + 2*q + 1)", "K5", "K6"});
}

HeckeElement garnir_element(const HeckeAlgebra& h) { return XX1(h); }

HeckeElement garnir_element_at(const HeckeAlgebra& h, const RationalFunction& K2,
                               const RationalFunction& K4, const RationalFunction& K5,
                               const RationalFunction& K6) {
  require_n3(h);
  const RationalFunction q = rf_var(VQ);
  HeckeElement g{-K6 * q + K2 * q + K4,
                 K2,
                 (K6 * q * q + K4 * q * q - K5 * q - K4 * q - K6 * q + K2 + K4) / q,
                 K4,
                 K5,
                 K6};
  HeckeElement y = young::Y21_123(h);
  if (!HeckeAlgebra::is_zero(h.mul(y, g)))
    throw std::logic_error("chosen parameters do not annihilate the Young operator");
  if (HeckeAlgebra::is_zero(h.mul(g, y)))
    throw std::invalid_argument("degenerate Garnir choice: G * Y21_123 vanishes");
  return g;
}

HeckeElement alpha_q_garnir_closed(const HeckeAlgebra& h) {
  require_n3(h);
  return make(
      h,
      {"-(K2*q - 2*K6*q + K6*q^3 + K6*q^2 + K5*q^2 + K6 - q^3*K2 - q^4*K2 - K5*q - q^4*K4)/q^3",
       "(K6 + q^2*K2 - K5*q + K5*q^2 - 2*K6*q + K4*q^2 - K4*q + K6*q^2)/q^3",
       "-(-K2*q + 2*K6*q - K6 + K5*q - K6*q^3 - K4*q^3)/q^3", "(-K6 + K6*q + K5*q)/q^3",
       "(-K6 + K4*q + K6*q)/q^3", "K6/q^3"});
}

std::vector<HeckeElement> solve_intertwiner(const HeckeAlgebra& h, const HeckeElement& A,
                                            const HeckeElement& B) {
  FieldMatrix M = h.right_mult_matrix(A) - h.left_mult_matrix(B);
  return nullspace(M);
}

bool only_trivial_intertwiners(const HeckeAlgebra& h, const HeckeElement& A,
                               const HeckeElement& B) {
  for (const HeckeElement& k : solve_intertwiner(h, A, B))
    if (!HeckeAlgebra::is_zero(h.mul(k, A))) return false;
  return true;
}

}  // namespace garnir
}  // namespace qyoung
