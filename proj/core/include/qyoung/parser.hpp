#ifndef QYOUNG_PARSER_HPP
#define QYOUNG_PARSER_HPP

#include <string>

#include "qyoung/clifford.hpp"
#include "qyoung/ratfunc.hpp"

namespace qyoung {

/// Syntax or evaluation failure, with the source offset where it happened.
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

/// Parses a scalar expression over rationals and the variables
/// q, K1..K6, P3 with + - * / ^ and parentheses. `^` is exponentiation here.
RationalFunction parse_scalar(const std::string& text);

/// Parses and evaluates a full multivector expression in the 8-dimensional
/// algebra: scalars as above, generators e1..e8, Id, the Hecke words b1, b2,
/// b12, b21, b121, the named operators (Y3, Y111, Y21_132, Y21_123, R12, C12,
/// R13, C13, f1..f4, r1..r6), and the forms rev(x), alphaq(x), lim1(x).
/// `^` is the wedge product, except that an integer literal exponent means a
/// repeated Clifford power (so q^3 and e1^e5 both read naturally); `*` is the
/// Clifford product. Precedence: ^ over * and /, which bind over + and -.
Multivector parse_expression(const std::string& text);

}  // namespace qyoung

#endif
