#include "qyoung/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <optional>

#include "qyoung/hecke.hpp"
#include "qyoung/young.hpp"

namespace qyoung {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, s.substr(start, i - start), start});
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
    } else {
      Tok k;
      switch (c) {
        case '+': k = Tok::Plus; break;
        case '-': k = Tok::Minus; break;
        case '*': k = Tok::Star; break;
        case '/': k = Tok::Slash; break;
        case '^': k = Tok::Caret; break;
        case '(': k = Tok::LParen; break;
        case ')': k = Tok::RParen; break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", start);
      }
      out.push_back({k, s.substr(start, 1), start});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Generic Pratt-style parser shared by the scalar and multivector grammars.
// The Value hooks differ; precedence is ^ > unary - > * / > + -.
template <class V>
struct Rules {
  std::function<V(const Token&)> number;
  std::function<V(const Token&)> ident;
  std::function<V(const Token&, const V&)> call;  // name(arg)
  std::function<V(const V&, const V&, const Token&)> mul, div, add, sub;
  std::function<V(const V&)> neg;
  /// `base ^ e` for an integer literal exponent e; rhs unused then.
  /// `base ^ rhs` otherwise (only meaningful for the multivector grammar).
  std::function<V(const V&, const Token&, const std::optional<V>&, long)> pow;
  std::function<bool(const std::string&)> is_call;
};

template <class V>
class Parser {
 public:
  Parser(const std::vector<Token>& toks, const Rules<V>& r) : it_(toks.begin()), r_(r) {}

  V parse() {
    V v = expr();
    expect(Tok::End, "end of input");
    return v;
  }

 private:
  std::vector<Token>::const_iterator it_;
  const Rules<V>& r_;

  const Token& peek() const { return *it_; }
  Token next() { return *it_++; }
  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw ParseError(std::string("expected ") + what, peek().pos);
    ++it_;
  }

  V expr() {
    V v = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      Token op = next();
      V rhs = term();
      v = (op.kind == Tok::Plus) ? r_.add(v, rhs, op) : r_.sub(v, rhs, op);
    }
    return v;
  }

  V term() {
    V v = unary();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      Token op = next();
      V rhs = unary();
      v = (op.kind == Tok::Star) ? r_.mul(v, rhs, op) : r_.div(v, rhs, op);
    }
    return v;
  }

  V unary() {
    if (peek().kind == Tok::Minus) {
      next();
      return r_.neg(unary());
    }
    if (peek().kind == Tok::Plus) {
      next();
      return unary();
    }
    return power();
  }

  V power() {
    V base = primary();
    while (peek().kind == Tok::Caret) {
      Token op = next();
      if (peek().kind == Tok::Number) {
        Token e = next();
        base = r_.pow(base, op, std::nullopt, std::stol(e.text));
      } else {
        V rhs = primary();
        base = r_.pow(base, op, rhs, 0);
      }
    }
    return base;
  }

  V primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        return r_.number(next());
      case Tok::Ident: {
        Token id = next();
        if (peek().kind == Tok::LParen && r_.is_call(id.text)) {
          next();  // consume '('
          return finish_call(id);
        }
        return r_.ident(id);
      }
      case Tok::LParen: {
        next();
        V v = expr();
        expect(Tok::RParen, "')'");
        return v;
      }
      default:
        throw ParseError("expected a value", t.pos);
    }
  }

  V finish_call(const Token& name) {
    V arg = expr();
    expect(Tok::RParen, "')'");
    return r_.call(name, arg);
  }
};

const std::map<std::string, Var>& var_names() {
  static const std::map<std::string, Var> m = {{"q", VQ},   {"K1", VK1}, {"K2", VK2},
                                               {"K3", VK3}, {"K4", VK4}, {"K5", VK5},
                                               {"K6", VK6}, {"P3", VP3}};
  return m;
}

}  // namespace

RationalFunction parse_scalar(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  Rules<RationalFunction> r;
  r.is_call = [](const std::string&) { return false; };
  r.number = [](const Token& t) {
    return RationalFunction(MultiPoly::constant(Rational(t.text)));
  };
  r.ident = [](const Token& t) -> RationalFunction {
    auto it = var_names().find(t.text);
    if (it == var_names().end()) throw ParseError("unknown variable '" + t.text + "'", t.pos);
    return rf_var(it->second);
  };
  r.call = [](const Token& t, const RationalFunction&) -> RationalFunction {
    throw ParseError("no functions in scalar expressions", t.pos);
  };
  r.add = [](const RationalFunction& a, const RationalFunction& b, const Token&) { return a + b; };
  r.sub = [](const RationalFunction& a, const RationalFunction& b, const Token&) { return a - b; };
  r.mul = [](const RationalFunction& a, const RationalFunction& b, const Token&) { return a * b; };
  r.div = [](const RationalFunction& a, const RationalFunction& b, const Token& op) {
    if (b.is_zero()) throw ParseError("division by zero", op.pos);
    return a / b;
  };
  r.neg = [](const RationalFunction& a) { return -a; };
  r.pow = [](const RationalFunction& base, const Token& op,
             const std::optional<RationalFunction>& rhs, long e) {
    if (rhs) throw ParseError("scalar exponent must be an integer literal", op.pos);
    return base.pow(static_cast<int>(e));
  };
  return Parser<RationalFunction>(toks, r).parse();
}

namespace {

const HeckeAlgebra& shared_h3() {
  static const HeckeAlgebra h(3);
  return h;
}

Multivector named_operator(const Token& t) {
  const HeckeAlgebra& h = shared_h3();
  const std::string& n = t.text;
  auto from_coords = [&](const HeckeElement& x) { return h.to_multivector(x); };

  if (n == "Id") return Multivector::scalar(8, RationalFunction(1));
  if (n.size() >= 2 && n[0] == 'e' && n.find_first_not_of("0123456789", 1) == std::string::npos) {
    int i = std::stoi(n.substr(1));
    if (i >= 1 && i <= 8) return Multivector::generator(8, i);
    throw ParseError("generators are e1..e8", t.pos);
  }
  if (n == "b1") return from_coords(h.word({1}));
  if (n == "b2") return from_coords(h.word({2}));
  if (n == "b12") return from_coords(h.word({1, 2}));
  if (n == "b21") return from_coords(h.word({2, 1}));
  if (n == "b121") return from_coords(h.word({1, 2, 1}));
  if (n == "Y3") return from_coords(young::Y3(h));
  if (n == "Y111") return from_coords(young::Y111(h));
  if (n == "Y21_132") return from_coords(young::Y21_132(h));
  if (n == "Y21_123") return from_coords(young::Y21_123(h));
  if (n == "R13") return from_coords(young::R13(h));
  if (n == "C13") return from_coords(young::C13(h));
  if (n == "T") return from_coords(young::T_intertwiner(h));
  // R12 and C12 are the unnormalized operators q + b1 and 1 - b1.
  if (n == "R12")
    return from_coords({rf_var(VQ), RationalFunction(1), RationalFunction(0), RationalFunction(0),
                        RationalFunction(0), RationalFunction(0)});
  if (n == "C12")
    return from_coords({RationalFunction(1), RationalFunction(-1), RationalFunction(0),
                        RationalFunction(0), RationalFunction(0), RationalFunction(0)});
  if (n == "f1" || n == "f2" || n == "f3") return from_coords(young::f(h, n[1] - '0'));
  if (n == "r1" || n == "r2" || n == "r3" || n == "r4")
    return from_coords(young::representative(h, n[1] - '0'));
  // r5 / r6 are evaluated at the split point K2 = K4 = 0, where the kappa
  // root -1/(1+q) and the alpha root 1/(1+q) lie in the base field.
  if (n == "r5")
    return from_coords(young::representative_at(h, 5, RationalFunction(0), RationalFunction(0),
                                                parse_scalar("-1/(1+q)")));
  if (n == "r6")
    return from_coords(young::representative_at(h, 6, RationalFunction(0), RationalFunction(0),
                                                parse_scalar("1/(1+q)")));
  throw ParseError("unknown name '" + n + "'", t.pos);
}

}  // namespace

Multivector parse_expression(const std::string& text) {
  std::vector<Token> toks = tokenize(text);
  const HeckeAlgebra& h = shared_h3();
  const BilinearForm& B = h.B();
  using V = Multivector;

  auto as_scalar = [](const V& v, std::size_t pos) {
    if (!(v - Multivector::scalar(8, v.scalar_part())).is_zero())
      throw ParseError("expected a scalar value", pos);
    return v.scalar_part();
  };

  Rules<V> r;
  r.is_call = [](const std::string& n) { return n == "rev" || n == "alphaq" || n == "lim1"; };
  r.number = [](const Token& t) { return Multivector::scalar(8, parse_scalar(t.text)); };
  r.ident = [](const Token& t) -> V {
    auto it = var_names().find(t.text);
    if (it != var_names().end()) return Multivector::scalar(8, rf_var(it->second));
    return named_operator(t);
  };
  r.call = [&h, &B](const Token& t, const V& arg) -> V {
    if (t.text == "rev") return reverse(arg, B);
    if (t.text == "lim1") {
      Bindings b;
      b.set(VQ, Rational(1));
      return arg.substitute(b);
    }
    // alphaq: only defined on the Hecke subalgebra span
    try {
      return h.to_multivector(h.alpha(h.to_coords(arg)));
    } catch (const NotInSubalgebra& e) {
      throw ParseError(std::string("alphaq needs a Hecke subalgebra element: ") + e.what(), t.pos);
    }
  };
  r.add = [](const V& a, const V& b, const Token&) { return a + b; };
  r.sub = [](const V& a, const V& b, const Token&) { return a - b; };
  r.mul = [&B](const V& a, const V& b, const Token&) { return cmul(a, b, B); };
  r.div = [&as_scalar](const V& a, const V& b, const Token& op) {
    RationalFunction s = as_scalar(b, op.pos);
    if (s.is_zero()) throw ParseError("division by zero", op.pos);
    return a.scaled(s.pow(-1));
  };
  r.neg = [](const V& a) { return -a; };
  r.pow = [&B](const V& base, const Token& op, const std::optional<V>& rhs, long e) -> V {
    if (rhs) return wedge(base, *rhs);  // e1^e5 style
    if (e < 0) throw ParseError("negative powers are not supported", op.pos);
    V acc = Multivector::scalar(8, RationalFunction(1));
    for (long i = 0; i < e; ++i) acc = cmul(acc, base, B);
    return acc;
  };
  return Parser<V>(toks, r).parse();
}

}  // namespace qyoung
