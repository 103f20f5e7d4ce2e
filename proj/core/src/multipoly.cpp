#include "qyoung/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qyoung {

const std::array<const char*, kNumVars> kVarNames = {
    "q", "K1", "K2", "K3", "K4", "K5", "K6", "P3"};

int cmp(const Monomial& a, const Monomial& b) {
  int da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kNumVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({Monomial{}, c});
  return p;
}

MultiPoly MultiPoly::variable(Var v, int power) {
  if (power < 0) throw std::domain_error("negative exponent");
  if (power == 0) return constant(1);
  Monomial m;
  m.e[v] = static_cast<std::uint16_t>(power);
  MultiPoly p;
  p.terms_.push_back({m, Rational(1)});
  return p;
}

MultiPoly MultiPoly::term(const Monomial& m, const Rational& c) {
  MultiPoly p;
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

MultiPoly MultiPoly::from_sorted(std::vector<Term> terms) {
  MultiPoly p;
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_.front().first.is_unit() &&
         terms_.front().second == 1;
}

Rational MultiPoly::constant_value() const {
  if (is_zero()) return Rational(0);
  if (!is_constant()) throw std::domain_error("not a constant polynomial");
  return terms_.front().second;
}

int MultiPoly::degree(Var v) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m.e[v]));
  return d;
}

int MultiPoly::total_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
  return d;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

namespace {

// Merge of two descending term lists.
std::vector<MultiPoly::Term> merge_add(const std::vector<MultiPoly::Term>& a,
                                       const std::vector<MultiPoly::Term>& b,
                                       bool negate_b) {
  std::vector<MultiPoly::Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = cmp(a[i].first, b[j].first);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j]);
      if (negate_b) out.back().second = -out.back().second;
      ++j;
    } else {
      Rational s = negate_b ? Rational(a[i].second - b[j].second)
                            : Rational(a[i].second + b[j].second);
      if (s != 0) out.push_back({a[i].first, s});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (negate_b) out.back().second = -out.back().second;
  }
  return out;
}

struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return cmp(a, b) > 0; }
};

}  // namespace

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  return from_sorted(merge_add(terms_, o.terms_, false));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return from_sorted(merge_add(terms_, o.terms_, true));
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  if (o.is_monomial()) {
    std::vector<Term> out;
    out.reserve(terms_.size());
    const auto& [mm, mc] = o.terms_.front();
    for (const auto& [m, c] : terms_) out.push_back({m * mm, c * mc});
    return from_sorted(std::move(out));
  }
  if (is_monomial()) return o * *this;
  std::map<Monomial, Rational, MonomialDescending> acc;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Rational& slot = acc[ma * mb];
      slot += ca * cb;
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return from_sorted(std::move(out));
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  MultiPoly r = *this;
  for (auto& [m, x] : r.terms_) x *= c;
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw std::domain_error("negative exponent");
  MultiPoly r = constant(1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1) r *= base;
    base = (k >>= 1) ? base * base : base;
  }
  return r;
}

MultiPoly MultiPoly::divide_exact(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  if (d.is_one()) return *this;
  if (d.is_constant()) return scaled(1 / d.constant_value());
  MultiPoly rem = *this;
  std::vector<Term> quot;
  const auto& [dm, dc] = d.leading();
  while (!rem.is_zero()) {
    const auto& [rm, rc] = rem.leading();
    if (!dm.divides(rm)) throw std::domain_error("inexact polynomial division");
    Term t{rm / dm, rc / dc};
    quot.push_back(t);
    rem -= d * term(t.first, t.second);
  }
  // Quotient terms come out in descending order already.
  return from_sorted(std::move(quot));
}

MultiPoly MultiPoly::substitute(
    const std::array<std::pair<bool, Rational>, kNumVars>& bindings) const {
  std::map<Monomial, Rational, MonomialDescending> acc;
  for (const auto& [m, c] : terms_) {
    Monomial rm;
    Rational rc = c;
    for (int v = 0; v < kNumVars; ++v) {
      if (m.e[v] == 0) continue;
      if (bindings[v].first) {
        Rational p(1);
        for (int k = 0; k < m.e[v]; ++k) p *= bindings[v].second;
        rc *= p;
      } else {
        rm.e[v] = m.e[v];
      }
    }
    if (rc != 0) acc[rm] += rc;
  }
  std::vector<Term> out;
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  return from_sorted(std::move(out));
}

Rational MultiPoly::signed_content() const {
  if (is_zero()) return Rational(0);
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading().second < 0) content = -content;
  return content;
}

MultiPoly MultiPoly::primitive_part() const {
  if (is_zero()) return {};
  return scaled(1 / signed_content());
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      if (a < 0) {
        os << " - ";
        a = -a;
      } else {
        os << " + ";
      }
    }
    bool unit_mono = m.is_unit();
    bool coeff_shown = (a != 1) || unit_mono;
    if (coeff_shown) os << a.get_str();
    bool need_star = coeff_shown;
    for (int v = 0; v < kNumVars; ++v) {
      if (m.e[v] == 0) continue;
      if (need_star) os << "*";
      os << kVarNames[v];
      if (m.e[v] > 1) os << "^" << m.e[v];
      need_star = true;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// GCD: recursive content / subresultant pseudo-remainder scheme.
// ---------------------------------------------------------------------------

namespace {

// View of p as a univariate polynomial in x with MultiPoly coefficients.
std::vector<MultiPoly> to_univariate(const MultiPoly& p, Var x) {
  std::vector<std::vector<MultiPoly::Term>> buckets(p.degree(x) + 1);
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int d = m.e[x];
    rest.e[x] = 0;
    buckets[d].push_back({rest, c});
  }
  std::vector<MultiPoly> coeffs(buckets.size());
  for (std::size_t d = 0; d < buckets.size(); ++d) {
    std::sort(buckets[d].begin(), buckets[d].end(),
              [](const auto& a, const auto& b) { return cmp(a.first, b.first) > 0; });
    coeffs[d] = MultiPoly::from_sorted(std::move(buckets[d]));
  }
  return coeffs;
}

MultiPoly from_univariate(const std::vector<MultiPoly>& coeffs, Var x) {
  MultiPoly r;
  for (std::size_t d = 0; d < coeffs.size(); ++d)
    r += coeffs[d] * MultiPoly::variable(x, static_cast<int>(d));
  return r;
}

int udeg(const std::vector<MultiPoly>& u) {
  for (int d = static_cast<int>(u.size()) - 1; d >= 0; --d)
    if (!u[d].is_zero()) return d;
  return -1;
}

// Pseudo-remainder of a by b in the univariate view: lc(b)^(da-db+1) * a mod b.
std::vector<MultiPoly> prem(std::vector<MultiPoly> a, const std::vector<MultiPoly>& b) {
  int da = udeg(a), db = udeg(b);
  const MultiPoly& lb = b[db];
  int scale_left = da - db + 1;
  while (da >= db) {
    MultiPoly la = a[da];
    for (int i = 0; i <= da; ++i) a[i] *= lb;
    --scale_left;
    for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    a[da] = MultiPoly{};  // the leading term cancels exactly
    int nd = -1;
    for (int d = da - 1; d >= 0; --d)
      if (!a[d].is_zero()) {
        nd = d;
        break;
      }
    da = nd;
    if (da < 0) break;
  }
  if (da < 0) return {};
  a.resize(da + 1);
  if (scale_left > 0) {
    MultiPoly s = lb.pow(scale_left);
    for (auto& p : a) p *= s;
  }
  return a;
}

MultiPoly content_of(const std::vector<MultiPoly>& coeffs) {
  MultiPoly c;
  for (const auto& p : coeffs) {
    if (p.is_zero()) continue;
    c = c.is_zero() ? p.primitive_part() : gcd(c, p);
    if (c.is_one()) return c;
  }
  return c;
}

// Monomial gcd over all terms of p.
Monomial monomial_content(const MultiPoly& p) {
  Monomial g = p.terms().front().first;
  for (const auto& [m, c] : p.terms())
    for (int v = 0; v < kNumVars; ++v) g.e[v] = std::min(g.e[v], m.e[v]);
  return g;
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  MultiPoly pa = a.primitive_part();
  MultiPoly pb = b.primitive_part();
  if (pa.is_constant() || pb.is_constant()) return MultiPoly::constant(1);
  if (pa == pb) return pa;

  // Split off the common monomial factor so sparse inputs stay small.
  Monomial ga = monomial_content(pa), gb = monomial_content(pb);
  Monomial gm;
  for (int v = 0; v < kNumVars; ++v) gm.e[v] = std::min(ga.e[v], gb.e[v]);
  if (!ga.is_unit()) pa = pa.divide_exact(MultiPoly::term(ga, 1));
  if (!gb.is_unit()) pb = pb.divide_exact(MultiPoly::term(gb, 1));
  MultiPoly mono = MultiPoly::term(gm, 1);
  if (pa.is_constant() || pb.is_constant()) return mono;

  // Main variable: smallest min-degree among variables common to both.
  Var x = VQ;
  int best = -1;
  for (int v = 0; v < kNumVars; ++v) {
    int da = pa.degree(static_cast<Var>(v)), db = pb.degree(static_cast<Var>(v));
    if (da == 0 || db == 0) continue;
    int score = std::min(da, db);
    if (best < 0 || score < best) {
      best = score;
      x = static_cast<Var>(v);
    }
  }
  if (best < 0) return mono;  // no shared variable

  auto ua = to_univariate(pa, x);
  auto ub = to_univariate(pb, x);
  if (udeg(ua) < udeg(ub)) std::swap(ua, ub);

  MultiPoly ca = content_of(ua), cb = content_of(ub);
  MultiPoly c = gcd(ca, cb);
  for (auto& p : ua) p = p.divide_exact(ca);
  for (auto& p : ub) p = p.divide_exact(cb);

  // Subresultant PRS.
  MultiPoly g = MultiPoly::constant(1), h = MultiPoly::constant(1);
  while (true) {
    int da = udeg(ua), db = udeg(ub);
    int delta = da - db;
    auto r = prem(ua, ub);
    if (udeg(r) < 0) break;
    if (udeg(r) == 0) {
      ub = {MultiPoly::constant(1)};
      break;
    }
    ua = std::move(ub);
    MultiPoly div = g * h.pow(delta);
    ub = std::move(r);
    for (auto& p : ub) p = p.divide_exact(div);
    g = ua[udeg(ua)];
    if (delta > 0) h = g.pow(delta).divide_exact(h.pow(delta - 1));
  }
  MultiPoly cp = content_of(ub);
  for (auto& p : ub) p = p.divide_exact(cp);
  MultiPoly result = mono * c * from_univariate(ub, x);
  return result.primitive_part();
}

}  // namespace qyoung
