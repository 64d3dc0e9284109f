#include "polyalg/multipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace polyalg {

namespace {

int64_t floormod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t mulmod(int64_t a, int64_t b, int64_t m) {
  return static_cast<int64_t>(static_cast<__int128>(a) * b % m);
}

int64_t invmod(int64_t a, int64_t m) {
  int64_t r0 = m, r1 = floormod(a, m), s0 = 0, s1 = 1;
  while (r1 != 0) {
    int64_t q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  if (r0 != 1) throw std::invalid_argument("element not invertible");
  return floormod(s0, m);
}

bool exp_lex_greater(const Exp& a, const Exp& b) { return a > b; }

}  // namespace

const char* var_name(int v) {
  static const char* names[kVarCount] = {"s",  "t",  "x",  "u",  "T",
                                         "X",  "z",  "a1", "a2", "a3",
                                         "a4", "e1", "e2", "e3", "e4"};
  return names[v];
}

MultiPoly::MultiPoly(int64_t characteristic) : p_(characteristic) {
  if (p_ < 2) throw std::invalid_argument("characteristic must be at least 2");
}

MultiPoly MultiPoly::constant(int64_t characteristic, int64_t c) {
  MultiPoly r(characteristic);
  int64_t v = floormod(c, characteristic);
  if (v != 0) r.terms_.push_back({Exp{}, v});
  return r;
}

MultiPoly MultiPoly::variable(int64_t characteristic, Var v, uint16_t exp) {
  MultiPoly r(characteristic);
  if (exp == 0) return constant(characteristic, 1);
  Exp e{};
  e[v] = exp;
  r.terms_.push_back({e, 1});
  return r;
}

MultiPoly MultiPoly::from_terms(int64_t characteristic,
                                std::vector<Term> terms) {
  MultiPoly r(characteristic);
  std::map<Exp, int64_t, std::greater<Exp>> acc;
  for (const Term& t : terms) {
    int64_t c = floormod(t.coeff, characteristic);
    if (c != 0) {
      auto [it, fresh] = acc.try_emplace(t.exp, 0);
      it->second = floormod(it->second + c, characteristic);
      (void)fresh;
    }
  }
  for (const auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back({e, c});
  }
  return r;
}

bool MultiPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].exp == Exp{} && terms_[0].coeff == 1;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exp == Exp{});
}

int64_t MultiPoly::constant_value() const {
  if (is_zero()) return 0;
  if (!is_constant()) throw std::invalid_argument("polynomial is not constant");
  return terms_[0].coeff;
}

void MultiPoly::require_same_char(const MultiPoly& o) const {
  if (p_ != o.p_)
    throw std::invalid_argument("characteristic mismatch in polynomial op");
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  require_same_char(o);
  MultiPoly r(p_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && exp_lex_greater(terms_[i].exp, o.terms_[j].exp))) {
      r.terms_.push_back(terms_[i++]);
    } else if (i == terms_.size() ||
               exp_lex_greater(o.terms_[j].exp, terms_[i].exp)) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      int64_t c = floormod(terms_[i].coeff + o.terms_[j].coeff, p_);
      if (c != 0) r.terms_.push_back({terms_[i].exp, c});
      ++i;
      ++j;
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(p_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.exp, p_ - t.coeff});
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  return *this + (-o);
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  require_same_char(o);
  MultiPoly r(p_);
  if (is_zero() || o.is_zero()) return r;
  std::map<Exp, int64_t, std::greater<Exp>> acc;
  for (const Term& a : terms_) {
    for (const Term& b : o.terms_) {
      Exp e;
      for (int k = 0; k < kVarCount; ++k) {
        uint32_t sum = static_cast<uint32_t>(a.exp[k]) + b.exp[k];
        if (sum > UINT16_MAX) throw std::overflow_error("exponent overflow");
        e[k] = static_cast<uint16_t>(sum);
      }
      auto [it, fresh] = acc.try_emplace(e, 0);
      it->second = floormod(it->second + mulmod(a.coeff, b.coeff, p_), p_);
      (void)fresh;
    }
  }
  for (const auto& [e, c] : acc) {
    if (c != 0) r.terms_.push_back({e, c});
  }
  return r;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  if (p_ != o.p_ || terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].exp != o.terms_[i].exp ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  }
  return true;
}

MultiPoly MultiPoly::scale(int64_t c) const {
  int64_t v = floormod(c, p_);
  MultiPoly r(p_);
  if (v == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.exp, mulmod(t.coeff, v, p_)});
  return r;
}

MultiPoly MultiPoly::pow(uint32_t k) const {
  MultiPoly acc = constant(p_, 1);
  MultiPoly base = *this;
  while (k > 0) {
    if (k & 1u) acc = acc * base;
    base = (k >>= 1) ? base * base : base;
  }
  return acc;
}

int MultiPoly::degree(Var v) const {
  int d = -1;
  for (const Term& t : terms_) d = std::max(d, static_cast<int>(t.exp[v]));
  return terms_.empty() ? -1 : d;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const Term& t : terms_) {
    int s = 0;
    for (int k = 0; k < kVarCount; ++k) s += t.exp[k];
    d = std::max(d, s);
  }
  return d;
}

MultiPoly MultiPoly::derivative(Var v) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (t.exp[v] == 0) continue;
    Term n = t;
    n.coeff = mulmod(t.coeff, t.exp[v] % p_, p_);
    n.exp[v] -= 1;
    out.push_back(n);
  }
  return from_terms(p_, std::move(out));
}

MultiPoly MultiPoly::coeff_of(Var v, int k) const {
  std::vector<Term> out;
  for (const Term& t : terms_) {
    if (static_cast<int>(t.exp[v]) == k) {
      Term n = t;
      n.exp[v] = 0;
      out.push_back(n);
    }
  }
  return from_terms(p_, std::move(out));
}

MultiPoly MultiPoly::leading_coeff_in(Var v) const {
  return coeff_of(v, degree(v));
}

MultiPoly MultiPoly::substitute(Var v, const MultiPoly& value) const {
  require_same_char(value);
  std::map<uint16_t, MultiPoly> powers;
  MultiPoly r(p_);
  for (const Term& t : terms_) {
    Term base = t;
    base.exp[v] = 0;
    MultiPoly piece = from_terms(p_, {base});
    if (t.exp[v] > 0) {
      auto it = powers.find(t.exp[v]);
      if (it == powers.end()) {
        it = powers.emplace(t.exp[v], value.pow(t.exp[v])).first;
      }
      piece = piece * it->second;
    }
    r = r + piece;
  }
  return r;
}

MultiPoly MultiPoly::transpose_vars(Var v1, Var v2) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (Term t : terms_) {
    std::swap(t.exp[v1], t.exp[v2]);
    out.push_back(t);
  }
  return from_terms(p_, std::move(out));
}

int64_t MultiPoly::evaluate(const std::array<int64_t, kVarCount>& point) const {
  int64_t acc = 0;
  for (const Term& t : terms_) {
    int64_t v = t.coeff;
    for (int k = 0; k < kVarCount; ++k) {
      if (t.exp[k] == 0) continue;
      int64_t base = floormod(point[k], p_);
      for (uint16_t e = 0; e < t.exp[k]; ++e) v = mulmod(v, base, p_);
    }
    acc = floormod(acc + v, p_);
  }
  return acc;
}

int64_t MultiPoly::leading_unit() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no unit");
  return terms_[0].coeff;
}

MultiPoly MultiPoly::normalized() const {
  if (is_zero()) return *this;
  return scale(invmod(terms_[0].coeff, p_));
}

MultiPoly MultiPoly::exact_divide(const MultiPoly& a, const MultiPoly& b) {
  auto q = try_divide(a, b);
  if (!q) throw NotDivisible("polynomial division leaves a remainder");
  return *q;
}

std::optional<MultiPoly> MultiPoly::try_divide(const MultiPoly& a,
                                               const MultiPoly& b) {
  a.require_same_char(b);
  if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
  MultiPoly rem = a;
  MultiPoly quot(a.p_);
  const Term& lead_b = b.terms_[0];
  int64_t lead_b_inv = invmod(lead_b.coeff, a.p_);
  while (!rem.is_zero()) {
    const Term& lead_r = rem.terms_[0];
    Term qt;
    bool divisible = true;
    for (int k = 0; k < kVarCount; ++k) {
      if (lead_r.exp[k] < lead_b.exp[k]) {
        divisible = false;
        break;
      }
      qt.exp[k] = lead_r.exp[k] - lead_b.exp[k];
    }
    if (!divisible) return std::nullopt;
    qt.coeff = mulmod(lead_r.coeff, lead_b_inv, a.p_);
    MultiPoly qterm = from_terms(a.p_, {qt});
    quot = quot + qterm;
    rem = rem - qterm * b;
  }
  return quot;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = t.exp != Exp{};
    if (t.coeff != 1 || !has_var) os << t.coeff;
    bool need_star = t.coeff != 1 || !has_var;
    for (int k = 0; k < kVarCount; ++k) {
      if (t.exp[k] == 0) continue;
      if (need_star) os << "*";
      need_star = true;
      os << var_name(k);
      if (t.exp[k] > 1) os << "^" << t.exp[k];
    }
  }
  return os.str();
}

namespace {

// Highest-index variable appearing in either polynomial, or -1 if both are
// constant.
int pick_main_var(const MultiPoly& a, const MultiPoly& b) {
  for (int v = kVarCount - 1; v >= 0; --v) {
    if (a.degree(static_cast<Var>(v)) > 0 || b.degree(static_cast<Var>(v)) > 0)
      return v;
  }
  return -1;
}

MultiPoly pseudo_rem(MultiPoly f, const MultiPoly& g, Var v) {
  int dg = g.degree(v);
  MultiPoly lg = g.leading_coeff_in(v);
  while (!f.is_zero() && f.degree(v) >= dg) {
    int df = f.degree(v);
    MultiPoly lf = f.leading_coeff_in(v);
    MultiPoly shift = MultiPoly::variable(f.characteristic(), v,
                                          static_cast<uint16_t>(df - dg));
    f = f * lg - g * shift * lf;
  }
  return f;
}

}  // namespace

MultiPoly content_in(const MultiPoly& a, Var v) {
  MultiPoly c(a.characteristic());
  for (int k = 0; k <= a.degree(v); ++k) {
    MultiPoly ck = a.coeff_of(v, k);
    if (!ck.is_zero()) c = multi_gcd(c, ck);
  }
  return c;
}

MultiPoly multi_gcd(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  int main = pick_main_var(a, b);
  if (main < 0) return MultiPoly::constant(a.characteristic(), 1);
  Var v = static_cast<Var>(main);

  MultiPoly cont_a = content_in(a, v);
  MultiPoly cont_b = content_in(b, v);
  MultiPoly prim_a = MultiPoly::exact_divide(a, cont_a);
  MultiPoly prim_b = MultiPoly::exact_divide(b, cont_b);
  MultiPoly cont_gcd = multi_gcd(cont_a, cont_b);

  MultiPoly f = prim_a, g = prim_b;
  if (f.degree(v) < g.degree(v)) std::swap(f, g);
  while (!g.is_zero()) {
    MultiPoly r = pseudo_rem(f, g, v);
    if (!r.is_zero()) r = MultiPoly::exact_divide(r, content_in(r, v));
    f = g;
    g = r;
  }
  if (f.degree(v) <= 0) return cont_gcd.normalized();
  return (cont_gcd * f).normalized();
}

}  // namespace polyalg
