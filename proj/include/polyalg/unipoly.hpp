#pragma once

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyalg/finite_field.hpp"
#include "polyalg/multipoly.hpp"
#include "polyalg/rational_function.hpp"

namespace polyalg {

// Adapter surface a coefficient domain must provide to UniPoly.  The three
// domains used here are field elements, polynomials over F_p, and rational
// functions; only the field-like ones support Euclidean division.
template <class K>
struct PolyDomain;

template <>
struct PolyDomain<FFElem> {
  static constexpr bool is_field = true;
  static FFElem zero(const FFElem& like) { return like.field()->zero(); }
  static FFElem one(const FFElem& like) { return like.field()->one(); }
  static bool is_zero(const FFElem& x) { return x.is_zero(); }
  static FFElem from_int(const FFElem& like, int64_t c) { return like.field()->element(c); }
  static FFElem exact_div(const FFElem& a, const FFElem& b) { return a / b; }
  static FFElem inv(const FFElem& x) { return x.inverse(); }
  static FFElem power(const FFElem& x, uint64_t e) { return x.pow(e); }
  static int64_t characteristic(const FFElem& x) { return x.field()->p(); }
  static std::string str(const FFElem& x) { return x.str(); }
};

template <>
struct PolyDomain<MultiPoly> {
  static constexpr bool is_field = false;
  static MultiPoly zero(const MultiPoly& like) { return MultiPoly(like.characteristic()); }
  static MultiPoly one(const MultiPoly& like) {
    return MultiPoly::constant(like.characteristic(), 1);
  }
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static MultiPoly from_int(const MultiPoly& like, int64_t c) {
    return MultiPoly::constant(like.characteristic(), c);
  }
  static MultiPoly exact_div(const MultiPoly& a, const MultiPoly& b) {
    return MultiPoly::exact_divide(a, b);
  }
  static MultiPoly inv(const MultiPoly& x) {
    if (!x.is_constant() || x.is_zero()) {
      throw std::invalid_argument("inverse of a non-constant polynomial");
    }
    return MultiPoly::exact_divide(one(x), x);
  }
  static MultiPoly power(const MultiPoly& x, uint64_t e) {
    return x.pow(static_cast<uint32_t>(e));
  }
  static int64_t characteristic(const MultiPoly& x) { return x.characteristic(); }
  static std::string str(const MultiPoly& x) { return x.str(); }
};

template <>
struct PolyDomain<RationalFunction> {
  static constexpr bool is_field = true;
  static RationalFunction zero(const RationalFunction& like) {
    return RationalFunction(MultiPoly(like.characteristic()));
  }
  static RationalFunction one(const RationalFunction& like) {
    return RationalFunction::constant(like.characteristic(), 1);
  }
  static bool is_zero(const RationalFunction& x) { return x.is_zero(); }
  static RationalFunction from_int(const RationalFunction& like, int64_t c) {
    return RationalFunction::constant(like.characteristic(), c);
  }
  static RationalFunction exact_div(const RationalFunction& a, const RationalFunction& b) {
    return a / b;
  }
  static RationalFunction inv(const RationalFunction& x) { return x.inverse(); }
  static RationalFunction power(const RationalFunction& x, uint64_t e) {
    return x.pow(static_cast<uint32_t>(e));
  }
  static int64_t characteristic(const RationalFunction& x) { return x.characteristic(); }
  static std::string str(const RationalFunction& x) { return x.str(); }
};

// Dense univariate polynomial with coefficients in K, stored ascending with
// no trailing zeros.  Every instance keeps a zero exemplar of its domain so
// the zero polynomial still knows where its coefficients live.
template <class K>
class UniPoly {
 public:
  using D = PolyDomain<K>;

  explicit UniPoly(K domain_zero) : zero_(std::move(domain_zero)), c_() {
    if (!D::is_zero(zero_)) throw std::invalid_argument("exemplar must be the domain zero");
  }

  explicit UniPoly(std::vector<K> ascending_coeffs)
      : zero_(make_zero(ascending_coeffs)), c_(std::move(ascending_coeffs)) {
    trim();
  }

  static UniPoly monomial(const K& coeff, int deg) {
    if (deg < 0) throw std::invalid_argument("monomial degree must be nonnegative");
    std::vector<K> c(static_cast<size_t>(deg) + 1, D::zero(coeff));
    c.back() = coeff;
    return UniPoly(std::move(c));
  }

  static UniPoly from_ints(const K& like, const std::vector<int64_t>& ascending) {
    std::vector<K> c;
    c.reserve(ascending.size());
    for (int64_t v : ascending) c.push_back(D::from_int(like, v));
    if (c.empty()) return UniPoly(D::zero(like));
    return UniPoly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  const K& coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero_;
    return c_[static_cast<size_t>(k)];
  }

  const K& leading() const {
    if (c_.empty()) throw std::invalid_argument("zero polynomial has no leading coefficient");
    return c_.back();
  }

  const K& domain_zero() const { return zero_; }

  bool is_monic() const { return !c_.empty() && c_.back() == D::one(zero_); }

  UniPoly operator+(const UniPoly& o) const {
    std::vector<K> r;
    size_t n = std::max(c_.size(), o.c_.size());
    r.reserve(n);
    for (size_t i = 0; i < n; ++i) {
      r.push_back(coeff(static_cast<int>(i)) + o.coeff(static_cast<int>(i)));
    }
    UniPoly out(zero_);
    out.c_ = std::move(r);
    out.trim();
    return out;
  }

  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }

  UniPoly operator-() const {
    UniPoly out(zero_);
    out.c_.reserve(c_.size());
    for (const K& x : c_) out.c_.push_back(-x);
    return out;
  }

  UniPoly operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly(zero_);
    std::vector<K> r(c_.size() + o.c_.size() - 1, zero_);
    for (size_t i = 0; i < c_.size(); ++i) {
      for (size_t j = 0; j < o.c_.size(); ++j) {
        r[i + j] = r[i + j] + c_[i] * o.c_[j];
      }
    }
    UniPoly out(zero_);
    out.c_ = std::move(r);
    out.trim();
    return out;
  }

  UniPoly scale(const K& k) const {
    UniPoly out(zero_);
    out.c_.reserve(c_.size());
    for (const K& x : c_) out.c_.push_back(x * k);
    out.trim();
    return out;
  }

  bool operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!(c_[i] == o.c_[i])) return false;
    }
    return true;
  }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly(zero_);
    std::vector<K> r;
    r.reserve(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) {
      r.push_back(c_[i] * D::from_int(zero_, static_cast<int64_t>(i)));
    }
    UniPoly out(zero_);
    out.c_ = std::move(r);
    out.trim();
    return out;
  }

  K evaluate(const K& x) const {
    K acc = zero_;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
      const K& c = coeff(k);
      if (D::is_zero(c)) continue;
      if (!first) out << " + ";
      if (k == 0) {
        out << "(" << D::str(c) << ")";
      } else {
        out << "(" << D::str(c) << ")*" << var;
        if (k > 1) out << "^" << k;
      }
      first = false;
    }
    return out.str();
  }

 private:
  static K make_zero(const std::vector<K>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("coefficient list must be nonempty");
    return D::zero(coeffs.front());
  }
  void trim() {
    while (!c_.empty() && D::is_zero(c_.back())) c_.pop_back();
  }
  K zero_;
  std::vector<K> c_;
};

// Quotient and remainder over a field coefficient domain.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> poly_divmod(const UniPoly<K>& f, const UniPoly<K>& g) {
  static_assert(PolyDomain<K>::is_field, "division requires field coefficients");
  using D = PolyDomain<K>;
  if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  UniPoly<K> q(f.domain_zero());
  UniPoly<K> r = f;
  K lg_inv = D::inv(g.leading());
  while (!r.is_zero() && r.degree() >= g.degree()) {
    K c = r.leading() * lg_inv;
    int shift = r.degree() - g.degree();
    UniPoly<K> term = UniPoly<K>::monomial(c, shift);
    q = q + term;
    r = r - term * g;
  }
  return {q, r};
}

// Monic greatest common divisor by the Euclidean algorithm.
template <class K>
UniPoly<K> poly_gcd(const UniPoly<K>& f, const UniPoly<K>& g) {
  static_assert(PolyDomain<K>::is_field, "gcd requires field coefficients");
  using D = PolyDomain<K>;
  UniPoly<K> a = f;
  UniPoly<K> b = g;
  while (!b.is_zero()) {
    UniPoly<K> r = poly_divmod(a, b).second;
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.scale(D::inv(a.leading()));
}

// Determinant of the Sylvester matrix of f and g: deg(g) rows carrying f's
// coefficients first, then deg(f) rows of g's, columns by descending power.
// For this layout Res(f, g) = lc(f)^deg(g) * prod g(alpha) over the roots of
// f.  Bareiss fraction-free elimination keeps every intermediate entry in the
// coefficient domain, so polynomial domains never leave the ring.
template <class K>
K resultant(const UniPoly<K>& f, const UniPoly<K>& g) {
  using D = PolyDomain<K>;
  if (f.is_zero() || g.is_zero()) {
    throw std::invalid_argument("resultant requires nonzero polynomials");
  }
  const K& zero = f.domain_zero();
  K one = D::one(zero);
  int m = f.degree();
  int n = g.degree();
  if (m == 0 && n == 0) return one;
  if (m == 0) return D::power(f.leading(), static_cast<uint64_t>(n));
  if (n == 0) return D::power(g.leading(), static_cast<uint64_t>(m));

  int N = m + n;
  std::vector<std::vector<K>> M(static_cast<size_t>(N), std::vector<K>(static_cast<size_t>(N), zero));
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k <= m; ++k) {
      M[static_cast<size_t>(i)][static_cast<size_t>(i + k)] = f.coeff(m - k);
    }
  }
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k <= n; ++k) {
      M[static_cast<size_t>(n + j)][static_cast<size_t>(j + k)] = g.coeff(n - k);
    }
  }

  bool negate = false;
  K prev = one;
  for (int k = 0; k + 1 < N; ++k) {
    size_t uk = static_cast<size_t>(k);
    if (D::is_zero(M[uk][uk])) {
      size_t swap_row = uk;
      for (size_t i = uk + 1; i < static_cast<size_t>(N); ++i) {
        if (!D::is_zero(M[i][uk])) {
          swap_row = i;
          break;
        }
      }
      if (swap_row == uk) return zero;
      std::swap(M[uk], M[swap_row]);
      negate = !negate;
    }
    for (size_t i = uk + 1; i < static_cast<size_t>(N); ++i) {
      for (size_t j = uk + 1; j < static_cast<size_t>(N); ++j) {
        K num = M[i][j] * M[uk][uk] - M[i][uk] * M[uk][j];
        M[i][j] = D::exact_div(num, prev);
      }
      M[i][uk] = zero;
    }
    prev = M[uk][uk];
  }
  K det = M[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
  return negate ? -det : det;
}

// (-1)^{n(n-1)/2} Res(f, f') for monic f of degree n >= 2.
template <class K>
K discriminant(const UniPoly<K>& f) {
  if (f.degree() < 2) throw std::invalid_argument("discriminant needs degree at least 2");
  if (!f.is_monic()) throw std::invalid_argument("discriminant requires a monic polynomial");
  UniPoly<K> df = f.derivative();
  if (df.is_zero()) throw ZeroDerivative();
  K res = resultant(f, df);
  int64_t n = f.degree();
  if (((n * (n - 1)) / 2) % 2 != 0) return -res;
  return res;
}

// Coefficient-wise Frobenius: each coefficient is raised to the p-th power,
// p the coefficient characteristic.  The degree never changes because the
// p-th power map has no kernel on the coefficient domain.
template <class K>
UniPoly<K> frobenius_coeff_power(const UniPoly<K>& f) {
  using D = PolyDomain<K>;
  int64_t p = D::characteristic(f.domain_zero());
  std::vector<K> c;
  c.reserve(static_cast<size_t>(f.degree() + 1));
  for (int k = 0; k <= f.degree(); ++k) {
    c.push_back(D::power(f.coeff(k), static_cast<uint64_t>(p)));
  }
  if (c.empty()) return f;
  return UniPoly<K>(std::move(c));
}

}  // namespace polyalg
