#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "polyalg/finite_field.hpp"
#include "polyalg/multipoly.hpp"
#include "polyalg/rational_function.hpp"
#include "polyalg/unipoly.hpp"

namespace valn {

struct BadJInvariant : std::invalid_argument {
  BadJInvariant()
      : std::invalid_argument(
            "j-invariant is 0 or 1728, or the curve it names is ordinary") {}
  using std::invalid_argument::invalid_argument;
};

// The value group of a discrete valuation extended by a top element, so that
// v(0) = infinity and infinity absorbs addition.
class ValueExt {
 public:
  static ValueExt infinity() { return ValueExt(true, 0); }
  static ValueExt finite(int64_t v) { return ValueExt(false, v); }

  bool is_infinite() const { return infinite_; }
  int64_t value() const {
    if (infinite_) throw std::logic_error("value() on the infinite element");
    return v_;
  }

  ValueExt operator+(const ValueExt& o) const {
    if (infinite_ || o.infinite_) return infinity();
    return finite(v_ + o.v_);
  }
  bool operator==(const ValueExt& o) const {
    return infinite_ == o.infinite_ && (infinite_ || v_ == o.v_);
  }
  bool operator!=(const ValueExt& o) const { return !(*this == o); }
  bool operator<(const ValueExt& o) const {
    if (infinite_) return false;
    if (o.infinite_) return true;
    return v_ < o.v_;
  }
  bool operator<=(const ValueExt& o) const { return !(o < *this); }
  bool operator>(const ValueExt& o) const { return o < *this; }
  bool operator>=(const ValueExt& o) const { return !(*this < o); }

  static ValueExt min(const ValueExt& a, const ValueExt& b) {
    return a < b ? a : b;
  }

  std::string str() const { return infinite_ ? "inf" : std::to_string(v_); }

 private:
  ValueExt(bool infinite, int64_t v) : infinite_(infinite), v_(v) {}
  bool infinite_;
  int64_t v_;
};

enum class ValuationKind { kHAdic, kPiAdic };

// A discrete valuation on F_p(s,t) or F_p(u) given by order of divisibility
// by an irreducible prime element.  The h-adic constructor trusts its input;
// the pi-adic constructor verifies irreducibility by a root scan, which is
// complete for degree at most 3.
class ValuationSpec {
 public:
  static ValuationSpec h_adic(const polyalg::MultiPoly& h);
  static ValuationSpec pi_adic(const polyalg::MultiPoly& pi);

  ValuationKind kind() const { return kind_; }
  const polyalg::MultiPoly& prime() const { return prime_; }
  int64_t characteristic() const { return prime_.characteristic(); }

 private:
  ValuationSpec(ValuationKind kind, polyalg::MultiPoly prime)
      : kind_(kind), prime_(std::move(prime)) {}
  ValuationKind kind_;
  polyalg::MultiPoly prime_;
};

ValueExt valuate(const ValuationSpec& v, const polyalg::MultiPoly& g);
ValueExt valuate(const ValuationSpec& v, const polyalg::RationalFunction& g);

// The prime of F_p[s,t] cutting out the locus where the curve
// y^2 = x^3 + sx + t has supersingular j-invariant j0: the normalized form of
// (6912 - 4 j0) s^3 - 27 j0 t^2.  Requires j0 supersingular and distinct from
// 0 and 1728 mod p, so both coefficients are nonzero and the quadratic-in-t
// shape is irreducible.
polyalg::MultiPoly ss_prime_poly(int64_t p, int64_t j0);

// With j0 excluded from {0, 1728}, lists the usable inputs to ss_prime_poly.
std::vector<int64_t> usable_ss_j_values(int64_t p);

struct DiscLemmaReport {
  bool hypotheses_hold;
  bool conclusion_holds;
  ValueExt v_disc;
  ValueExt v_last;
};

// For monic f = X^n + c_1 X^{n-1} + ... + c_n over a valued rational function
// field, reports whether v(c_i) > (i/n) v(c_n) for 1 <= i < n (compared by
// exact cross-multiplication) and whether v(Disc f) = (n-1) v(c_n).  A failed
// hypothesis is a report state, not an error.
DiscLemmaReport disc_lemma_check(
    const polyalg::UniPoly<polyalg::RationalFunction>& f,
    const ValuationSpec& v);

struct KummerPairReport {
  int64_t pairs_total;
  int64_t same_extension;
  int64_t mixed;
  int64_t eps_plus_only;
  int64_t eps_minus_only;
  int64_t eps_both;
  int64_t failures;
};

// Exhaustively over ordered pairs of nonzero elements of F: whenever beta1
// and beta2 are both l-th powers or both non-l-th-powers (so the degree-l
// Kummer extensions they generate coincide), some eps in {+1, -1} makes
// beta1^eps beta2 an l-th power.  Mixed pairs generate different extensions
// and are counted but skipped.
KummerPairReport kummer_pair_check(const polyalg::FiniteField& F, int l);

struct CoefficientValuationRow {
  int i;
  int64_t k;
  ValueExt observed;
  std::optional<int64_t> expected;
};

struct CoefficientValuationReport {
  bool valid;
  std::string reason;
  int64_t p;
  int64_t j0;
  polyalg::MultiPoly h;
  std::vector<CoefficientValuationRow> rows;
  ValueExt v_mu;
  std::optional<int64_t> expected_mu;
};

// Valuations of the theta coefficient ratios a_{(p-1)/2+pi} / a_{(p-1)/2}
// and of mu at the supersingular prime of (p, j0).  Exploratory: the
// expected column records the published values for the final ratio (-1) and
// for mu (-(p-3)/2), but the valuation normalization there is not pinned to
// this construction, so rows report rather than gate.  When p admits no
// usable j0 the report is empty with a reason.
CoefficientValuationReport coefficient_valuation_report(int64_t p, int64_t j0);

}  // namespace valn
