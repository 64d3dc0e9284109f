#pragma once

#include <stdexcept>
#include <vector>

#include "ecdiv/division.hpp"
#include "polyalg/multipoly.hpp"
#include "polyalg/rational_function.hpp"

namespace ecdiv {

struct RadicalDegreeMismatch : std::runtime_error {
  RadicalDegreeMismatch()
      : std::runtime_error("separable radical does not have degree (p-1)/2") {}
};

struct TwistMismatch : std::runtime_error {
  TwistMismatch()
      : std::runtime_error("theta is not the scaled Frobenius twist of the radical") {}
};

struct ZeroDiscriminant : std::runtime_error {
  ZeroDiscriminant() : std::runtime_error("theta has vanishing discriminant") {}
};

// Coefficients a_k of psi_p at the indices k = (p-1)/2 + p*i, together with
// the polynomial theta(X) = sum_i a_{(p-1)/2+pi} X^{(p-1)/2-i}.  a_k is the
// coefficient of x^{(p^2-1)/2 - k} in psi_p.
struct Theta {
  int64_t p;
  std::vector<polyalg::MultiPoly> a;
  polyalg::MultiPoly theta;
};

Theta theta_extract(int64_t p);

struct ThetaRadicalReport {
  int radical_degree;
  polyalg::MultiPoly radical;
};

// Characteristic-p radical with respect to x: the product of the distinct
// irreducible factors, each once.  Repeated p-th-root extraction handles the
// vanishing-derivative branch.
polyalg::MultiPoly radical_in_x(const polyalg::MultiPoly& f);

// Verifies that theta(x) equals a_{(p-1)/2} times the monic separable radical
// of psi_p with the parameter Frobenius undone: the radical of
// psi_p(s^p, t^p; x) must be proportional to theta itself.  Throws
// RadicalDegreeMismatch or TwistMismatch.
ThetaRadicalReport theta_radical_check(int64_t p);

// Same check with a stand-in for psi_p, for probing the failure modes.
ThetaRadicalReport theta_radical_check_with(int64_t p, const polyalg::MultiPoly& psi_stand_in);

// mu = Disc((1/a)theta) over F_p(s,t) for p = 5 or 13.
polyalg::RationalFunction mu_discriminant(int64_t p);

}  // namespace ecdiv
