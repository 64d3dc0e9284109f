#pragma once

#include "polyalg/multipoly.hpp"

namespace ecdiv {

// Coefficients of the degree-3 resolvent f(T) = T^3 + c1 T^2 + c2 T + c3
// attached to the four x-coordinates of the 3-torsion points, together with
// the constant term of the depressed form f(T - c1/3).  The c_i are computed
// purely from symmetric functions of the roots of psi_3/3 via Vieta, never
// from explicit radicals.
struct ThreeTorsionResolvent {
  polyalg::MultiPoly c1;
  polyalg::MultiPoly c2;
  polyalg::MultiPoly c3;
  polyalg::MultiPoly shifted_t2;
  polyalg::MultiPoly shifted_t1;
  polyalg::MultiPoly shifted_t0;
};

ThreeTorsionResolvent three_torsion_resolvent(int64_t p);

}  // namespace ecdiv
