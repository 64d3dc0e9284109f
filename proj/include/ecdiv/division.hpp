#pragma once

#include <stdexcept>
#include <vector>

#include "polyalg/multipoly.hpp"

namespace ecdiv {

struct BoundExceeded : std::invalid_argument {
  BoundExceeded() : std::invalid_argument("division polynomial index exceeds the desk-scale cap") {}
};

// psi_m for the curve y^2 = x^3 + s x + t.  Even-index entries carry an
// implicit factor y; x_part stores what remains after y^2 -> x^3 + s x + t
// elimination, so every stored polynomial lives in F_p[s,t][x].
struct DivisionPoly {
  polyalg::MultiPoly x_part;
  bool times_y;
};

class DivisionPolySet {
 public:
  DivisionPolySet(int64_t p, std::vector<polyalg::MultiPoly> x_parts);

  int64_t p() const { return p_; }
  int m_max() const { return static_cast<int>(x_parts_.size()) - 1; }
  DivisionPoly psi(int m) const;
  const polyalg::MultiPoly& x_part(int m) const;

 private:
  int64_t p_;
  std::vector<polyalg::MultiPoly> x_parts_;
};

// Builds psi_0..psi_m_max from the doubling recurrences, keeping y out of
// every intermediate by working with the x-parts alone.
DivisionPolySet division_polynomials(int64_t p, int m_max);

// Same family via the textbook recurrences in F_p[s,t][x,z] with z standing
// for y and z^2 eliminated eagerly.  Slower; kept as an independent witness
// for the x-part construction.
DivisionPolySet division_polynomials_direct(int64_t p, int m_max);

// Replaces every z^2 by x^3 + s x + t until z-degree is at most 1.
polyalg::MultiPoly eliminate_z_square(const polyalg::MultiPoly& f);

// psi_m as an element of F_p[s,t][x,z] with z-degree <= 1.
polyalg::MultiPoly psi_with_z(const DivisionPolySet& set, int m);

}  // namespace ecdiv
