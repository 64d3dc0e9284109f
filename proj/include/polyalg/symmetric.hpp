#pragma once

#include "polyalg/multipoly.hpp"

namespace polyalg {

// Elementary symmetric polynomial e_i in the root variables a1..am (i = 0
// gives 1).  Requires 0 <= i <= m and 1 <= m <= 4.
MultiPoly elementary_symmetric(int64_t characteristic, int i, int m);

// Gauss's reduction: rewrites a polynomial that is symmetric in a1..am as a
// polynomial in the elementary symmetric values, returned in the variables
// e1..em.  Symmetry is verified against all adjacent transpositions first.
MultiPoly symmetric_reduce(const MultiPoly& q, int m);

// Substitutes e_i -> elementary_symmetric(i, m) into a polynomial in e1..em,
// undoing symmetric_reduce.
MultiPoly substitute_elementary(const MultiPoly& r, int m);

}  // namespace polyalg
