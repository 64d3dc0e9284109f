#pragma once

#include <cstdint>
#include <vector>

namespace ecdiv {

// Trace of Frobenius of y^2 = x^3 + a x + b over F_p by exhaustive point
// counting; requires a nonsingular curve.
int64_t frobenius_trace(int64_t p, int64_t a, int64_t b);

// All j in F_p whose curves have trace divisible by p, i.e. the supersingular
// j-invariants.  For j outside {0, 1728 mod p} the representative curve is
// y^2 = x^3 + 3j/(1728-j) x + 2j/(1728-j); the two special j use y^2 = x^3+1
// and y^2 = x^3+x.
std::vector<int64_t> supersingular_j_list(int64_t p);

}  // namespace ecdiv
