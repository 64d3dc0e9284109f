#include "polyalg/symmetric.hpp"

#include <stdexcept>

namespace polyalg {
namespace {

Var root_var(int i) { return static_cast<Var>(kVarA1 + i); }
Var elem_var(int i) { return static_cast<Var>(kVarE1 + i); }

void check_arity(int m) {
  if (m < 1 || m > 4) throw std::invalid_argument("root count must be between 1 and 4");
}

}  // namespace

MultiPoly elementary_symmetric(int64_t characteristic, int i, int m) {
  check_arity(m);
  if (i < 0 || i > m) throw std::invalid_argument("symmetric index out of range");
  MultiPoly sum(characteristic);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (__builtin_popcount(mask) != i) continue;
    MultiPoly prod = MultiPoly::constant(characteristic, 1);
    for (int j = 0; j < m; ++j) {
      if (mask & (1u << j)) prod = prod * MultiPoly::variable(characteristic, root_var(j));
    }
    sum = sum + prod;
  }
  return sum;
}

MultiPoly symmetric_reduce(const MultiPoly& q, int m) {
  check_arity(m);
  for (int v = 0; v < kVarCount; ++v) {
    bool allowed = v >= kVarA1 && v < kVarA1 + m;
    if (!allowed && q.uses(static_cast<Var>(v))) {
      throw std::invalid_argument("input must use only the root variables a1..am");
    }
  }
  for (int i = 0; i + 1 < m; ++i) {
    if (q.transpose_vars(root_var(i), root_var(i + 1)) != q) throw NotSymmetric();
  }

  int64_t p = q.characteristic();
  MultiPoly rest = q;
  MultiPoly out(p);
  while (!rest.is_zero()) {
    const Term& lead = rest.terms().front();
    std::array<int, 4> lambda = {0, 0, 0, 0};
    for (int i = 0; i < m; ++i) {
      lambda[static_cast<size_t>(i)] = lead.exp[static_cast<size_t>(kVarA1 + i)];
    }
    for (int i = 0; i + 1 < m; ++i) {
      if (lambda[static_cast<size_t>(i)] < lambda[static_cast<size_t>(i + 1)]) {
        throw std::logic_error("leading exponents of a symmetric polynomial must descend");
      }
    }
    MultiPoly in_roots = MultiPoly::constant(p, lead.coeff);
    MultiPoly in_elems = MultiPoly::constant(p, lead.coeff);
    for (int i = 0; i < m; ++i) {
      int next = (i + 1 < m) ? lambda[static_cast<size_t>(i + 1)] : 0;
      uint32_t e = static_cast<uint32_t>(lambda[static_cast<size_t>(i)] - next);
      if (e == 0) continue;
      in_roots = in_roots * elementary_symmetric(p, i + 1, m).pow(e);
      in_elems = in_elems * MultiPoly::variable(p, elem_var(i), static_cast<uint16_t>(e));
    }
    rest = rest - in_roots;
    out = out + in_elems;
  }
  return out;
}

MultiPoly substitute_elementary(const MultiPoly& r, int m) {
  check_arity(m);
  int64_t p = r.characteristic();
  MultiPoly out = r;
  for (int i = 0; i < m; ++i) {
    out = out.substitute(elem_var(i), elementary_symmetric(p, i + 1, m));
  }
  return out;
}

}  // namespace polyalg
