#include "matgrp/product.hpp"

#include <unordered_set>

#include "matgrp/sl2.hpp"

namespace matgrp {

ProductClosureReport product_closure_report(
    int64_t m, int64_t M, const std::vector<ProductElem>& generators,
    const std::vector<ProductElem>& queries, size_t bound) {
  auto mul = [](const ProductElem& x, const ProductElem& y) { return x * y; };
  ProductElem id = ProductElem::identity(m, M);
  std::vector<ProductElem> closure = closure_subgroup(generators, mul, id, bound);

  std::unordered_set<int64_t> units_hit;
  std::unordered_set<uint64_t> mats_hit;
  std::unordered_set<uint64_t> keys;
  for (const ProductElem& e : closure) {
    units_hit.insert(e.unit().value());
    mats_hit.insert(e.matrix().key());
    keys.insert(e.key());
  }

  ProductClosureReport r;
  r.order = closure.size();
  r.unit_projection_surjective =
      units_hit.size() == modcore::unit_group(m).size();
  r.matrix_projection_surjective = mats_hit.size() == enumerate_sl2(M).order();
  for (const ProductElem& q : queries) {
    r.memberships.push_back(MembershipVerdict{q, keys.count(q.key()) > 0});
  }
  r.closure = std::move(closure);
  return r;
}

}  // namespace matgrp
