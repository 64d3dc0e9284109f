#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

namespace matgrp {

struct ClosureBoundExceeded : std::runtime_error {
  ClosureBoundExceeded() : std::runtime_error("subgroup closure exceeded the configured bound") {}
};

inline constexpr size_t kDefaultClosureBound = 1'000'000;

// Smallest multiplication-closed set containing the generators and identity.
// Finiteness supplies inverses. E needs key() -> uint64_t and operator==.
template <class E, class Mul>
std::vector<E> closure_subgroup(const std::vector<E>& generators, Mul mul,
                                const E& identity,
                                size_t bound = kDefaultClosureBound) {
  std::vector<E> elems{identity};
  std::unordered_set<uint64_t> seen{identity.key()};
  for (size_t i = 0; i < elems.size(); ++i) {
    for (const E& g : generators) {
      E x = mul(elems[i], g);
      if (seen.insert(x.key()).second) {
        if (elems.size() >= bound) throw ClosureBoundExceeded();
        elems.push_back(x);
      }
    }
  }
  std::sort(elems.begin(), elems.end(),
            [](const E& l, const E& r) { return l.key() < r.key(); });
  return elems;
}

// Closure of all commutators ghg^{-1}h^{-1} of the given elements.
template <class E, class Mul, class Inv>
std::vector<E> commutator_closure(const std::vector<E>& elements, Mul mul,
                                  Inv inv, const E& identity,
                                  size_t bound = kDefaultClosureBound) {
  std::vector<E> inverses;
  inverses.reserve(elements.size());
  for (const E& e : elements) inverses.push_back(inv(e));

  std::vector<E> comms;
  std::unordered_set<uint64_t> seen;
  for (size_t i = 0; i < elements.size(); ++i) {
    for (size_t j = 0; j < elements.size(); ++j) {
      E c = mul(mul(elements[i], elements[j]), mul(inverses[i], inverses[j]));
      if (seen.insert(c.key()).second) comms.push_back(c);
    }
  }
  return closure_subgroup(comms, mul, identity, bound);
}

}  // namespace matgrp
