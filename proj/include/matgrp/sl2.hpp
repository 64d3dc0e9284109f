#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "matgrp/closure.hpp"
#include "matgrp/mat2.hpp"

namespace matgrp {

struct BoundExceeded : std::invalid_argument {
  BoundExceeded() : std::invalid_argument("modulus exceeds the configured enumeration bound") {}
};

struct NotCoprime : std::invalid_argument {
  NotCoprime() : std::invalid_argument("arguments are not coprime") {}
};

struct NotSurjective : std::runtime_error {
  NotSurjective() : std::runtime_error("map is not surjective onto the target group") {}
};

struct NotAHomomorphism : std::runtime_error {
  NotAHomomorphism() : std::runtime_error("map does not respect multiplication") {}
};

// Finite subgroup of GL2(Z/MZ) stored as an explicit element set, sorted by
// key so iteration order is deterministic.
class MatGroup {
 public:
  MatGroup(int64_t modulus, std::vector<Mat2Mod> elements,
           std::vector<Mat2Mod> generators = {});

  int64_t modulus() const { return modulus_; }
  size_t order() const { return elements_.size(); }
  const std::vector<Mat2Mod>& elements() const { return elements_; }
  const std::vector<Mat2Mod>& generators() const { return generators_; }

  bool contains(const Mat2Mod& x) const {
    return x.modulus() == modulus_ && keys_.count(x.key()) > 0;
  }

  bool all_special_linear() const;

  // Exhaustive normality check: g h g^{-1} stays inside for every g in ambient.
  bool is_normal_in(const MatGroup& ambient) const;

 private:
  int64_t modulus_;
  std::vector<Mat2Mod> elements_;
  std::vector<Mat2Mod> generators_;
  std::unordered_set<uint64_t> keys_;
};

inline constexpr int64_t kDefaultSl2Bound = 30;

// All det-1 matrices over Z/MZ by direct scan of M^4 candidates. The two
// standard unipotents are recorded as generators; their closure equals the
// scan (checked in tests, which keeps the two constructions independent).
MatGroup enumerate_sl2(int64_t M, int64_t bound = kDefaultSl2Bound);

// |SL2(Z/MZ)| = M^3 prod_{q | M} (1 - q^{-2}) without enumeration.
uint64_t sl2_order_formula(int64_t M);

// Matrices in SL2(Z/NlZ) congruent to the identity mod N.
MatGroup subgroup_s(int64_t Nl, int64_t N, int64_t bound = kDefaultSl2Bound);

struct PiIsoReport {
  size_t subgroup_order = 0;
  size_t image_order = 0;
  size_t target_order = 0;
  bool injective = false;
  bool surjective = false;
  bool pass() const { return injective && surjective; }
};

// Mod-l reduction restricted to subgroup_s(N*l, N), checked to biject onto
// SL2(F_l); requires gcd(N, l) = 1.
PiIsoReport check_pi_iso(int64_t N, int64_t l);

MatGroup commutator_subgroup(const MatGroup& G,
                             size_t bound = kDefaultClosureBound);

uint64_t abelianization_order(const MatGroup& G,
                              size_t bound = kDefaultClosureBound);

// True iff an index-l normal subgroup exists, decided through the
// abelianization: prime-index quotients are abelian, so such a subgroup
// exists iff l divides |G^ab|.
bool prime_index_normal_exists(const MatGroup& G, int64_t l,
                               size_t bound = kDefaultClosureBound);

struct KernelDivisibilityReport {
  uint64_t g_ab_order = 0;
  uint64_t kernel_order = 0;
  uint64_t h_ab_order = 0;
  bool divides = false;
};

// Verifies phi is a surjective homomorphism G -> H (exhaustively on all
// pairs), then checks |G^ab| divides |ker phi| * |H^ab|.
KernelDivisibilityReport kernel_divisibility_check(
    const MatGroup& G, const MatGroup& H,
    const std::function<Mat2Mod(const Mat2Mod&)>& phi,
    size_t bound = kDefaultClosureBound);

}  // namespace matgrp
