#include "matgrp/sl2.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace matgrp {

MatGroup::MatGroup(int64_t modulus, std::vector<Mat2Mod> elements,
                   std::vector<Mat2Mod> generators)
    : modulus_(modulus),
      elements_(std::move(elements)),
      generators_(std::move(generators)) {
  std::sort(elements_.begin(), elements_.end(),
            [](const Mat2Mod& l, const Mat2Mod& r) { return l.key() < r.key(); });
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  keys_.reserve(elements_.size() * 2);
  for (const Mat2Mod& e : elements_) {
    if (e.modulus() != modulus_) throw modcore::ModulusMismatch();
    keys_.insert(e.key());
  }
}

bool MatGroup::all_special_linear() const {
  int64_t one = modulus_ == 1 ? 0 : 1;
  for (const Mat2Mod& e : elements_) {
    if (e.det() != one) return false;
  }
  return true;
}

bool MatGroup::is_normal_in(const MatGroup& ambient) const {
  for (const Mat2Mod& g : ambient.elements()) {
    Mat2Mod ginv = g.inverse();
    for (const Mat2Mod& h : elements_) {
      if (!contains(g * h * ginv)) return false;
    }
  }
  return true;
}

uint64_t sl2_order_formula(int64_t M) {
  // M^3 * prod_{q | M} (1 - 1/q^2), computed as a product over prime powers.
  uint64_t order = static_cast<uint64_t>(M) * M * M;
  int64_t rest = M;
  for (int64_t q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      order = order / (q * q) * (q * q - 1);
      while (rest % q == 0) rest /= q;
    }
  }
  if (rest > 1) order = order / (rest * rest) * (rest * rest - 1);
  return order;
}

MatGroup enumerate_sl2(int64_t M, int64_t bound) {
  if (M < 1) throw std::invalid_argument("modulus must be >= 1");
  if (M > bound) throw BoundExceeded();
  int64_t one = M == 1 ? 0 : 1;
  std::vector<Mat2Mod> elems;
  elems.reserve(sl2_order_formula(M));
  for (int64_t a = 0; a < M; ++a) {
    for (int64_t b = 0; b < M; ++b) {
      for (int64_t c = 0; c < M; ++c) {
        for (int64_t d = 0; d < M; ++d) {
          int64_t det = (a * d - b * c) % M;
          if (det < 0) det += M;
          if (det == one) elems.emplace_back(a, b, c, d, M);
        }
      }
    }
  }
  std::vector<Mat2Mod> gens{Mat2Mod(1, 1, 0, 1, M), Mat2Mod(1, 0, 1, 1, M)};
  return MatGroup(M, std::move(elems), std::move(gens));
}

MatGroup subgroup_s(int64_t Nl, int64_t N, int64_t bound) {
  if (N < 1 || Nl % N != 0) throw NotADivisor();
  MatGroup big = enumerate_sl2(Nl, bound);
  Mat2Mod idN = Mat2Mod::identity(N);
  std::vector<Mat2Mod> elems;
  for (const Mat2Mod& e : big.elements()) {
    if (e.reduce(N) == idN) elems.push_back(e);
  }
  return MatGroup(Nl, std::move(elems));
}

PiIsoReport check_pi_iso(int64_t N, int64_t l) {
  if (std::gcd(N, l) != 1) throw NotCoprime();
  MatGroup S = subgroup_s(N * l, N);
  MatGroup target = enumerate_sl2(l);
  std::unordered_set<uint64_t> image;
  for (const Mat2Mod& e : S.elements()) image.insert(e.reduce(l).key());
  PiIsoReport r;
  r.subgroup_order = S.order();
  r.image_order = image.size();
  r.target_order = target.order();
  r.injective = image.size() == S.order();
  r.surjective = image.size() == target.order();
  return r;
}

MatGroup commutator_subgroup(const MatGroup& G, size_t bound) {
  auto mul = [](const Mat2Mod& x, const Mat2Mod& y) { return x * y; };
  auto inv = [](const Mat2Mod& x) { return x.inverse(); };
  std::vector<Mat2Mod> elems = commutator_closure(
      G.elements(), mul, inv, Mat2Mod::identity(G.modulus()), bound);
  return MatGroup(G.modulus(), std::move(elems));
}

uint64_t abelianization_order(const MatGroup& G, size_t bound) {
  return G.order() / commutator_subgroup(G, bound).order();
}

bool prime_index_normal_exists(const MatGroup& G, int64_t l, size_t bound) {
  return abelianization_order(G, bound) % static_cast<uint64_t>(l) == 0;
}

KernelDivisibilityReport kernel_divisibility_check(
    const MatGroup& G, const MatGroup& H,
    const std::function<Mat2Mod(const Mat2Mod&)>& phi, size_t bound) {
  // Image table keyed by source matrix; also powers the surjectivity check.
  std::unordered_map<uint64_t, Mat2Mod> image;
  image.reserve(G.order() * 2);
  std::unordered_set<uint64_t> image_keys;
  for (const Mat2Mod& g : G.elements()) {
    Mat2Mod y = phi(g);
    if (!H.contains(y)) throw NotSurjective();
    image.emplace(g.key(), y);
    image_keys.insert(y.key());
  }
  if (image_keys.size() != H.order()) throw NotSurjective();

  for (const Mat2Mod& g1 : G.elements()) {
    const Mat2Mod& f1 = image.at(g1.key());
    for (const Mat2Mod& g2 : G.elements()) {
      if (image.at((g1 * g2).key()) != f1 * image.at(g2.key())) {
        throw NotAHomomorphism();
      }
    }
  }

  Mat2Mod idH = Mat2Mod::identity(H.modulus());
  uint64_t kernel = 0;
  for (const Mat2Mod& g : G.elements()) {
    if (image.at(g.key()) == idH) ++kernel;
  }

  KernelDivisibilityReport r;
  r.g_ab_order = abelianization_order(G, bound);
  r.kernel_order = kernel;
  r.h_ab_order = abelianization_order(H, bound);
  r.divides = (kernel * r.h_ab_order) % r.g_ab_order == 0;
  return r;
}

}  // namespace matgrp
