#include "ecdiv/supersingular.hpp"

#include <stdexcept>

namespace ecdiv {
namespace {

bool is_prime(int64_t p) {
  if (p < 2) return false;
  for (int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

int64_t floormod(int64_t a, int64_t m) {
  int64_t r = a % m;
  return r < 0 ? r + m : r;
}

int64_t powmod(int64_t base, int64_t e, int64_t p) {
  int64_t acc = 1;
  base = floormod(base, p);
  while (e > 0) {
    if (e & 1) acc = (acc * base) % p;
    base = (base * base) % p;
    e >>= 1;
  }
  return acc;
}

// Legendre symbol via Euler's criterion: 1, -1, or 0.
int64_t chi(int64_t v, int64_t p) {
  v = floormod(v, p);
  if (v == 0) return 0;
  return powmod(v, (p - 1) / 2, p) == 1 ? 1 : -1;
}

int64_t invmod(int64_t a, int64_t p) { return powmod(a, p - 2, p); }

}  // namespace

int64_t frobenius_trace(int64_t p, int64_t a, int64_t b) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("characteristic must be a prime >= 5");
  a = floormod(a, p);
  b = floormod(b, p);
  int64_t disc = floormod(4 * ((a * a) % p) % p * a + 27 * ((b * b) % p), p);
  if (disc == 0) throw std::invalid_argument("curve is singular");
  int64_t sum = 0;
  for (int64_t x = 0; x < p; ++x) {
    int64_t rhs = floormod(((x * x) % p) * x + a * x + b, p);
    sum += chi(rhs, p);
  }
  // #E(F_p) = p + 1 + sum of chi over x; trace = p + 1 - #E.
  return -sum;
}

std::vector<int64_t> supersingular_j_list(int64_t p) {
  if (!is_prime(p) || p < 5 || p > 50) {
    throw std::invalid_argument("supersingular scan is specified for primes 5 <= p <= 50");
  }
  int64_t j1728 = floormod(1728, p);
  std::vector<int64_t> out;
  for (int64_t j = 0; j < p; ++j) {
    int64_t a;
    int64_t b;
    if (j == 0) {
      a = 0;
      b = 1;
    } else if (j == j1728) {
      a = 1;
      b = 0;
    } else {
      int64_t c = (j % p) * invmod(floormod(j1728 - j, p), p) % p;
      a = floormod(3 * c, p);
      b = floormod(2 * c, p);
      // Sanity: the family really does hit the requested j-invariant.
      int64_t a3 = ((a * a) % p) * a % p;
      int64_t denom = floormod(4 * a3 + 27 * ((b * b) % p), p);
      int64_t jj = floormod(j1728 % p * floormod(4 * a3, p) % p * invmod(denom, p), p);
      if (jj != j) throw std::logic_error("j-invariant round trip failed");
    }
    int64_t trace = frobenius_trace(p, a, b);
    if (floormod(trace, p) == 0) out.push_back(j);
  }
  return out;
}

}  // namespace ecdiv
