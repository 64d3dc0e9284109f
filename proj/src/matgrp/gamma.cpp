#include "matgrp/gamma.hpp"

namespace matgrp {

int64_t Mat3Mod::det() const {
  int64_t d = e_[0] * (e_[4] * e_[8] - e_[5] * e_[7]) -
              e_[1] * (e_[3] * e_[8] - e_[5] * e_[6]) +
              e_[2] * (e_[3] * e_[7] - e_[4] * e_[6]);
  return norm(d);
}

std::array<int64_t, 4> Mat3Mod::char_poly() const {
  int64_t tr = e_[0] + e_[4] + e_[8];
  // Sum of principal 2x2 minors.
  int64_t m01 = e_[0] * e_[4] - e_[1] * e_[3];
  int64_t m02 = e_[0] * e_[8] - e_[2] * e_[6];
  int64_t m12 = e_[4] * e_[8] - e_[5] * e_[7];
  int64_t s2 = m01 + m02 + m12;
  return {norm(-det()), norm(s2), norm(-tr), norm(1)};
}

namespace {

int rank_mod(std::vector<std::array<int64_t, 9>> rows, int64_t l) {
  int rank = 0;
  for (int col = 0; col < 9 && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    int64_t inv = 1;
    for (int64_t c = 1; c < l; ++c) {
      if (c * rows[rank][col] % l == 1) {
        inv = c;
        break;
      }
    }
    for (int i = 0; i < 9; ++i) rows[rank][i] = rows[rank][i] * inv % l;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      int64_t f = rows[r][col];
      for (int i = 0; i < 9; ++i) {
        rows[r][i] = ((rows[r][i] - f * rows[rank][i]) % l + l) % l;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int Mat3Mod::minimal_poly_degree() const {
  // Smallest k with M^k in the span of I, ..., M^{k-1}; a 3x3 matrix always
  // satisfies its characteristic polynomial so the answer is at most 3.
  std::vector<std::array<int64_t, 9>> rows;
  Mat3Mod power = identity(l_);
  for (int deg = 1; deg <= 3; ++deg) {
    rows.push_back(power.e_);
    if (rank_mod(rows, l_) < deg) return deg - 1;
    power = power * *this;
  }
  return 3;
}

std::string Mat3Mod::str() const {
  std::string s = "(";
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      s += std::to_string(entry(i, j));
      if (j < 2) s += " ";
    }
    if (i < 2) s += "; ";
  }
  return s + ") mod " + std::to_string(l_);
}

Mat2Mod gamma_map(int64_t x, int64_t y, int64_t z, int64_t N, int64_t l) {
  if (l < 2 || N % l != 0) throw DivisibilityViolated();
  int64_t Nl = N * l;
  return Mat2Mod(1 + N * x, N * y, N * z, 1 - N * x, Nl);
}

std::array<int64_t, 3> gamma_inverse(const Mat2Mod& X, int64_t N, int64_t l) {
  if (l < 2 || N % l != 0) throw DivisibilityViolated();
  int64_t Nl = N * l;
  if (X.modulus() != Nl) throw NotInSubgroup();
  if (X.reduce(N) != Mat2Mod::identity(N)) throw NotInSubgroup();
  if (X.det() != (Nl == 1 ? 0 : 1)) throw NotInSubgroup();
  auto lift = [&](int64_t entry, int64_t shift) {
    // entry = shift + N*w mod Nl with w well defined mod l
    int64_t diff = entry - shift;
    int64_t r = ((diff % Nl) + Nl) % Nl;
    if (r % N != 0) throw NotInSubgroup();
    return (r / N) % l;
  };
  int64_t x = lift(X.a(), 1);
  int64_t y = lift(X.b(), 0);
  int64_t z = lift(X.c(), 0);
  if (gamma_map(x, y, z, N, l) != X) throw NotInSubgroup();
  return {x, y, z};
}

Mat3Mod conj_rep(const Mat2Mod& A, int64_t N, int64_t l) {
  if (l < 2 || N % l != 0) throw DivisibilityViolated();
  int64_t Nl = N * l;
  if (A.modulus() != Nl || A.det() != (Nl == 1 ? 0 : 1)) {
    throw std::invalid_argument("conj_rep needs det-1 input mod N*l");
  }
  Mat2Mod Ainv = A.inverse();
  std::array<int64_t, 9> cols{};
  const std::array<std::array<int64_t, 3>, 3> basis = {
      {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
  for (int j = 0; j < 3; ++j) {
    Mat2Mod image = A * gamma_map(basis[j][0], basis[j][1], basis[j][2], N, l) * Ainv;
    std::array<int64_t, 3> v = gamma_inverse(image, N, l);
    for (int i = 0; i < 3; ++i) cols[i * 3 + j] = v[i];
  }
  return Mat3Mod(cols, l);
}

std::string PlaneFl::str() const {
  return "[" + std::to_string(normal[0]) + "," + std::to_string(normal[1]) +
         "," + std::to_string(normal[2]) + "] mod " + std::to_string(l);
}

std::vector<PlaneFl> all_planes(int64_t l) {
  std::vector<PlaneFl> planes;
  planes.reserve(static_cast<size_t>(l * l + l + 1));
  // First nonzero entry pinned to 1 makes each plane appear exactly once.
  for (int64_t n2 = 0; n2 < l; ++n2) {
    for (int64_t n3 = 0; n3 < l; ++n3) {
      planes.push_back(PlaneFl{{1, n2, n3}, l});
    }
  }
  for (int64_t n3 = 0; n3 < l; ++n3) planes.push_back(PlaneFl{{0, 1, n3}, l});
  planes.push_back(PlaneFl{{0, 0, 1}, l});
  return planes;
}

bool plane_invariant(const Mat3Mod& M, const PlaneFl& P) {
  // Spanning vectors of n.x = 0, by position of the leading 1 in n.
  std::array<std::array<int64_t, 3>, 2> span{};
  const auto& n = P.normal;
  if (n[0] == 1) {
    span = {{{-n[1], 1, 0}, {-n[2], 0, 1}}};
  } else if (n[1] == 1) {
    span = {{{1, 0, 0}, {0, -n[2], 1}}};
  } else {
    span = {{{1, 0, 0}, {0, 1, 0}}};
  }
  for (const auto& v : span) {
    std::array<int64_t, 3> w = M.apply({((v[0] % P.l) + P.l) % P.l,
                                        ((v[1] % P.l) + P.l) % P.l,
                                        ((v[2] % P.l) + P.l) % P.l});
    int64_t dot = (n[0] * w[0] + n[1] * w[1] + n[2] * w[2]) % P.l;
    if (dot != 0) return false;
  }
  return true;
}

std::vector<PlaneFl> invariant_planes(const std::vector<Mat3Mod>& Ms, int64_t l) {
  std::vector<PlaneFl> out;
  for (const PlaneFl& P : all_planes(l)) {
    bool keep = true;
    for (const Mat3Mod& M : Ms) {
      if (!plane_invariant(M, P)) {
        keep = false;
        break;
      }
    }
    if (keep) out.push_back(P);
  }
  return out;
}

}  // namespace matgrp
