#include "tl/modp.hpp"

#include "tl/errors.hpp"

namespace tl {

std::uint64_t modp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t acc = 1 % p;
  b %= p;
  while (e > 0) {
    if (e & 1u) acc = acc * b % p;
    b = b * b % p;
    e >>= 1u;
  }
  return acc;
}

std::uint64_t modp_inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero mod p");
  return modp_pow(a, p - 2, p);  // p prime
}

int modp_rank(std::vector<std::vector<std::uint64_t>> mat, std::uint64_t p) {
  if (mat.empty()) return 0;
  const size_t rows = mat.size(), cols = mat[0].size();
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t pivot = r;
    while (pivot < rows && mat[pivot][col] % p == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(mat[pivot], mat[r]);
    std::uint64_t inv = modp_inv(mat[r][col], p);
    for (size_t c = col; c < cols; ++c) mat[r][c] = mat[r][c] % p * inv % p;
    for (size_t i = r + 1; i < rows; ++i) {
      std::uint64_t f = mat[i][col] % p;
      if (f == 0) continue;
      for (size_t c = col; c < cols; ++c)
        mat[i][c] = (mat[i][c] + (p - f) * mat[r][c]) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace tl
