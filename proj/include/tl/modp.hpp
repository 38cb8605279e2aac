#pragma once

#include <cstdint>
#include <vector>

namespace tl {

// Rank of a matrix over the prime field F_p, p < 2^31. Used as a
// full-rank certificate for generic Gram matrices: a nonzero minor mod p
// at a specialized parameter value stays nonzero over the rational
// function field, so the mod-p rank is a lower bound for the generic
// rank.
int modp_rank(std::vector<std::vector<std::uint64_t>> mat, std::uint64_t p);

std::uint64_t modp_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p);
std::uint64_t modp_inv(std::uint64_t a, std::uint64_t p);

}  // namespace tl
