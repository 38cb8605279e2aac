#pragma once

#include <optional>

#include "tl/json_io.hpp"
#include "tl/linalg.hpp"
#include "tl/random.hpp"
#include "tl/tower.hpp"

namespace tl {

// Loop counts of the trace pairing on Hom(m,n): entry (i,j) is the
// number of closed components of transpose(X_i) o X_j closed up, where X
// is the canonical enumeration of Hom(m,n). Shared by every ring.
const std::vector<std::vector<int>>& gram_loop_counts(int m, int n);

// Gram matrix of the trace pairing with entries d^loops in the given
// ring; kernel coordinates are in enumeration order of Hom(m,n).
template <class Ring>
Matrix<Ring> gram_matrix(int m, int n, const Ring& ring) {
  if ((m + n) % 2 != 0)
    throw Error(ErrorCode::ParityError, "Hom space of odd parity is zero");
  const auto& loops = gram_loop_counts(m, n);
  int size = static_cast<int>(loops.size());
  Matrix<Ring> g(ring, size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      g.at(i, j) = ring.loop_pow(loops[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  return g;
}

// Kernel of the Gram pairing: the negligible part of Hom(m,n).
template <class Ring>
SubspaceBasis<Ring> negligible_basis(int m, int n, const Ring& ring) {
  Matrix<Ring> g = gram_matrix(m, n, ring);
  return kernel_basis(std::move(g), m, n);
}

// Pairing of a sparse coefficient vector against the Gram matrix;
// nonzero result = some opposite diagram has nonzero trace pairing.
template <class Ring>
std::optional<int> gram_pairing_witness(int m, int n, const Ring& ring,
                                        const SparseVec<typename Ring::Value>& v) {
  const auto& loops = gram_loop_counts(m, n);
  int size = static_cast<int>(loops.size());
  for (int i = 0; i < size; ++i) {
    typename Ring::Value acc = ring.zero();
    for (const auto& [j, c] : v)
      acc += c * ring.loop_pow(loops[static_cast<size_t>(i)][static_cast<size_t>(j)]);
    if (!acc.is_zero()) return i;
  }
  return std::nullopt;
}

template <class Ring>
bool is_negligible(const Morphism<Ring>& a) {
  SparseVec<typename Ring::Value> v;
  for (const auto& [r, c] : a.terms()) v.emplace_back(static_cast<int>(r), c);
  return !gram_pairing_witness(a.dom(), a.cod(), a.ring(), v).has_value();
}

struct TruncationOptions {
  int max_extra_strands = 12;  // cap on the padding width j
  bool certify = true;         // closure certificates after spanning
  std::uint64_t seed = 1;      // stream for the sampled sandwich checks
  int sandwich_samples = 32;
  bool even_only = false;      // restrict middle objects to even sizes
};

// Span of { u o (g ox 1_j) o v } inside Hom(m,n) over single diagrams
// u, v and padding widths j, grown until the dimension is stable for two
// consecutive admissible j. Throws NotStabilized at the cap.
template <class Ring>
SubspaceBasis<Ring> ideal_truncation(const Morphism<Ring>& g, int m, int n,
                                     const TruncationOptions& opts = {});

// ---- verification reports ----

struct CellReport {
  int m = 0;
  int n = 0;
  int neg_dim = 0;
  int ideal_dim = 0;
  bool equal = false;
  std::uint64_t seed = 0;
};

struct VerifyReport {
  std::optional<int> ell;  // absent for the generic sweep
  bool even_only = false;
  std::vector<CellReport> cells;
  bool pass = false;

  Json to_json() const;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  int jobs = 1;
  int nonnegligible_samples = 20;  // per cell, witness search
  int negligible_samples = 20;     // per cell, ideal-closure search
  int sandwiches_per_sample = 10;
  TruncationOptions truncation;
};

// Machine check of the classification at a root of unity: for every
// even-parity cell with m, n <= max_n,
//   (a) the negligible subspace equals the truncated ideal generated by
//       the Jones-Wenzl projector at the first critical line (double
//       inclusion of echelon bases),
//   (b) seeded non-negligible morphisms admit a diagram with nonzero
//       trace pairing,
//   (c) seeded negligible morphisms stay negligible under random
//       sandwich products.
VerifyReport verify_main_theorem(int ell, int max_n, const VerifyOptions& opts = {});

// The same sweep restricted to even objects (the even tensor
// subcategory); requires odd ell so the generator is an even morphism.
VerifyReport verify_even_subcategory(int ell, int max_n, const VerifyOptions& opts = {});

// Generic-field sweep: every negligible space is zero and every nonzero
// morphism has a trace-pairing witness.
VerifyReport verify_generic(int max_n, const VerifyOptions& opts = {});

// Exact generic Gram rank for small n; certificate via two seeded
// prime-field specializations of t for larger n (a lower bound that
// meets Catalan(n) proves full rank).
int generic_gram_rank_exact(int n);
bool generic_gram_full_rank_certificate(int n, std::uint64_t seed);

// Dimension comparison of a compressed space across specialization: for
// evaluable idempotents e, f and a set of diagrams spanning A, checks
//   dim e A f (generic) == dim e(tau) A(tau) f(tau).
struct ConstancyReport {
  int generic_dim = 0;
  int specialized_dim = 0;
  bool equal = false;
};

ConstancyReport constancy_check(const Morphism<GenericRing>& e,
                                const Morphism<GenericRing>& f,
                                const std::vector<uint32_t>& diagram_ranks,
                                int m, int n, int ell);

}  // namespace tl
