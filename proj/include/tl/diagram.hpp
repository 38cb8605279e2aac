#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "tl/errors.hpp"

namespace tl {

// A planar (m,n)-diagram: a non-crossing perfect pairing of m points on
// the top edge (the domain) and n points on the bottom edge (the
// codomain). Point indices: top 0..m-1 left to right, bottom m..m+n-1
// left to right; match[i] is the partner of point i. Equal pairings are
// equal diagrams.
struct Diagram {
  int top = 0;
  int bot = 0;
  std::vector<int> match;

  int points() const { return top + bot; }
  bool operator==(const Diagram& rhs) const = default;
};

// Full validity: sizes, fixed-point-free involution, even total, and the
// non-crossing condition under the boundary walk (top left-to-right,
// then bottom right-to-left).
bool is_valid_diagram(const Diagram& d);

Diagram identity_diagram(int n);
// The Hom(0,2) elementary morphism: two bottom points joined.
Diagram cap_diagram();
// The Hom(2,0) elementary morphism: two top points joined.
Diagram cup_diagram();
// Generator e_i(n) in End(n), 1 <= i <= n-1: joins top i,i+1 and bottom
// i,i+1 (1-indexed strands), vertical elsewhere.
Diagram generator_diagram(int i, int n);

// Stitch a on top of b through their shared middle edge (a's codomain =
// b's domain) and drop closed interior loops. Returns the reduced
// diagram together with the number of loops removed.
std::pair<Diagram, int> compose_diagrams(const Diagram& b, const Diagram& a);

// Horizontal juxtaposition; a keeps its indices, b is shifted right.
Diagram tensor_diagrams(const Diagram& a, const Diagram& b);

// Top-bottom flip preserving left-right order; an involution.
Diagram transpose_diagram(const Diagram& a);

// Number of closed components after closing an endomorphism diagram
// around the side (top i joined to bottom i).
int closure_loops(const Diagram& d);

// Exhaustive basis of Hom(m,n), enumerated once, ordered
// lexicographically by match array, with O(1) rank lookup. The registry
// behaves as a concurrent insert-if-absent table with deterministic
// content.
class HomBasis {
 public:
  HomBasis(int m, int n);

  int dom() const { return m_; }
  int cod() const { return n_; }
  uint32_t size() const { return static_cast<uint32_t>(diagrams_.size()); }
  const Diagram& diagram(uint32_t rank) const { return diagrams_[rank]; }
  const std::vector<Diagram>& diagrams() const { return diagrams_; }

  uint32_t rank_of(const Diagram& d) const;

 private:
  int m_, n_;
  std::vector<Diagram> diagrams_;
};

const HomBasis& hom_basis(int m, int n);

inline std::vector<Diagram> enumerate_diagrams(int m, int n) {
  return hom_basis(m, n).diagrams();
}

// Catalan number C(k); k <= 30 keeps the result in range.
std::uint64_t catalan(int k);

}  // namespace tl
