#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tl/morphism.hpp"

namespace tl {

// Two-row Young diagram [rows1 >= rows2 >= 0].
struct YoungDiagram {
  int rows1 = 0;
  int rows2 = 0;

  int size() const { return rows1 + rows2; }
  int width() const { return rows1 - rows2 + 1; }
  bool valid() const { return rows2 >= 0 && rows1 >= rows2; }

  bool operator==(const YoungDiagram&) const = default;
  auto operator<=>(const YoungDiagram&) const = default;

  std::string str() const;
};

// Chain of shapes from the empty diagram, each step adding one box;
// equivalently a standard two-row tableau, or the width sequence
// 1 = w_0, w_1, ..., w_n with |w_{i+1} - w_i| = 1 and w_i >= 1.
using BratteliPath = std::vector<YoungDiagram>;

// The 1 or 2 shapes reachable by adding a box.
std::vector<YoungDiagram> young_successors(const YoungDiagram& lambda);

// Number of standard tableaux of the shape (ballot count).
std::int64_t count_tableaux(const YoungDiagram& lambda);

// All two-row shapes of the given size, width ascending.
std::vector<YoungDiagram> shapes_of_size(int n);

// All paths of the given length, in deterministic order (at each step
// the row-1 extension before the row-2 extension).
std::vector<BratteliPath> all_paths(int length);
std::vector<BratteliPath> paths_to(const YoungDiagram& lambda);

bool is_valid_path(const BratteliPath& path);
std::vector<int> path_widths(const BratteliPath& path);
BratteliPath path_from_widths(const std::vector<int>& widths);
// "1-2-1-2" style key used for cache file names.
std::string path_key(const BratteliPath& path);
BratteliPath path_from_key(const std::string& key);

// The leveled add-one-box graph on two-row shapes.
struct BratteliGraph {
  int levels = 0;  // vertices exist for sizes 0..levels
  std::vector<std::vector<YoungDiagram>> vertices;
  // edges[k] lists (index at level k, index at level k+1)
  std::vector<std::vector<std::pair<int, int>>> edges;
};

BratteliGraph bratteli_graph(int levels);

// Minimal idempotent of End(n) attached to a path of length n, built
// inductively along the tower (generic coefficients only; evaluation at
// roots of unity is a separate concern). The family over all paths of
// one length is a complete set of mutually orthogonal idempotents.
Morphism<GenericRing> path_idempotent(const BratteliPath& path);

// Central idempotent z_lambda = sum of path idempotents ending at the shape.
Morphism<GenericRing> central_idempotent(const YoungDiagram& lambda);

// Jones-Wenzl projector: the path idempotent of the single-row path.
Morphism<GenericRing> jones_wenzl(int n);
// Its evaluation at the primitive 2*ell-th root of unity; defined only
// for n <= ell - 1 (otherwise the coefficients have poles).
Morphism<CycloRing> jones_wenzl_cyclo(int n, int ell);

}  // namespace tl
