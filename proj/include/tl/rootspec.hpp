#pragma once

#include <optional>

#include "tl/json_io.hpp"
#include "tl/tower.hpp"

namespace tl {

// Position of a shape relative to the critical lines w = ell, 2*ell, ...
// (widths divisible by ell are critical; everything else sits strictly
// inside a strip between consecutive lines, or left of the first).
struct CriticalInfo {
  int width = 0;
  bool is_critical = false;
  // Index m >= 1 of the nearest critical line to the left (w > m*ell),
  // absent for shapes strictly left of the first line and for critical
  // shapes themselves.
  std::optional<int> nearest_left_line;
};

CriticalInfo critical_geometry(const YoungDiagram& lambda, int ell);

// The non-critical shape of the same size with width reflected across
// the line-th critical line. Throws NoPartner when the reflected width
// is not a valid shape or leaves the adjacent strips.
YoungDiagram reflection_partner(const YoungDiagram& lambda, int ell, int line);

// Index of the last shape on the path whose width is critical, or
// nullopt when the path never touches a critical line.
std::optional<int> last_critical_hit(const BratteliPath& path, int ell);

// Reflect the part of the path after its last critical hit.
BratteliPath reflect_after_last_hit(const BratteliPath& path, int ell);

// Coefficient-wise specialization at the primitive 2*ell-th root of
// unity. Throws NotEvaluable, naming the first offending diagram.
Morphism<CycloRing> evaluate_morphism(const Morphism<GenericRing>& a, int ell);

// The evaluable idempotent attached to a non-critical shape: the sum of
// path idempotents over paths whose last critical hit is the nearest
// line left of the shape, together with their reflections after that
// hit. For shapes strictly left of the first line it is the sum over
// paths that never touch a critical line.
Morphism<GenericRing> z_left(const YoungDiagram& lambda, int ell);
// The paths that contribute to z_left, in deterministic order.
std::vector<BratteliPath> z_left_paths(const YoungDiagram& lambda, int ell);

// z_reg = sum of path idempotents over paths strictly left of the first
// critical line; z_nil is its complement in the identity. Both are
// evaluable at the root of unity.
std::pair<Morphism<GenericRing>, Morphism<GenericRing>> z_reg_nil(int n, int ell);

// One row per block of the specialized algebra End(n): the critical
// shapes with their central idempotents and the non-critical shapes with
// their left sums.
struct BlockInfo {
  YoungDiagram lambda;
  bool critical = false;
  int path_count = 0;
  bool evaluable = false;
};

std::vector<BlockInfo> block_report(int n, int ell);

// JSON form: {"n", "ell", "blocks": [{"lambda": [r1, r2],
// "kind": "critical"|"left", "path_count", "evaluable"}, ...]}.
Json block_report_json(int n, int ell);

}  // namespace tl
