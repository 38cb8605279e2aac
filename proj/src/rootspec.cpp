#include "tl/rootspec.hpp"

#include <cstdlib>

#include "tl/json_io.hpp"

namespace tl {

CriticalInfo critical_geometry(const YoungDiagram& lambda, int ell) {
  if (ell < 3)
    throw Error(ErrorCode::BadParameter,
                "root-of-unity order parameter must be at least 3");
  if (!lambda.valid()) throw Error(ErrorCode::BadParameter, "invalid shape");
  CriticalInfo info;
  info.width = lambda.width();
  info.is_critical = info.width % ell == 0;
  if (!info.is_critical && info.width > ell)
    info.nearest_left_line = info.width / ell;
  return info;
}

YoungDiagram reflection_partner(const YoungDiagram& lambda, int ell, int line) {
  CriticalInfo info = critical_geometry(lambda, ell);
  if (info.is_critical)
    throw Error(ErrorCode::NoPartner, "critical shapes have no reflection partner");
  if (line < 1) throw Error(ErrorCode::NoPartner, "critical lines are numbered from 1");
  int w = info.width;
  int axis = line * ell;
  if (std::abs(w - axis) >= ell)
    throw Error(ErrorCode::NoPartner,
                "shape is not in a strip adjacent to that critical line");
  int reflected = 2 * axis - w;
  int n = lambda.size();
  if (reflected < 1 || reflected > n + 1 || (n - (reflected - 1)) % 2 != 0)
    throw Error(ErrorCode::NoPartner, "reflected width is not a shape of this size");
  YoungDiagram partner{(n + reflected - 1) / 2, (n - reflected + 1) / 2};
  return partner;
}

std::optional<int> last_critical_hit(const BratteliPath& path, int ell) {
  std::optional<int> hit;
  for (size_t i = 0; i < path.size(); ++i)
    if (path[i].width() % ell == 0) hit = static_cast<int>(i);
  return hit;
}

BratteliPath reflect_after_last_hit(const BratteliPath& path, int ell) {
  auto hit = last_critical_hit(path, ell);
  if (!hit)
    throw Error(ErrorCode::BadParameter, "path never touches a critical line");
  int axis = path[static_cast<size_t>(*hit)].width();
  BratteliPath reflected = path;
  for (size_t i = static_cast<size_t>(*hit) + 1; i < path.size(); ++i) {
    int w = 2 * axis - path[i].width();
    int n = path[i].size();
    reflected[i] = YoungDiagram{(n + w - 1) / 2, (n - w + 1) / 2};
  }
  if (!is_valid_path(reflected))
    throw Error(ErrorCode::BadParameter, "reflected path is not a lattice path");
  return reflected;
}

Morphism<CycloRing> evaluate_morphism(const Morphism<GenericRing>& a, int ell) {
  CycloRing ring(ell);
  Morphism<CycloRing> out(ring, a.dom(), a.cod());
  const HomBasis& basis = a.basis();
  for (const auto& [rank, coeff] : a.terms()) {
    try {
      out.add_term(rank, specialize(coeff, ell));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotEvaluable) throw;
      throw Error(ErrorCode::NotEvaluable,
                  "coefficient of diagram " +
                      diagram_to_json(basis.diagram(rank)).dump() +
                      " has a pole at the root of unity");
    }
  }
  return out;
}

std::vector<BratteliPath> z_left_paths(const YoungDiagram& lambda, int ell) {
  CriticalInfo info = critical_geometry(lambda, ell);
  if (info.is_critical)
    throw Error(ErrorCode::CriticalDiagram,
                "left idempotent is defined for non-critical shapes only");
  std::vector<BratteliPath> selected;
  if (!info.nearest_left_line) {
    // Strictly left of the first line: paths that never touch any line.
    for (auto& path : paths_to(lambda))
      if (!last_critical_hit(path, ell)) selected.push_back(std::move(path));
    return selected;
  }
  int axis = *info.nearest_left_line * ell;
  std::vector<BratteliPath> reflected;
  for (auto& path : paths_to(lambda)) {
    auto hit = last_critical_hit(path, ell);
    if (!hit || path[static_cast<size_t>(*hit)].width() != axis) continue;
    reflected.push_back(reflect_after_last_hit(path, ell));
    selected.push_back(std::move(path));
  }
  selected.insert(selected.end(), reflected.begin(), reflected.end());
  return selected;
}

Morphism<GenericRing> z_left(const YoungDiagram& lambda, int ell) {
  int n = lambda.size();
  Morphism<GenericRing> sum = Morphism<GenericRing>::zero(GenericRing{}, n, n);
  for (const auto& path : z_left_paths(lambda, ell)) sum = sum + path_idempotent(path);
  return sum;
}

std::pair<Morphism<GenericRing>, Morphism<GenericRing>> z_reg_nil(int n, int ell) {
  if (ell < 3)
    throw Error(ErrorCode::BadParameter,
                "root-of-unity order parameter must be at least 3");
  const GenericRing ring;
  Morphism<GenericRing> reg = Morphism<GenericRing>::zero(ring, n, n);
  if (n == 0) {
    reg = Morphism<GenericRing>::identity(ring, 0);
  } else {
    for (const auto& path : all_paths(n))
      if (!last_critical_hit(path, ell)) reg = reg + path_idempotent(path);
  }
  Morphism<GenericRing> nil = Morphism<GenericRing>::identity(ring, n) - reg;
  return {std::move(reg), std::move(nil)};
}

std::vector<BlockInfo> block_report(int n, int ell) {
  std::vector<BlockInfo> blocks;
  for (const auto& lambda : shapes_of_size(n)) {
    BlockInfo info;
    info.lambda = lambda;
    info.critical = lambda.width() % ell == 0;
    Morphism<GenericRing> z =
        info.critical ? central_idempotent(lambda) : z_left(lambda, ell);
    info.path_count = info.critical
                          ? static_cast<int>(paths_to(lambda).size())
                          : static_cast<int>(z_left_paths(lambda, ell).size());
    try {
      evaluate_morphism(z, ell);
      info.evaluable = true;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NotEvaluable) throw;
      info.evaluable = false;
    }
    blocks.push_back(std::move(info));
  }
  return blocks;
}

Json block_report_json(int n, int ell) {
  Json blocks = Json::array();
  for (const auto& b : block_report(n, ell))
    blocks.push_back(Json{{"lambda", Json::array({b.lambda.rows1, b.lambda.rows2})},
                          {"kind", b.critical ? "critical" : "left"},
                          {"path_count", b.path_count},
                          {"evaluable", b.evaluable}});
  return Json{{"n", n}, {"ell", ell}, {"blocks", blocks}};
}

}  // namespace tl
