#include "tl/tower.hpp"

#include <sstream>

#include "tl/cache.hpp"
#include "tl/rootspec.hpp"

namespace tl {

std::string YoungDiagram::str() const {
  if (size() == 0) return "[]";
  std::ostringstream os;
  os << "[" << rows1;
  if (rows2 > 0) os << "," << rows2;
  os << "]";
  return os.str();
}

std::vector<YoungDiagram> young_successors(const YoungDiagram& lambda) {
  if (!lambda.valid())
    throw Error(ErrorCode::BadParameter, "invalid two-row shape");
  std::vector<YoungDiagram> out;
  out.push_back({lambda.rows1 + 1, lambda.rows2});
  if (lambda.rows2 < lambda.rows1) out.push_back({lambda.rows1, lambda.rows2 + 1});
  return out;
}

std::int64_t count_tableaux(const YoungDiagram& lambda) {
  if (!lambda.valid())
    throw Error(ErrorCode::BadParameter, "invalid two-row shape");
  int n = lambda.size();
  auto binom = [](int a, int b) -> std::int64_t {
    if (b < 0 || b > a) return 0;
    std::int64_t r = 1;
    for (int i = 0; i < b; ++i) r = r * (a - i) / (i + 1);
    return r;
  };
  return binom(n, lambda.rows2) - binom(n, lambda.rows2 - 1);
}

std::vector<YoungDiagram> shapes_of_size(int n) {
  std::vector<YoungDiagram> out;
  for (int r2 = n / 2; r2 >= 0; --r2) out.push_back({n - r2, r2});
  return out;
}

namespace {

void extend_paths(const BratteliPath& prefix, int remaining,
                  std::vector<BratteliPath>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (const auto& next : young_successors(prefix.back())) {
    BratteliPath longer = prefix;
    longer.push_back(next);
    extend_paths(longer, remaining - 1, out);
  }
}

}  // namespace

std::vector<BratteliPath> all_paths(int length) {
  if (length < 0) throw Error(ErrorCode::BadParameter, "negative path length");
  std::vector<BratteliPath> out;
  extend_paths({YoungDiagram{}}, length, out);
  return out;
}

std::vector<BratteliPath> paths_to(const YoungDiagram& lambda) {
  std::vector<BratteliPath> out;
  for (auto& path : all_paths(lambda.size()))
    if (path.back() == lambda) out.push_back(std::move(path));
  return out;
}

bool is_valid_path(const BratteliPath& path) {
  if (path.empty() || !(path.front() == YoungDiagram{})) return false;
  for (size_t i = 0; i + 1 < path.size(); ++i) {
    if (!path[i].valid() || !path[i + 1].valid()) return false;
    bool step = false;
    for (const auto& next : young_successors(path[i]))
      if (next == path[i + 1]) step = true;
    if (!step) return false;
  }
  return path.back().valid();
}

std::vector<int> path_widths(const BratteliPath& path) {
  std::vector<int> w;
  w.reserve(path.size());
  for (const auto& shape : path) w.push_back(shape.width());
  return w;
}

BratteliPath path_from_widths(const std::vector<int>& widths) {
  if (widths.empty() || widths[0] != 1)
    throw Error(ErrorCode::BadParameter, "width sequence must start at 1");
  BratteliPath path;
  for (size_t i = 0; i < widths.size(); ++i) {
    int n = static_cast<int>(i);
    int w = widths[i];
    if (w < 1 || (n - (w - 1)) % 2 != 0 || w - 1 > n)
      throw Error(ErrorCode::BadParameter, "width sequence does not describe shapes");
    YoungDiagram shape{(n + w - 1) / 2, (n - w + 1) / 2};
    path.push_back(shape);
  }
  if (!is_valid_path(path))
    throw Error(ErrorCode::BadParameter, "width sequence is not a lattice path");
  return path;
}

std::string path_key(const BratteliPath& path) {
  std::ostringstream os;
  const auto widths = path_widths(path);
  for (size_t i = 0; i < widths.size(); ++i) {
    if (i) os << "-";
    os << widths[i];
  }
  return os.str();
}

BratteliPath path_from_key(const std::string& key) {
  std::vector<int> widths;
  std::istringstream is(key);
  std::string piece;
  while (std::getline(is, piece, '-')) {
    if (piece.empty()) throw Error(ErrorCode::BadParameter, "bad path key");
    widths.push_back(std::stoi(piece));
  }
  return path_from_widths(widths);
}

BratteliGraph bratteli_graph(int levels) {
  if (levels < 0) throw Error(ErrorCode::BadParameter, "negative level count");
  BratteliGraph g;
  g.levels = levels;
  for (int k = 0; k <= levels; ++k) g.vertices.push_back(shapes_of_size(k));
  for (int k = 0; k < levels; ++k) {
    std::vector<std::pair<int, int>> level_edges;
    const auto& src = g.vertices[static_cast<size_t>(k)];
    const auto& dst = g.vertices[static_cast<size_t>(k + 1)];
    for (size_t i = 0; i < src.size(); ++i) {
      for (const auto& next : young_successors(src[i])) {
        for (size_t j = 0; j < dst.size(); ++j)
          if (dst[j] == next) level_edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
      }
    }
    g.edges.push_back(std::move(level_edges));
  }
  return g;
}

namespace {

Morphism<GenericRing> build_path_idempotent(const BratteliPath& path) {
  const GenericRing ring;
  const int n = static_cast<int>(path.size()) - 1;
  if (n == 1) return Morphism<GenericRing>::identity(ring, 1);

  BratteliPath prefix(path.begin(), path.end() - 1);
  Morphism<GenericRing> prev = path_idempotent(prefix);

  const YoungDiagram& last = path[static_cast<size_t>(n - 1)];
  const YoungDiagram& before = path[static_cast<size_t>(n - 2)];
  const YoungDiagram& target = path.back();

  Morphism<GenericRing> lifted = tensor(prev, Morphism<GenericRing>::identity(ring, 1));
  auto extensions = young_successors(last);
  if (extensions.size() == 1) return lifted;

  // Two extensions. With a = p ox 1 and e the last generator, x = a e a
  // satisfies x^2 = ([w(last)]/[w(before)]) x; the normalized multiple is
  // the idempotent of the branch whose width returns to w(before), and
  // the complement inside a is the other branch.
  Morphism<GenericRing> e = Morphism<GenericRing>::generator(ring, n - 1, n);
  Morphism<GenericRing> x = compose(lifted, compose(e, lifted));
  Scalar ratio = quantum_integer(before.width()) / quantum_integer(last.width());
  Morphism<GenericRing> reversing = x.scaled(ratio);
  if (target.width() == before.width()) return reversing;
  return lifted - reversing;
}

}  // namespace

Morphism<GenericRing> path_idempotent(const BratteliPath& path) {
  if (!is_valid_path(path))
    throw Error(ErrorCode::BadParameter, "not a lattice path from the empty shape");
  if (path.size() == 1) return Morphism<GenericRing>::identity(GenericRing{}, 0);
  const std::string key = path_key(path);
  auto& cache = IdempotentCache::instance();
  if (auto hit = cache.load(key)) return *hit;
  Morphism<GenericRing> result = build_path_idempotent(path);
  cache.store(key, result);
  return result;
}

Morphism<GenericRing> central_idempotent(const YoungDiagram& lambda) {
  if (lambda.size() == 0)
    return Morphism<GenericRing>::identity(GenericRing{}, 0);
  Morphism<GenericRing> sum =
      Morphism<GenericRing>::zero(GenericRing{}, lambda.size(), lambda.size());
  for (const auto& path : paths_to(lambda)) sum = sum + path_idempotent(path);
  return sum;
}

Morphism<GenericRing> jones_wenzl(int n) {
  if (n < 1) throw Error(ErrorCode::BadParameter, "Jones-Wenzl index must be >= 1");
  BratteliPath path;
  for (int k = 0; k <= n; ++k) path.push_back({k, 0});
  return path_idempotent(path);
}

Morphism<CycloRing> jones_wenzl_cyclo(int n, int ell) {
  CycloRing ring(ell);
  if (n >= ell)
    throw Error(ErrorCode::NotEvaluable,
                "Jones-Wenzl projector " + std::to_string(n) +
                    " has a pole at the root of unity of order parameter " +
                    std::to_string(ell));
  return evaluate_morphism(jones_wenzl(n), ell);
}

}  // namespace tl
