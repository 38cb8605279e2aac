#include "tl/diagram.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

namespace tl {

namespace {

// Boundary walk: top points left to right, then bottom points right to
// left, so a planar pairing becomes a balanced parenthesization.
std::vector<int> walk_points(int m, int n) {
  std::vector<int> order;
  order.reserve(static_cast<size_t>(m + n));
  for (int i = 0; i < m; ++i) order.push_back(i);
  for (int j = n - 1; j >= 0; --j) order.push_back(m + j);
  return order;
}

}  // namespace

bool is_valid_diagram(const Diagram& d) {
  int p = d.points();
  if (d.top < 0 || d.bot < 0) return false;
  if (static_cast<int>(d.match.size()) != p) return false;
  if (p % 2 != 0) return false;
  for (int i = 0; i < p; ++i) {
    int j = d.match[static_cast<size_t>(i)];
    if (j < 0 || j >= p || j == i) return false;
    if (d.match[static_cast<size_t>(j)] != i) return false;
  }
  // Non-crossing along the boundary walk.
  std::vector<int> pos(static_cast<size_t>(p), -1);
  std::vector<int> order = walk_points(d.top, d.bot);
  for (int w = 0; w < p; ++w) pos[static_cast<size_t>(order[static_cast<size_t>(w)])] = w;
  std::vector<int> stack;
  for (int w = 0; w < p; ++w) {
    int point = order[static_cast<size_t>(w)];
    int partner = d.match[static_cast<size_t>(point)];
    if (pos[static_cast<size_t>(partner)] < w) {
      if (stack.empty() || stack.back() != partner) return false;
      stack.pop_back();
    } else {
      stack.push_back(point);
    }
  }
  return stack.empty();
}

Diagram identity_diagram(int n) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "identity size must be nonnegative");
  Diagram d;
  d.top = n;
  d.bot = n;
  d.match.resize(static_cast<size_t>(2 * n));
  for (int i = 0; i < n; ++i) {
    d.match[static_cast<size_t>(i)] = i + n;
    d.match[static_cast<size_t>(i + n)] = i;
  }
  return d;
}

Diagram cap_diagram() {
  Diagram d;
  d.top = 0;
  d.bot = 2;
  d.match = {1, 0};
  return d;
}

Diagram cup_diagram() {
  Diagram d;
  d.top = 2;
  d.bot = 0;
  d.match = {1, 0};
  return d;
}

Diagram generator_diagram(int i, int n) {
  if (n < 2 || i < 1 || i > n - 1)
    throw Error(ErrorCode::BadParameter,
                "generator index out of range: e_" + std::to_string(i) +
                    " in End(" + std::to_string(n) + ")");
  Diagram d = identity_diagram(n);
  int a = i - 1, b = i;  // 0-indexed top points
  d.match[static_cast<size_t>(a)] = b;
  d.match[static_cast<size_t>(b)] = a;
  d.match[static_cast<size_t>(n + a)] = n + b;
  d.match[static_cast<size_t>(n + b)] = n + a;
  return d;
}

std::pair<Diagram, int> compose_diagrams(const Diagram& b, const Diagram& a) {
  if (a.bot != b.top)
    throw Error(ErrorCode::DomainMismatch,
                "composition needs matching middle edge: " + std::to_string(a.bot) +
                    " vs " + std::to_string(b.top));
  const int l = a.top;   // result top
  const int mid = a.bot; // glued points
  const int n = b.bot;   // result bottom

  Diagram out;
  out.top = l;
  out.bot = n;
  out.match.assign(static_cast<size_t>(l + n), -1);

  std::vector<char> mid_seen(static_cast<size_t>(mid), 0);

  // Follow a strand from a boundary point to the boundary point it
  // reaches, alternating between the two diagrams at glued points.
  auto walk = [&](bool start_in_a, int start) -> int {
    bool in_a = start_in_a;
    int p = start;
    while (true) {
      if (in_a) {
        int q = a.match[static_cast<size_t>(p)];
        if (q < l) return q;  // exits on the result top
        int j = q - l;
        mid_seen[static_cast<size_t>(j)] = 1;
        in_a = false;
        p = j;  // b's top point j
      } else {
        int q = b.match[static_cast<size_t>(p)];
        if (q >= mid) return l + (q - mid);  // exits on the result bottom
        mid_seen[static_cast<size_t>(q)] = 1;
        in_a = true;
        p = l + q;  // a's bottom point q
      }
    }
  };

  for (int i = 0; i < l + n; ++i) {
    if (out.match[static_cast<size_t>(i)] != -1) continue;
    int end = (i < l) ? walk(true, i) : walk(false, mid + (i - l));
    out.match[static_cast<size_t>(i)] = end;
    out.match[static_cast<size_t>(end)] = i;
  }

  // Strands confined to the glued edge are closed loops. Such a cycle
  // alternates a-arcs and b-arcs between middle points.
  int loops = 0;
  for (int j = 0; j < mid; ++j) {
    if (mid_seen[static_cast<size_t>(j)]) continue;
    ++loops;
    int cur = j;
    bool use_a = true;
    do {
      mid_seen[static_cast<size_t>(cur)] = 1;
      cur = use_a ? a.match[static_cast<size_t>(l + cur)] - l
                  : b.match[static_cast<size_t>(cur)];
      use_a = !use_a;
    } while (!(cur == j && use_a));
  }

  return {std::move(out), loops};
}

Diagram tensor_diagrams(const Diagram& a, const Diagram& b) {
  Diagram d;
  d.top = a.top + b.top;
  d.bot = a.bot + b.bot;
  d.match.assign(static_cast<size_t>(d.points()), -1);
  auto map_a = [&](int p) { return p < a.top ? p : p + b.top; };
  auto map_b = [&](int p) {
    return p < b.top ? a.top + p : a.top + a.bot + p;
  };
  for (int p = 0; p < a.points(); ++p)
    d.match[static_cast<size_t>(map_a(p))] = map_a(a.match[static_cast<size_t>(p)]);
  for (int p = 0; p < b.points(); ++p)
    d.match[static_cast<size_t>(map_b(p))] = map_b(b.match[static_cast<size_t>(p)]);
  return d;
}

Diagram transpose_diagram(const Diagram& a) {
  Diagram d;
  d.top = a.bot;
  d.bot = a.top;
  d.match.assign(static_cast<size_t>(d.points()), -1);
  auto flip = [&](int p) { return p < a.top ? a.bot + p : p - a.top; };
  for (int p = 0; p < a.points(); ++p)
    d.match[static_cast<size_t>(flip(p))] = flip(a.match[static_cast<size_t>(p)]);
  return d;
}

int closure_loops(const Diagram& d) {
  if (d.top != d.bot)
    throw Error(ErrorCode::DomainMismatch, "closure needs an endomorphism diagram");
  int n = d.top;
  std::vector<char> seen(static_cast<size_t>(2 * n), 0);
  int loops = 0;
  for (int start = 0; start < 2 * n; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    ++loops;
    int p = start;
    while (!seen[static_cast<size_t>(p)]) {
      seen[static_cast<size_t>(p)] = 1;
      int q = d.match[static_cast<size_t>(p)];  // along the diagram strand
      seen[static_cast<size_t>(q)] = 1;
      p = (q < n) ? q + n : q - n;  // along the closure arc
    }
  }
  return loops;
}

namespace {

// All non-crossing matchings of the walk positions first..last (a
// contiguous range of an abstract line), emitted as pairs.
void noncrossing_matchings(const std::vector<int>& points,
                           std::vector<std::pair<int, int>>& current,
                           std::vector<std::vector<std::pair<int, int>>>& out) {
  if (points.empty()) {
    out.push_back(current);
    return;
  }
  for (size_t k = 1; k < points.size(); k += 2) {
    current.emplace_back(points[0], points[k]);
    std::vector<int> inner(points.begin() + 1, points.begin() + static_cast<long>(k));
    std::vector<int> outer(points.begin() + static_cast<long>(k) + 1, points.end());
    if (outer.empty()) {
      noncrossing_matchings(inner, current, out);
    } else {
      std::vector<std::vector<std::pair<int, int>>> inner_results;
      std::vector<std::pair<int, int>> scratch;
      noncrossing_matchings(inner, scratch, inner_results);
      size_t base = current.size();
      for (const auto& im : inner_results) {
        current.insert(current.end(), im.begin(), im.end());
        noncrossing_matchings(outer, current, out);
        current.resize(base);
      }
    }
    current.pop_back();
  }
}

}  // namespace

HomBasis::HomBasis(int m, int n) : m_(m), n_(n) {
  if (m < 0 || n < 0)
    throw Error(ErrorCode::BadParameter, "negative object label");
  if ((m + n) % 2 != 0) return;  // zero space

  std::vector<int> order = walk_points(m, n);
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> scratch;
  std::vector<int> positions(order.size());
  for (size_t i = 0; i < order.size(); ++i) positions[i] = static_cast<int>(i);
  noncrossing_matchings(positions, scratch, matchings);

  diagrams_.reserve(matchings.size());
  for (const auto& pairs : matchings) {
    Diagram d;
    d.top = m;
    d.bot = n;
    d.match.assign(static_cast<size_t>(m + n), -1);
    for (const auto& [wa, wb] : pairs) {
      int pa = order[static_cast<size_t>(wa)];
      int pb = order[static_cast<size_t>(wb)];
      d.match[static_cast<size_t>(pa)] = pb;
      d.match[static_cast<size_t>(pb)] = pa;
    }
    diagrams_.push_back(std::move(d));
  }
  std::sort(diagrams_.begin(), diagrams_.end(),
            [](const Diagram& x, const Diagram& y) { return x.match < y.match; });
}

uint32_t HomBasis::rank_of(const Diagram& d) const {
  auto it = std::lower_bound(
      diagrams_.begin(), diagrams_.end(), d,
      [](const Diagram& x, const Diagram& y) { return x.match < y.match; });
  if (it == diagrams_.end() || !(*it == d))
    throw Error(ErrorCode::BadParameter, "diagram is not in the basis of this Hom space");
  return static_cast<uint32_t>(it - diagrams_.begin());
}

const HomBasis& hom_basis(int m, int n) {
  static std::shared_mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<HomBasis>> registry;
  {
    std::shared_lock lock(mu);
    auto it = registry.find({m, n});
    if (it != registry.end()) return *it->second;
  }
  std::unique_lock lock(mu);
  auto it = registry.find({m, n});
  if (it == registry.end())
    it = registry.emplace(std::make_pair(m, n), std::make_unique<HomBasis>(m, n)).first;
  return *it->second;
}

std::uint64_t catalan(int k) {
  if (k < 0) return 0;
  if (k > 30) throw Error(ErrorCode::BadParameter, "catalan argument too large");
  std::uint64_t c = 1;
  for (int i = 0; i < k; ++i)
    c = c * 2 * (2 * static_cast<std::uint64_t>(i) + 1) / (static_cast<std::uint64_t>(i) + 2);
  return c;
}

}  // namespace tl
