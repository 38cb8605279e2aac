#include "tl/ideal.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <type_traits>
#include <unordered_set>

#include "tl/modp.hpp"
#include "tl/rootspec.hpp"

namespace tl {

const std::vector<std::vector<int>>& gram_loop_counts(int m, int n) {
  static std::shared_mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<std::vector<std::vector<int>>>> cache;
  {
    std::shared_lock lock(mu);
    auto it = cache.find({m, n});
    if (it != cache.end()) return *it->second;
  }
  const HomBasis& basis = hom_basis(m, n);
  auto table = std::make_unique<std::vector<std::vector<int>>>();
  table->reserve(basis.size());
  std::vector<Diagram> transposed;
  transposed.reserve(basis.size());
  for (uint32_t i = 0; i < basis.size(); ++i)
    transposed.push_back(transpose_diagram(basis.diagram(i)));
  for (uint32_t i = 0; i < basis.size(); ++i) {
    std::vector<int> row(basis.size(), 0);
    for (uint32_t j = 0; j < basis.size(); ++j) {
      auto [stitched, removed] = compose_diagrams(transposed[i], basis.diagram(j));
      row[j] = removed + closure_loops(stitched);
    }
    table->push_back(std::move(row));
  }
  std::unique_lock lock(mu);
  auto it = cache.find({m, n});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(m, n), std::move(table)).first;
  return *it->second;
}

namespace {

template <class Ring>
SparseVec<typename Ring::Value> morphism_vec(const Morphism<Ring>& a) {
  SparseVec<typename Ring::Value> v;
  v.reserve(a.terms().size());
  for (const auto& [r, c] : a.terms()) v.emplace_back(static_cast<int>(r), c);
  return v;
}

template <class Ring>
Morphism<Ring> morphism_from_vec(const Ring& ring, int m, int n,
                                 const SparseVec<typename Ring::Value>& v) {
  Morphism<Ring> a(ring, m, n);
  for (const auto& [r, c] : v) a.add_term(static_cast<uint32_t>(r), c);
  return a;
}

template <class Ring>
std::string vec_fingerprint(const SparseVec<typename Ring::Value>& v) {
  std::string s;
  for (const auto& [i, c] : v) {
    s += std::to_string(i);
    s += ':';
    s += c.str();
    s += ';';
  }
  return s;
}

// Nonzero sparse element of Hom(m,n) with small integer coefficients.
template <class Ring>
Morphism<Ring> random_morphism(const Ring& ring, int m, int n, Rng& rng) {
  const HomBasis& basis = hom_basis(m, n);
  if (basis.size() == 0)
    throw Error(ErrorCode::BadParameter, "cannot sample from a zero Hom space");
  Morphism<Ring> a(ring, m, n);
  int picks = 1 + static_cast<int>(rng.below(std::min<uint64_t>(basis.size(), 4)));
  for (int i = 0; i < picks; ++i) {
    uint32_t rank = static_cast<uint32_t>(rng.below(basis.size()));
    int c = rng.range(-2, 2);
    if (c == 0) c = 1;
    a.add_term(rank, ring.from_int(c));
  }
  if (a.is_zero()) a.add_term(static_cast<uint32_t>(rng.below(basis.size())), ring.one());
  return a;
}

}  // namespace

template <class Ring>
SubspaceBasis<Ring> ideal_truncation(const Morphism<Ring>& g, int m, int n,
                                     const TruncationOptions& opts) {
  if (g.dom() != g.cod())
    throw Error(ErrorCode::DomainMismatch, "ideal generator must be an endomorphism");
  if ((m + n) % 2 != 0)
    throw Error(ErrorCode::ParityError, "Hom space of odd parity is zero");
  const int k = g.dom();
  const Ring& ring = g.ring();
  if (opts.even_only && (k % 2 != 0 || m % 2 != 0 || n % 2 != 0))
    throw Error(ErrorCode::BadParameter,
                "even-restricted truncation needs even generator and even objects");
  const int ambient = static_cast<int>(hom_basis(m, n).size());

  SpanBuilder<Ring> span(ring);
  std::unordered_set<std::string> seen;
  int previous_dim = -1;
  bool stabilized = false;
  int first_j = (m - k) % 2 == 0 ? 0 : 1;

  for (int j = first_j; j <= opts.max_extra_strands; j += 2) {
    int mid = k + j;
    Morphism<Ring> padded =
        j == 0 ? g : tensor(g, Morphism<Ring>::identity(ring, j));
    const HomBasis& lower = hom_basis(m, mid);
    const HomBasis& upper = hom_basis(mid, n);
    for (uint32_t vr = 0; vr < lower.size(); ++vr) {
      Morphism<Ring> gv =
          compose(padded, Morphism<Ring>::from_diagram(ring, lower.diagram(vr)));
      if (gv.is_zero()) continue;
      for (uint32_t ur = 0; ur < upper.size(); ++ur) {
        Morphism<Ring> prod =
            compose(Morphism<Ring>::from_diagram(ring, upper.diagram(ur)), gv);
        if (prod.is_zero()) continue;
        SparseVec<typename Ring::Value> vec = morphism_vec(prod);
        if (!seen.insert(vec_fingerprint<Ring>(vec)).second) continue;
        span.insert(std::move(vec));
      }
    }
    if (span.dim() == previous_dim || span.dim() == ambient) {
      stabilized = true;
      break;
    }
    previous_dim = span.dim();
  }
  if (!stabilized)
    throw Error(ErrorCode::NotStabilized,
                "ideal dimension still growing at padding cap " +
                    std::to_string(opts.max_extra_strands));

  SubspaceBasis<Ring> basis = span.finalize(m, n, ambient);

  if (opts.certify && basis.dim() > 0) {
    // Sampled closure under sandwiching by arbitrary diagrams.
    Rng rng(opts.seed);
    const HomBasis& left = hom_basis(n, n);
    const HomBasis& right = hom_basis(m, m);
    for (int s = 0; s < opts.sandwich_samples; ++s) {
      const auto& row = basis.rows[rng.below(basis.rows.size())];
      Morphism<Ring> b = morphism_from_vec(ring, m, n, row);
      Morphism<Ring> u =
          Morphism<Ring>::from_diagram(ring, left.diagram(static_cast<uint32_t>(rng.below(left.size()))));
      Morphism<Ring> v =
          Morphism<Ring>::from_diagram(ring, right.diagram(static_cast<uint32_t>(rng.below(right.size()))));
      Morphism<Ring> product = compose(u, compose(b, v));
      if (!basis.contains(morphism_vec(product)))
        throw Error(ErrorCode::VerificationFailed,
                    "truncated ideal is not closed under sandwiching");
    }
    // Closure under the padding embedding into End(max(m,n)) and its
    // left inverse.
    if (m != n) {
      int big = std::max(m, n);
      TruncationOptions sub = opts;
      sub.certify = false;
      SubspaceBasis<Ring> endo_span = ideal_truncation(g, big, big, sub);
      for (const auto& row : basis.rows) {
        Morphism<Ring> b = morphism_from_vec(ring, m, n, row);
        Morphism<Ring> embedded = pad_embed(b);
        if (!endo_span.contains(morphism_vec(embedded)))
          throw Error(ErrorCode::VerificationFailed,
                      "truncated ideal is not closed under padding embeddings");
        if (pad_retract(embedded, m, n) != b)
          throw Error(ErrorCode::VerificationFailed,
                      "padding retract does not invert the embedding");
      }
    }
  }
  return basis;
}

template SubspaceBasis<GenericRing> ideal_truncation(const Morphism<GenericRing>&, int,
                                                     int, const TruncationOptions&);
template SubspaceBasis<CycloRing> ideal_truncation(const Morphism<CycloRing>&, int, int,
                                                   const TruncationOptions&);

Json VerifyReport::to_json() const {
  Json j;
  j["ell"] = ell ? Json(*ell) : Json(nullptr);
  if (even_only) j["even"] = true;
  Json cell_array = Json::array();
  for (const auto& c : cells)
    cell_array.push_back(Json{{"m", c.m},
                              {"n", c.n},
                              {"neg_dim", c.neg_dim},
                              {"ideal_dim", c.ideal_dim},
                              {"equal", c.equal},
                              {"seed", c.seed}});
  j["cells"] = cell_array;
  j["verdict"] = pass ? "PASS" : "FAIL";
  return j;
}

namespace {

std::vector<std::pair<int, int>> sweep_cells(int max_n, bool even_only) {
  std::vector<std::pair<int, int>> cells;
  for (int m = 0; m <= max_n; ++m)
    for (int n = 0; n <= max_n; ++n) {
      if ((m + n) % 2 != 0) continue;
      if (even_only && (m % 2 != 0 || n % 2 != 0)) continue;
      cells.emplace_back(m, n);
    }
  return cells;
}

template <class Fn>
void run_cells(int jobs, int count, Fn&& body) {
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
  std::vector<std::thread> workers;
  int spawn = std::min(jobs, count);
  for (int w = 0; w < spawn; ++w) {
    workers.emplace_back([&]() {
      while (true) {
        int i = next.fetch_add(1);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          errors[static_cast<size_t>(i)] = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

// A random product u o (a ox 1_j) o v landing in a nearby Hom space.
template <class Ring>
Morphism<Ring> random_sandwich(const Morphism<Ring>& a, int max_obj, bool even_only,
                               Rng& rng) {
  const Ring& ring = a.ring();
  int step = even_only ? 2 : 1;
  int j = step * static_cast<int>(rng.below(2));
  Morphism<Ring> padded =
      j == 0 ? a : tensor(a, Morphism<Ring>::identity(ring, j));
  int md = padded.dom(), cd = padded.cod();
  auto pick_obj = [&](int like) {
    int lo = even_only ? 0 : like % 2;
    std::vector<int> choices;
    for (int o = lo; o <= max_obj; o += 2) choices.push_back(o);
    return choices[rng.below(choices.size())];
  };
  int target_cod = pick_obj(cd);
  int target_dom = pick_obj(md);
  const HomBasis& ub = hom_basis(cd, target_cod);
  const HomBasis& vb = hom_basis(target_dom, md);
  if (ub.size() == 0 || vb.size() == 0) return padded;  // parity dead end
  Morphism<Ring> u = Morphism<Ring>::from_diagram(
      ring, ub.diagram(static_cast<uint32_t>(rng.below(ub.size()))));
  Morphism<Ring> v = Morphism<Ring>::from_diagram(
      ring, vb.diagram(static_cast<uint32_t>(rng.below(vb.size()))));
  return compose(u, compose(padded, v));
}

}  // namespace

VerifyReport verify_main_theorem_impl(std::optional<int> ell, int max_n,
                                      const VerifyOptions& opts, bool even_only) {
  VerifyReport report;
  report.ell = ell;
  report.even_only = even_only;
  std::vector<std::pair<int, int>> cells = sweep_cells(max_n, even_only);
  report.cells.resize(cells.size());
  std::vector<std::string> failures(cells.size());

  std::optional<Morphism<CycloRing>> generator;
  if (ell) generator = jones_wenzl_cyclo(*ell - 1, *ell);

  run_cells(opts.jobs, static_cast<int>(cells.size()), [&](int idx) {
    auto [m, n] = cells[static_cast<size_t>(idx)];
    CellReport cell;
    cell.m = m;
    cell.n = n;
    cell.seed = derive_seed(opts.seed, static_cast<uint64_t>(ell ? *ell : 0),
                            static_cast<uint64_t>(m), static_cast<uint64_t>(n));
    Rng rng(cell.seed);
    std::string why;

    auto run_ring_checks = [&](const auto& ring, const auto& neg,
                               const auto& ideal_basis) {
      using RingT = std::decay_t<decltype(ring)>;
      // (a) double inclusion of echelon bases
      cell.neg_dim = neg.dim();
      cell.ideal_dim = ideal_basis.dim();
      cell.equal = neg.contains_all(ideal_basis) && ideal_basis.contains_all(neg);
      if (!cell.equal && why.empty())
        why = "negligible space differs from the truncated ideal";

      const HomBasis& basis = hom_basis(m, n);
      if (basis.size() == 0) return;

      // (b) every sampled non-negligible morphism pairs nontrivially
      // with some diagram
      for (int s = 0; s < opts.nonnegligible_samples; ++s) {
        Morphism<RingT> a = random_morphism(ring, m, n, rng);
        int retries = 0;
        while (is_negligible(a) && retries < 200) {
          a = random_morphism(ring, m, n, rng);
          ++retries;
        }
        if (is_negligible(a)) continue;  // kernel fills the sample space
        if (!gram_pairing_witness(m, n, ring, morphism_vec(a)).has_value()) {
          if (why.empty()) why = "non-negligible morphism without trace witness";
          return;
        }
      }

      // (c) sampled negligible morphisms stay negligible under sandwich
      // products
      if (neg.dim() > 0) {
        for (int s = 0; s < opts.negligible_samples; ++s) {
          SparseVec<typename RingT::Value> combo;
          for (const auto& row : neg.rows) {
            int c = rng.range(-2, 2);
            if (c == 0) continue;
            sparse_axpy(combo, ring.from_int(-c), row);
          }
          if (combo.empty()) continue;
          Morphism<RingT> a = morphism_from_vec(ring, m, n, combo);
          for (int t = 0; t < opts.sandwiches_per_sample; ++t) {
            Morphism<RingT> product =
                random_sandwich(a, max_n + 2, even_only, rng);
            if (!is_negligible(product)) {
              if (why.empty()) why = "negligible morphism left the ideal";
              return;
            }
          }
        }
      }
    };

    if (ell) {
      CycloRing ring(*ell);
      auto neg = negligible_basis(m, n, ring);
      TruncationOptions trunc = opts.truncation;
      trunc.seed = cell.seed;
      trunc.even_only = even_only;
      auto ideal_basis = ideal_truncation(*generator, m, n, trunc);
      run_ring_checks(ring, neg, ideal_basis);
    } else {
      GenericRing ring;
      auto neg = negligible_basis(m, n, ring);
      cell.neg_dim = neg.dim();
      cell.ideal_dim = 0;
      cell.equal = neg.dim() == 0;
      if (!cell.equal)
        failures[static_cast<size_t>(idx)] = "nonzero negligible space over the generic field";
      const HomBasis& basis = hom_basis(m, n);
      if (basis.size() > 0) {
        for (int s = 0; s < opts.nonnegligible_samples; ++s) {
          Morphism<GenericRing> a = random_morphism(ring, m, n, rng);
          if (!gram_pairing_witness(m, n, ring, morphism_vec(a)).has_value()) {
            failures[static_cast<size_t>(idx)] = "nonzero generic morphism without witness";
            break;
          }
        }
      }
      report.cells[static_cast<size_t>(idx)] = cell;
      return;
    }
    if (!why.empty()) failures[static_cast<size_t>(idx)] = why;
    report.cells[static_cast<size_t>(idx)] = cell;
  });

  report.pass = true;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (!report.cells[i].equal || !failures[i].empty()) report.pass = false;
  }
  return report;
}

VerifyReport verify_main_theorem(int ell, int max_n, const VerifyOptions& opts) {
  if (ell < 3)
    throw Error(ErrorCode::BadParameter,
                "root-of-unity order parameter must be at least 3");
  return verify_main_theorem_impl(ell, max_n, opts, false);
}

VerifyReport verify_even_subcategory(int ell, int max_n, const VerifyOptions& opts) {
  if (ell < 3 || ell % 2 == 0)
    throw Error(ErrorCode::BadParameter,
                "even-subcategory sweep needs odd ell >= 3");
  return verify_main_theorem_impl(ell, max_n, opts, true);
}

VerifyReport verify_generic(int max_n, const VerifyOptions& opts) {
  return verify_main_theorem_impl(std::nullopt, max_n, opts, false);
}

int generic_gram_rank_exact(int n) {
  GenericRing ring;
  return exact_rank(gram_matrix(n, n, ring));
}

bool generic_gram_full_rank_certificate(int n, std::uint64_t seed) {
  const std::uint64_t p = 2147483647ULL;  // 2^31 - 1
  const auto& loops = gram_loop_counts(n, n);
  const std::uint64_t size = loops.size();
  for (int point = 0; point < 2; ++point) {
    Rng rng(derive_seed(seed, static_cast<uint64_t>(n), static_cast<uint64_t>(point), 0xCE));
    std::uint64_t t0 = 2 + rng.below(p - 4);
    std::uint64_t d0 = (t0 + modp_inv(t0, p)) % p;
    if (d0 == 0) d0 = 2;  // avoid the degenerate specialization
    std::vector<std::vector<std::uint64_t>> mat(size, std::vector<std::uint64_t>(size));
    for (size_t i = 0; i < size; ++i)
      for (size_t j = 0; j < size; ++j)
        mat[i][j] = modp_pow(d0, static_cast<std::uint64_t>(loops[i][j]), p);
    if (modp_rank(std::move(mat), p) != static_cast<int>(size)) return false;
  }
  return true;
}

ConstancyReport constancy_check(const Morphism<GenericRing>& e,
                                const Morphism<GenericRing>& f,
                                const std::vector<uint32_t>& diagram_ranks,
                                int m, int n, int ell) {
  if (e.dom() != e.cod() || e.dom() != n)
    throw Error(ErrorCode::DomainMismatch, "left idempotent must live in End(cod)");
  if (f.dom() != f.cod() || f.dom() != m)
    throw Error(ErrorCode::DomainMismatch, "right idempotent must live in End(dom)");
  if (compose(e, e) != e || compose(f, f) != f)
    throw Error(ErrorCode::PreconditionFailed, "compression needs idempotents");

  GenericRing gring;
  const HomBasis& basis = hom_basis(m, n);
  SpanBuilder<GenericRing> generic_span(gring);
  for (uint32_t r : diagram_ranks) {
    Morphism<GenericRing> x = Morphism<GenericRing>::from_diagram(gring, basis.diagram(r));
    generic_span.insert(morphism_vec(compose(e, compose(x, f))));
  }

  CycloRing cring(ell);
  Morphism<CycloRing> es = evaluate_morphism(e, ell);
  Morphism<CycloRing> fs = evaluate_morphism(f, ell);
  SpanBuilder<CycloRing> special_span(cring);
  for (uint32_t r : diagram_ranks) {
    Morphism<CycloRing> x = Morphism<CycloRing>::from_diagram(cring, basis.diagram(r));
    special_span.insert(morphism_vec(compose(es, compose(x, fs))));
  }

  ConstancyReport report;
  report.generic_dim = generic_span.dim();
  report.specialized_dim = special_span.dim();
  report.equal = report.generic_dim == report.specialized_dim;
  return report;
}

}  // namespace tl
