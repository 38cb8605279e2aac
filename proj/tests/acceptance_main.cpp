// Acceptance suite: one check per numbered criterion, each printing a
// single PASS/FAIL line. Run with no arguments for the full battery or
// with criterion numbers to select a subset.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "tl/cache.hpp"
#include "tl/ideal.hpp"
#include "tl/rootspec.hpp"

using namespace tl;

namespace {

const GenericRing G{};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Criterion {
  int number;
  std::string name;
  std::function<bool(std::string&)> run;
};

Morphism<GenericRing> random_generic(int m, int n, Rng& rng, int max_terms = 4) {
  const HomBasis& basis = hom_basis(m, n);
  Morphism<GenericRing> a(G, m, n);
  int picks = 1 + static_cast<int>(rng.below(static_cast<uint64_t>(
                      std::min<uint32_t>(basis.size(), static_cast<uint32_t>(max_terms)))));
  for (int i = 0; i < picks; ++i) {
    int c = rng.range(-2, 2);
    if (c == 0) c = 1;
    a.add_term(static_cast<uint32_t>(rng.below(basis.size())), Scalar(c));
  }
  return a;
}

// ---------------------------------------------------------------- 1
bool criterion_dimension_law(std::string& detail) {
  auto start = Clock::now();
  long long cells = 0;
  for (int m = 0; m <= 16; ++m) {
    for (int n = 0; m + n <= 16; ++n) {
      if ((m + n) % 2 != 0) {
        if (!enumerate_diagrams(m, n).empty()) return false;
        continue;
      }
      if (enumerate_diagrams(m, n).size() != catalan((m + n) / 2)) return false;
      ++cells;
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream os;
  os << cells << " cells, " << elapsed << "s";
  detail = os.str();
  return elapsed < 10.0;
}

// ---------------------------------------------------------------- 2
bool criterion_diagram_calculus(std::string& detail) {
  // exhaustive associativity in End(3)
  auto t3 = enumerate_diagrams(3, 3);
  for (const auto& a : t3)
    for (const auto& b : t3)
      for (const auto& c : t3) {
        auto [cb, l1] = compose_diagrams(c, b);
        auto [cba, l2] = compose_diagrams(cb, a);
        auto [ba, l3] = compose_diagrams(b, a);
        auto [cba2, l4] = compose_diagrams(c, ba);
        if (!(cba == cba2) || l1 + l2 != l3 + l4) return false;
      }

  // seeded triples through End(6), associativity
  Rng rng(20240001);
  int triples = 0;
  while (triples < 10000) {
    int n0 = rng.range(0, 6), n1 = rng.range(0, 6), n2 = rng.range(0, 6),
        n3 = rng.range(0, 6);
    if ((n0 + n1) % 2 || (n1 + n2) % 2 || (n2 + n3) % 2) continue;
    auto pick = [&](int mm, int nn) {
      const HomBasis& basis = hom_basis(mm, nn);
      return basis.diagram(static_cast<uint32_t>(rng.below(basis.size())));
    };
    Diagram a = pick(n0, n1), b = pick(n1, n2), c = pick(n2, n3);
    auto [cb, l1] = compose_diagrams(c, b);
    auto [cba, l2] = compose_diagrams(cb, a);
    auto [ba, l3] = compose_diagrams(b, a);
    auto [cba2, l4] = compose_diagrams(c, ba);
    if (!(cba == cba2) || l1 + l2 != l3 + l4) return false;
    ++triples;
  }

  // seeded interchange checks
  int interchanges = 0;
  while (interchanges < 10000) {
    int m1 = rng.range(0, 3), k1 = rng.range(0, 3), n1 = rng.range(0, 3);
    int m2 = rng.range(0, 3), k2 = rng.range(0, 3), n2 = rng.range(0, 3);
    if ((m1 + k1) % 2 || (k1 + n1) % 2 || (m2 + k2) % 2 || (k2 + n2) % 2) continue;
    auto pick = [&](int mm, int nn) {
      const HomBasis& basis = hom_basis(mm, nn);
      return basis.diagram(static_cast<uint32_t>(rng.below(basis.size())));
    };
    Diagram a = pick(m1, k1), b = pick(k1, n1), a2 = pick(m2, k2), b2 = pick(k2, n2);
    auto [joint, lj] = compose_diagrams(tensor_diagrams(b, b2), tensor_diagrams(a, a2));
    auto [ba, l1] = compose_diagrams(b, a);
    auto [ba2, l2] = compose_diagrams(b2, a2);
    if (!(joint == tensor_diagrams(ba, ba2)) || lj != l1 + l2) return false;
    ++interchanges;
  }
  detail = "125 exhaustive + 10000 associativity + 10000 interchange triples";
  return true;
}

// ---------------------------------------------------------------- 3
bool criterion_trace_suite(std::string& detail) {
  // Tr(1_n) = d^n
  for (int n = 0; n <= 5; ++n)
    if (trace(Morphism<GenericRing>::identity(G, n)) != pow(Scalar::d(), static_cast<unsigned>(n)))
      return false;

  // Tr equals the full closure chain, exhaustively on diagrams
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : enumerate_diagrams(n, n)) {
      auto a = Morphism<GenericRing>::from_diagram(G, d);
      if (cond_expect_chain(a, 0) != Morphism<GenericRing>::from_scalar(G, trace(a)))
        return false;
    }
  }

  // Markov symmetry on seeded pairs, rectangular included
  Rng rng(20240003);
  int pairs = 0;
  while (pairs < 800) {
    int m = rng.range(0, 5), n = rng.range(0, 5);
    if ((m + n) % 2) continue;
    auto a = random_generic(m, n, rng);
    auto b = random_generic(n, m, rng);
    if (trace(compose(a, b)) != trace(compose(b, a))) return false;
    ++pairs;
  }
  detail = "closure chain exhaustive to End(5), 800 seeded Markov pairs";
  return true;
}

// ---------------------------------------------------------------- 4
bool criterion_compression_lemma(std::string& detail) {
  Rng rng(20240004);
  int instances = 0;
  for (int total = 2; total <= 6; ++total) {
    for (int n = 1; n < total; ++n) {
      int m = total - n;
      for (const auto& path : all_paths(n)) {
        auto p = path_idempotent(path);
        auto padded = tensor(p, Morphism<GenericRing>::identity(G, m));
        int reps = total <= 5 ? 3 : 2;
        for (int rep = 0; rep < reps; ++rep) {
          auto x = random_generic(total, total, rng);
          auto f = compose(padded, compose(x, padded));
          Scalar gamma_expected =
              f.is_zero() ? Scalar::zero() : trace(f) / trace(p);
          Scalar gamma = reduce_to_multiple(f, p);
          if (gamma != gamma_expected) return false;
          if (cond_expect_chain(f, n) != p.scaled(gamma)) return false;
          ++instances;
        }
      }
    }
  }
  std::ostringstream os;
  os << instances << " seeded compressions";
  detail = os.str();
  return instances >= 100;
}

// ---------------------------------------------------------------- 5
bool criterion_idempotent_suite(std::string& detail) {
  auto start = Clock::now();
  // orthogonality (1), partition of unity, extension rule (3)
  for (int n = 1; n <= 5; ++n) {
    auto paths = all_paths(n);
    std::vector<Morphism<GenericRing>> idems;
    for (const auto& t : paths) idems.push_back(path_idempotent(t));
    Morphism<GenericRing> sum = Morphism<GenericRing>::zero(G, n, n);
    for (const auto& p : idems) sum = sum + p;
    if (sum != Morphism<GenericRing>::identity(G, n)) return false;
    for (size_t i = 0; i < idems.size(); ++i) {
      if (compose(idems[i], idems[i]) != idems[i]) return false;
      for (size_t j = 0; j < idems.size(); ++j)
        if (i != j && !compose(idems[i], idems[j]).is_zero()) return false;
    }
    for (const auto& t : paths) {
      auto lifted = tensor(path_idempotent(t), Morphism<GenericRing>::identity(G, 1));
      Morphism<GenericRing> extension_sum = Morphism<GenericRing>::zero(G, n + 1, n + 1);
      for (const auto& next : young_successors(t.back())) {
        BratteliPath extended = t;
        extended.push_back(next);
        extension_sum = extension_sum + path_idempotent(extended);
      }
      if (lifted != extension_sum) return false;
    }
  }

  // trace formula through n = 6
  for (int n = 1; n <= 6; ++n)
    for (const auto& t : all_paths(n))
      if (trace(path_idempotent(t)) != quantum_integer(t.back().width())) return false;

  // centrality and squared-count block dimensions
  for (int n = 2; n <= 5; ++n) {
    const HomBasis& basis = hom_basis(n, n);
    for (const auto& lambda : shapes_of_size(n)) {
      auto z = central_idempotent(lambda);
      for (int i = 1; i < n; ++i) {
        auto ei = Morphism<GenericRing>::generator(G, i, n);
        if (compose(z, ei) != compose(ei, z)) return false;
      }
      SpanBuilder<GenericRing> span(G);
      for (uint32_t r = 0; r < basis.size(); ++r) {
        auto x = Morphism<GenericRing>::from_diagram(G, basis.diagram(r));
        auto zxz = compose(z, compose(x, z));
        SparseVec<Scalar> vec;
        for (const auto& [rank, c] : zxz.terms()) vec.emplace_back(static_cast<int>(rank), c);
        span.insert(std::move(vec));
      }
      std::int64_t f = count_tableaux(lambda);
      if (span.dim() != f * f) return false;
    }
  }
  double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "paths to length 6, blocks to End(5), " << elapsed << "s";
  detail = os.str();
  return elapsed < 300.0;
}

// ---------------------------------------------------------------- 6
bool criterion_root_structure(std::string& detail) {
  for (int ell : {3, 4, 5}) {
    for (int n = 1; n <= 6; ++n) {
      // every block idempotent must evaluate; the evaluations must be a
      // partition of unity into orthogonal idempotents
      std::vector<Morphism<CycloRing>> blocks;
      for (const auto& lambda : shapes_of_size(n)) {
        Morphism<GenericRing> z = lambda.width() % ell == 0
                                      ? central_idempotent(lambda)
                                      : z_left(lambda, ell);
        blocks.push_back(evaluate_morphism(z, ell));  // NotEvaluable -> throw = FAIL
      }
      CycloRing ring(ell);
      Morphism<CycloRing> sum = Morphism<CycloRing>::zero(ring, n, n);
      for (const auto& z : blocks) sum = sum + z;
      if (sum != Morphism<CycloRing>::identity(ring, n)) return false;
      for (size_t i = 0; i < blocks.size(); ++i) {
        if (compose(blocks[i], blocks[i]) != blocks[i]) return false;
        for (size_t j = 0; j < blocks.size(); ++j)
          if (i != j && !compose(blocks[i], blocks[j]).is_zero()) return false;
      }

      // complementary regular/nil pair
      auto [reg, nil] = z_reg_nil(n, ell);
      auto r = evaluate_morphism(reg, ell);
      auto s = evaluate_morphism(nil, ell);
      if (compose(r, r) != r || compose(s, s) != s) return false;
      if (!compose(r, s).is_zero() || !compose(s, r).is_zero()) return false;
      if (r + s != Morphism<CycloRing>::identity(ring, n)) return false;
    }
  }

  // support condition between left idempotents, exhaustive at ell = 3
  for (int n = 1; n <= 5; ++n) {
    const HomBasis& basis = hom_basis(n, n);
    std::vector<YoungDiagram> noncritical;
    for (const auto& shape : shapes_of_size(n))
      if (shape.width() % 3 != 0) noncritical.push_back(shape);
    for (const auto& lambda : noncritical) {
      auto zl = evaluate_morphism(z_left(lambda, 3), 3);
      for (const auto& mu : noncritical) {
        bool allowed = lambda == mu;
        for (int line = 1; line <= 3 && !allowed; ++line) {
          try {
            if (reflection_partner(lambda, 3, line) == mu) allowed = true;
          } catch (const Error&) {
          }
        }
        if (allowed) continue;
        auto zm = evaluate_morphism(z_left(mu, 3), 3);
        for (uint32_t rk = 0; rk < basis.size(); ++rk) {
          auto x = Morphism<CycloRing>::from_diagram(zl.ring(), basis.diagram(rk));
          if (!compose(zl, compose(x, zm)).is_zero()) return false;
        }
      }
    }
  }
  detail = "ell in {3,4,5} to End(6); support condition exhaustive at ell=3, End(5)";
  return true;
}

// ---------------------------------------------------------------- 7
VerifyReport run_main_sweep(int ell, int max_n, std::uint64_t seed) {
  VerifyOptions opts;
  opts.seed = seed;
  opts.jobs = 2;
  return verify_main_theorem(ell, max_n, opts);
}

bool criterion_main_theorem(std::string& detail) {
  auto start = Clock::now();
  const std::uint64_t seed = 777;

  auto report3 = run_main_sweep(3, 7, seed);
  if (!report3.pass) return false;
  // frozen regression fixture: Gram-kernel dimensions at ell = 3,
  // cross-checked by the strictly-left strip count (Catalan(n) - 1)
  const std::map<std::pair<int, int>, int> fixture = {
      {{1, 1}, 0}, {{2, 2}, 1}, {{3, 3}, 4}, {{4, 4}, 13}};
  for (const auto& cell : report3.cells) {
    auto it = fixture.find({cell.m, cell.n});
    if (it != fixture.end() && cell.neg_dim != it->second) return false;
  }
  // the (2,2) kernel is exactly the evaluated Jones-Wenzl projector
  {
    CycloRing ring(3);
    auto neg22 = negligible_basis(2, 2, ring);
    if (neg22.dim() != 1) return false;
    auto jw = jones_wenzl_cyclo(2, 3);
    SparseVec<CycloScalar> v;
    for (const auto& [r, c] : jw.terms()) v.emplace_back(static_cast<int>(r), c);
    if (!neg22.contains(v)) return false;
  }

  auto report4 = run_main_sweep(4, 6, seed);
  if (!report4.pass) return false;
  auto report5 = run_main_sweep(5, 6, seed);
  if (!report5.pass) return false;

  double elapsed = seconds_since(start);
  std::ostringstream os;
  os << "sweeps (3,7) (4,6) (5,6) pass, fixture matched, " << elapsed << "s";
  detail = os.str();
  return elapsed < 1800.0;
}

// ---------------------------------------------------------------- 8
bool criterion_genericity(std::string& detail) {
  for (int n = 0; n <= 5; ++n)
    if (generic_gram_rank_exact(n) != static_cast<int>(catalan(n))) return false;
  for (int n : {6, 7})
    if (!generic_gram_full_rank_certificate(n, 20240008)) return false;
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n) {
      if ((m + n) % 2) continue;
      if (negligible_basis(m, n, G).dim() != 0) return false;
    }
  detail = "exact rank to End(5), certificates for End(6), End(7), all kernels zero";
  return true;
}

// ---------------------------------------------------------------- 9
bool criterion_uniqueness_sampling(std::string& detail) {
  const int ell = 3;
  CycloRing ring(ell);
  long long witnesses = 0, closures = 0;
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n <= 5; ++n) {
      if ((m + n) % 2) continue;
      Rng rng(derive_seed(20240009, ell, static_cast<uint64_t>(m), static_cast<uint64_t>(n)));
      const HomBasis& basis = hom_basis(m, n);
      auto neg = negligible_basis(m, n, ring);

      for (int s = 0; s < 100; ++s) {
        Morphism<CycloRing> a(ring, m, n);
        int retries = 0;
        do {
          a = Morphism<CycloRing>(ring, m, n);
          int picks = 1 + static_cast<int>(rng.below(std::min<uint64_t>(basis.size(), 4)));
          for (int i = 0; i < picks; ++i) {
            int c = rng.range(-2, 2);
            if (c == 0) c = 1;
            a.add_term(static_cast<uint32_t>(rng.below(basis.size())), ring.from_int(c));
          }
        } while (is_negligible(a) && ++retries < 500);
        if (is_negligible(a)) return false;  // could not sample outside the kernel
        SparseVec<CycloScalar> v;
        for (const auto& [r, c] : a.terms()) v.emplace_back(static_cast<int>(r), c);
        if (!gram_pairing_witness(m, n, ring, v).has_value()) return false;
        ++witnesses;
      }

      if (neg.dim() == 0) continue;
      for (int s = 0; s < 100; ++s) {
        SparseVec<CycloScalar> combo;
        for (const auto& row : neg.rows) {
          int c = rng.range(-2, 2);
          if (c == 0) continue;
          sparse_axpy(combo, ring.from_int(-c), row);
        }
        if (combo.empty())
          sparse_axpy(combo, ring.from_int(-1), neg.rows[rng.below(neg.rows.size())]);
        Morphism<CycloRing> a(ring, m, n);
        for (const auto& [r, c] : combo) a.add_term(static_cast<uint32_t>(r), c);
        for (int t = 0; t < 50; ++t) {
          int j = static_cast<int>(rng.below(2));
          Morphism<CycloRing> padded =
              j == 0 ? a : tensor(a, Morphism<CycloRing>::identity(ring, j));
          int cod2 = rng.range(0, 3) * 2 + (padded.cod() % 2);
          int dom2 = rng.range(0, 3) * 2 + (padded.dom() % 2);
          const HomBasis& ub = hom_basis(padded.cod(), cod2);
          const HomBasis& vb = hom_basis(dom2, padded.dom());
          auto u = Morphism<CycloRing>::from_diagram(
              ring, ub.diagram(static_cast<uint32_t>(rng.below(ub.size()))));
          auto v2 = Morphism<CycloRing>::from_diagram(
              ring, vb.diagram(static_cast<uint32_t>(rng.below(vb.size()))));
          if (!is_negligible(compose(u, compose(padded, v2)))) return false;
          ++closures;
        }
      }
    }
  }
  std::ostringstream os;
  os << witnesses << " witnesses, " << closures << " sandwich closures";
  detail = os.str();
  return true;
}

// ---------------------------------------------------------------- 10
bool criterion_even_subcategory(std::string& detail) {
  VerifyOptions opts;
  opts.seed = 20240010;
  opts.jobs = 2;
  auto report3 = verify_even_subcategory(3, 6, opts);
  if (!report3.pass) return false;
  for (const auto& cell : report3.cells)
    if (cell.m % 2 != 0 || cell.n % 2 != 0) return false;
  auto report5 = verify_even_subcategory(5, 4, opts);
  if (!report5.pass) return false;
  detail = "even sweeps at ell=3 (to 6) and ell=5 (to 4)";
  return true;
}

// ---------------------------------------------------------------- 11
bool criterion_constancy(std::string& detail) {
  Rng rng(20240011);
  int instances = 0;
  const int ells[] = {3, 4, 5};
  while (instances < 21) {
    int ell = ells[instances % 3];
    int n = 2 + static_cast<int>(rng.below(3));  // objects 2..4
    auto pick = [&](int size) -> Morphism<GenericRing> {
      switch (rng.below(4)) {
        case 0:
          return Morphism<GenericRing>::identity(G, size);
        case 1:
          return jones_wenzl(std::min(size, ell - 1));
        case 2:
          return z_reg_nil(size, ell).first;
        default: {
          std::vector<YoungDiagram> noncritical;
          for (const auto& shape : shapes_of_size(size))
            if (shape.width() % ell != 0) noncritical.push_back(shape);
          if (noncritical.empty()) return Morphism<GenericRing>::identity(G, size);
          return z_left(noncritical[rng.below(noncritical.size())], ell);
        }
      }
    };
    Morphism<GenericRing> e = pick(n);
    Morphism<GenericRing> f = pick(n);
    int en = e.dom(), fm = f.dom();
    const HomBasis& basis = hom_basis(fm, en);
    std::vector<uint32_t> ranks;
    for (uint32_t r = 0; r < basis.size(); ++r)
      if (rng.below(2) == 0) ranks.push_back(r);
    auto result = constancy_check(e, f, ranks, fm, en, ell);
    if (!result.equal) return false;
    ++instances;
  }
  std::ostringstream os;
  os << instances << " seeded compressions across ell in {3,4,5}";
  detail = os.str();
  return true;
}

// ---------------------------------------------------------------- 12
bool criterion_determinism(std::string& detail) {
  const std::uint64_t seed = 777;  // criterion 7's seed
  auto once3 = run_main_sweep(3, 7, seed).to_json().dump();
  auto again3 = run_main_sweep(3, 7, seed).to_json().dump();
  if (once3 != again3) return false;
  auto once4 = run_main_sweep(4, 6, seed).to_json().dump();
  auto again4 = run_main_sweep(4, 6, seed).to_json().dump();
  if (once4 != again4) return false;
  auto once5 = run_main_sweep(5, 6, seed).to_json().dump();
  auto again5 = run_main_sweep(5, 6, seed).to_json().dump();
  if (once5 != again5) return false;
  detail = "three sweeps repeated byte-identically";
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> criteria = {
      {1, "dimension law", criterion_dimension_law},
      {2, "diagram calculus", criterion_diagram_calculus},
      {3, "trace suite", criterion_trace_suite},
      {4, "compression lemma", criterion_compression_lemma},
      {5, "idempotent suite", criterion_idempotent_suite},
      {6, "root-of-unity structure", criterion_root_structure},
      {7, "main theorem", criterion_main_theorem},
      {8, "genericity", criterion_genericity},
      {9, "uniqueness sampling", criterion_uniqueness_sampling},
      {10, "even subcategory", criterion_even_subcategory},
      {11, "constancy of dimension", criterion_constancy},
      {12, "determinism", criterion_determinism},
  };

  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  if (const char* dir = std::getenv("TL_CACHE_DIR"); dir && *dir)
    IdempotentCache::instance().set_directory(dir);

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    if (!selected.empty() && !selected.count(criterion.number)) continue;
    bool pass = false;
    std::string note;
    try {
      pass = criterion.run(note);
    } catch (const std::exception& e) {
      pass = false;
      note = e.what();
    }
    all_pass = all_pass && pass;
    std::cout << "criterion " << criterion.number << " (" << criterion.name
              << "): " << (pass ? "PASS" : "FAIL");
    if (!note.empty()) std::cout << " [" << note << "]";
    std::cout << std::endl;
  }
  return all_pass ? 0 : 1;
}
