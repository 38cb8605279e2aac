#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

#include "tl/cache.hpp"
#include "tl/ideal.hpp"
#include "tl/json_io.hpp"
#include "tl/rootspec.hpp"

namespace tl {

namespace {

int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::NotEvaluable:
      return 3;
    case ErrorCode::VerificationFailed:
      return 1;
    default:
      return 2;
  }
}

void emit_error(std::ostream& err, const std::string& code, const std::string& message) {
  err << Json{{"error", Json{{"code", code}, {"message", message}}}}.dump() << "\n";
}

// Inline generator expressions: id:N, e:I@N, jw:N, cap, cup,
// pathidem:1-2-1-2; anything else is read as a morphism JSON file.
Morphism<GenericRing> parse_generic_morphism(const std::string& spec) {
  const GenericRing ring;
  if (spec == "cap") return Morphism<GenericRing>::cap(ring);
  if (spec == "cup") return Morphism<GenericRing>::cup(ring);
  auto colon = spec.find(':');
  if (colon != std::string::npos) {
    std::string head = spec.substr(0, colon);
    std::string tail = spec.substr(colon + 1);
    try {
      if (head == "id") return Morphism<GenericRing>::identity(ring, std::stoi(tail));
      if (head == "jw") return jones_wenzl(std::stoi(tail));
      if (head == "pathidem") return path_idempotent(path_from_key(tail));
      if (head == "e") {
        auto at = tail.find('@');
        if (at == std::string::npos)
          throw Error(ErrorCode::UsageError, "generator expression needs e:I@N");
        return Morphism<GenericRing>::generator(ring, std::stoi(tail.substr(0, at)),
                                                std::stoi(tail.substr(at + 1)));
      }
    } catch (const std::invalid_argument&) {
      throw Error(ErrorCode::UsageError, "bad number in morphism expression '" + spec + "'");
    }
  }
  std::ifstream in(spec);
  if (!in)
    throw Error(ErrorCode::UsageError,
                "not a morphism expression and not a readable file: '" + spec + "'");
  return generic_morphism_from_json(Json::parse(in));
}

// A morphism over whichever ring the input dictates: inline expressions
// are generic (then evaluated when --ell is given); JSON files carry
// their own ring tag, which must agree with --ell when both are present.
struct AnyMorphism {
  std::optional<Morphism<GenericRing>> generic;
  std::optional<Morphism<CycloRing>> cyclo;
};

AnyMorphism parse_any_morphism(const std::string& spec, std::optional<int> ell) {
  AnyMorphism result;
  std::ifstream probe(spec);
  if (probe) {
    Json j = Json::parse(probe);
    if (j.contains("ring") && !json_ring_is_generic(j["ring"])) {
      Morphism<CycloRing> m = cyclo_morphism_from_json(j);
      if (ell && *ell != m.ring().ell)
        throw Error(ErrorCode::RingMismatch,
                    "file is specialized at a different root of unity");
      result.cyclo = std::move(m);
      return result;
    }
    Morphism<GenericRing> m = generic_morphism_from_json(j);
    if (ell)
      result.cyclo = evaluate_morphism(m, *ell);
    else
      result.generic = std::move(m);
    return result;
  }
  Morphism<GenericRing> m = parse_generic_morphism(spec);
  if (ell)
    result.cyclo = evaluate_morphism(m, *ell);
  else
    result.generic = std::move(m);
  return result;
}

YoungDiagram parse_shape(const std::string& text) {
  auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return YoungDiagram{std::stoi(text), 0};
    return YoungDiagram{std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::UsageError, "shape must be given as L1 or L1,L2");
  }
}

Json subspace_to_json(const SubspaceBasis<CycloRing>& basis) {
  Json rows = Json::array();
  for (const auto& row : basis.rows) {
    Json entries = Json::array();
    for (const auto& [idx, coeff] : row)
      entries.push_back(Json::array({idx, cyclo_to_json(coeff)}));
    rows.push_back(entries);
  }
  return Json{{"m", basis.m},
              {"n", basis.n},
              {"ring", Json{{"cyclo", basis.ring.ell}}},
              {"ambient_dim", basis.ambient_dim},
              {"dim", basis.dim()},
              {"vectors", rows}};
}

Json subspace_to_json(const SubspaceBasis<GenericRing>& basis) {
  Json rows = Json::array();
  for (const auto& row : basis.rows) {
    Json entries = Json::array();
    for (const auto& [idx, coeff] : row)
      entries.push_back(Json::array({idx, scalar_to_json(coeff)}));
    rows.push_back(entries);
  }
  return Json{{"m", basis.m},
              {"n", basis.n},
              {"ring", "generic"},
              {"ambient_dim", basis.ambient_dim},
              {"dim", basis.dim()},
              {"vectors", rows}};
}

template <class Ring>
Json gram_to_json(int m, int n, const Ring& ring) {
  Matrix<Ring> g = gram_matrix(m, n, ring);
  Json entries = Json::array();
  for (int i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < g.cols(); ++j) {
      if constexpr (std::is_same_v<Ring, GenericRing>)
        row.push_back(scalar_to_json(g.at(i, j)));
      else
        row.push_back(cyclo_to_json(g.at(i, j)));
    }
    entries.push_back(row);
  }
  Json ring_tag;
  if constexpr (std::is_same_v<Ring, GenericRing>)
    ring_tag = "generic";
  else
    ring_tag = Json{{"cyclo", ring.ell}};
  return Json{{"m", m}, {"n", n}, {"ring", ring_tag}, {"size", g.rows()}, {"entries", entries}};
}

std::string bratteli_dot(const BratteliGraph& g) {
  std::string dot = "digraph bratteli {\n  rankdir=TB;\n  node [shape=box];\n";
  auto vertex_id = [](int level, const YoungDiagram& shape) {
    return "\"" + std::to_string(level) + ":" + std::to_string(shape.rows1) + "," +
           std::to_string(shape.rows2) + "\"";
  };
  for (int level = 0; level < static_cast<int>(g.vertices.size()); ++level) {
    for (const auto& shape : g.vertices[static_cast<size_t>(level)]) {
      dot += "  " + vertex_id(level, shape) + " [label=\"" + std::to_string(shape.rows1) +
             "," + std::to_string(shape.rows2) + "\"];\n";
    }
  }
  for (int level = 0; level < static_cast<int>(g.edges.size()); ++level) {
    for (const auto& [i, j] : g.edges[static_cast<size_t>(level)]) {
      const auto& src = g.vertices[static_cast<size_t>(level)][static_cast<size_t>(i)];
      const auto& dst = g.vertices[static_cast<size_t>(level + 1)][static_cast<size_t>(j)];
      dot += "  " + vertex_id(level, src) + " -> " + vertex_id(level + 1, dst) + ";\n";
    }
  }
  dot += "}\n";
  return dot;
}

Json bratteli_json(const BratteliGraph& g) {
  Json levels = Json::array();
  for (int level = 0; level < static_cast<int>(g.vertices.size()); ++level) {
    Json vertices = Json::array();
    for (const auto& shape : g.vertices[static_cast<size_t>(level)]) {
      vertices.push_back(Json{{"rows", Json::array({shape.rows1, shape.rows2})},
                              {"width", shape.width()},
                              {"tableaux", count_tableaux(shape)}});
    }
    levels.push_back(vertices);
  }
  Json edges = Json::array();
  for (const auto& level_edges : g.edges) {
    Json pairs = Json::array();
    for (const auto& [i, j] : level_edges) pairs.push_back(Json::array({i, j}));
    edges.push_back(pairs);
  }
  return Json{{"levels", levels}, {"edges", edges}};
}

struct CommonFlags {
  std::optional<int> ell;
  int max_n = 4;
  std::uint64_t seed = 1;
  std::string out = "json";
  int jobs = 0;
  std::string mode = "exact";
};

void print_verify_report(const VerifyReport& report, const std::string& out_format,
                         std::ostream& out) {
  if (out_format == "json") {
    out << report.to_json().dump() << "\n";
    return;
  }
  for (const auto& cell : report.cells)
    out << "cell (" << cell.m << "," << cell.n << "): neg_dim=" << cell.neg_dim
        << " ideal_dim=" << cell.ideal_dim << (cell.equal ? " equal" : " DIFFER")
        << "\n";
  out << (report.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Temperley-Lieb category calculator"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string cache_dir_flag;
  app.add_option("--cache-dir", cache_dir_flag, "idempotent cache directory");

  CommonFlags flags;

  // dim
  int opt_m = 0, opt_n = 0;
  auto* cmd_dim = app.add_subcommand("dim", "dimension of Hom(m,n)");
  cmd_dim->add_option("--m", opt_m)->required();
  cmd_dim->add_option("--n", opt_n)->required();

  // compose / tensor / trace
  std::vector<std::string> operands;
  auto* cmd_compose = app.add_subcommand("compose", "compose two morphisms (first after second)");
  cmd_compose->add_option("morphisms", operands)->expected(2);
  cmd_compose->add_option("--ell", flags.ell, "evaluate at the root of unity");
  auto* cmd_tensor = app.add_subcommand("tensor", "tensor two morphisms");
  cmd_tensor->add_option("morphisms", operands)->expected(2);
  cmd_tensor->add_option("--ell", flags.ell);
  auto* cmd_trace = app.add_subcommand("trace", "Markov trace of an endomorphism");
  cmd_trace->add_option("morphisms", operands)->expected(1);
  cmd_trace->add_option("--ell", flags.ell);

  // jw / pathidem / zleft
  int opt_strands = 1;
  auto* cmd_jw = app.add_subcommand("jw", "Jones-Wenzl projector");
  cmd_jw->add_option("--n", opt_strands)->required();
  cmd_jw->add_option("--ell", flags.ell);
  std::string opt_path;
  auto* cmd_pathidem = app.add_subcommand("pathidem", "path idempotent by width sequence");
  cmd_pathidem->add_option("--path", opt_path)->required();
  cmd_pathidem->add_option("--ell", flags.ell);
  std::string opt_lambda;
  bool opt_evaluate = false;
  std::optional<int> opt_blocks;
  auto* cmd_zleft = app.add_subcommand("zleft", "evaluable left idempotent of a shape");
  cmd_zleft->add_option("--lambda", opt_lambda);
  cmd_zleft->add_option("--ell", flags.ell)->required();
  cmd_zleft->add_flag("--evaluate", opt_evaluate, "emit the evaluated morphism");
  cmd_zleft->add_option("--blocks", opt_blocks,
                        "emit the block report for End(N) instead of one shape");

  // bratteli
  auto* cmd_bratteli = app.add_subcommand("bratteli", "tower graph up to a level");
  cmd_bratteli->add_option("--max-n", flags.max_n)->required();
  cmd_bratteli->add_option("--out", flags.out)->check(CLI::IsMember({"json", "dot", "text"}));

  // gram / neg / ideal
  auto* cmd_gram = app.add_subcommand("gram", "trace-pairing Gram matrix of Hom(m,n)");
  cmd_gram->add_option("--m", opt_m)->required();
  cmd_gram->add_option("--n", opt_n)->required();
  cmd_gram->add_option("--ell", flags.ell);
  auto* cmd_neg = app.add_subcommand("neg", "negligible subspace of Hom(m,n)");
  cmd_neg->add_option("--m", opt_m)->required();
  cmd_neg->add_option("--n", opt_n)->required();
  cmd_neg->add_option("--ell", flags.ell);
  cmd_neg->add_option("--mode", flags.mode)->check(CLI::IsMember({"exact", "certify-generic"}));
  cmd_neg->add_option("--seed", flags.seed);
  std::string opt_generator = "";
  int opt_max_extra = 12;
  auto* cmd_ideal = app.add_subcommand("ideal", "truncated two-sided ideal of a generator");
  cmd_ideal->add_option("--m", opt_m)->required();
  cmd_ideal->add_option("--n", opt_n)->required();
  cmd_ideal->add_option("--ell", flags.ell)->required();
  cmd_ideal->add_option("--gen", opt_generator, "generator expression (default jw:ell-1)");
  cmd_ideal->add_option("--max-extra", opt_max_extra, "padding cap");
  cmd_ideal->add_option("--seed", flags.seed);

  // verify / verify-even
  bool opt_generic = false;
  auto* cmd_verify = app.add_subcommand("verify", "negligible = projector ideal sweep");
  cmd_verify->add_option("--ell", flags.ell);
  cmd_verify->add_flag("--generic", opt_generic, "generic-field sweep instead");
  cmd_verify->add_option("--max-n", flags.max_n)->required();
  cmd_verify->add_option("--seed", flags.seed);
  cmd_verify->add_option("--jobs", flags.jobs);
  cmd_verify->add_option("--out", flags.out)->check(CLI::IsMember({"json", "text"}));
  auto* cmd_verify_even = app.add_subcommand("verify-even", "sweep restricted to even objects");
  cmd_verify_even->add_option("--ell", flags.ell)->required();
  cmd_verify_even->add_option("--max-n", flags.max_n)->required();
  cmd_verify_even->add_option("--seed", flags.seed);
  cmd_verify_even->add_option("--jobs", flags.jobs);
  cmd_verify_even->add_option("--out", flags.out)->check(CLI::IsMember({"json", "text"}));

  // constancy
  int opt_count = 20;
  auto* cmd_constancy = app.add_subcommand("constancy", "compressed-dimension comparisons");
  cmd_constancy->add_option("--ell", flags.ell)->required();
  cmd_constancy->add_option("--count", opt_count);
  cmd_constancy->add_option("--seed", flags.seed);

  // cache
  auto* cmd_cache = app.add_subcommand("cache", "cache management");
  std::string cache_action;
  cmd_cache->add_option("action", cache_action)->check(CLI::IsMember({"info", "clear", "warm"}));
  cmd_cache->add_option("--max-n", flags.max_n);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    emit_error(err, "UsageError", e.what());
    return 2;
  }

  // TL_CACHE_DIR wins over the flag; otherwise flag, otherwise default.
  if (std::getenv("TL_CACHE_DIR") || cache_dir_flag.empty())
    IdempotentCache::instance().set_directory(default_cache_dir());
  else
    IdempotentCache::instance().set_directory(cache_dir_flag);

  try {
    if (cmd_dim->parsed()) {
      const HomBasis& basis = hom_basis(opt_m, opt_n);
      out << basis.size() << "\n";
      return 0;
    }

    if (cmd_compose->parsed() || cmd_tensor->parsed()) {
      AnyMorphism a = parse_any_morphism(operands[0], flags.ell);
      AnyMorphism b = parse_any_morphism(operands[1], flags.ell);
      // File inputs may fix the ring even without --ell; line the two up.
      if (a.cyclo && b.generic) b.cyclo = evaluate_morphism(*b.generic, a.cyclo->ring().ell);
      if (b.cyclo && a.generic) a.cyclo = evaluate_morphism(*a.generic, b.cyclo->ring().ell);
      if (a.cyclo) {
        auto result = cmd_compose->parsed() ? compose(*a.cyclo, *b.cyclo)
                                            : tensor(*a.cyclo, *b.cyclo);
        out << morphism_to_json(result).dump() << "\n";
      } else {
        auto result = cmd_compose->parsed() ? compose(*a.generic, *b.generic)
                                            : tensor(*a.generic, *b.generic);
        out << morphism_to_json(result).dump() << "\n";
      }
      return 0;
    }

    if (cmd_trace->parsed()) {
      AnyMorphism a = parse_any_morphism(operands[0], flags.ell);
      if (a.cyclo)
        out << cyclo_to_json(trace(*a.cyclo)).dump() << "\n";
      else
        out << scalar_to_json(trace(*a.generic)).dump() << "\n";
      return 0;
    }

    if (cmd_jw->parsed()) {
      if (flags.ell)
        out << morphism_to_json(jones_wenzl_cyclo(opt_strands, *flags.ell)).dump() << "\n";
      else
        out << morphism_to_json(jones_wenzl(opt_strands)).dump() << "\n";
      return 0;
    }

    if (cmd_pathidem->parsed()) {
      auto p = path_idempotent(path_from_key(opt_path));
      if (flags.ell)
        out << morphism_to_json(evaluate_morphism(p, *flags.ell)).dump() << "\n";
      else
        out << morphism_to_json(p).dump() << "\n";
      return 0;
    }

    if (cmd_zleft->parsed()) {
      if (opt_blocks) {
        out << block_report_json(*opt_blocks, *flags.ell).dump() << "\n";
        return 0;
      }
      if (opt_lambda.empty())
        throw Error(ErrorCode::UsageError, "zleft needs --lambda or --blocks");
      YoungDiagram lambda = parse_shape(opt_lambda);
      auto z = z_left(lambda, *flags.ell);
      if (opt_evaluate)
        out << morphism_to_json(evaluate_morphism(z, *flags.ell)).dump() << "\n";
      else
        out << morphism_to_json(z).dump() << "\n";
      return 0;
    }

    if (cmd_bratteli->parsed()) {
      BratteliGraph g = bratteli_graph(flags.max_n);
      if (flags.out == "dot") {
        out << bratteli_dot(g);
      } else if (flags.out == "json") {
        out << bratteli_json(g).dump() << "\n";
      } else {
        for (int level = 0; level <= g.levels; ++level) {
          out << "level " << level << ":";
          for (const auto& shape : g.vertices[static_cast<size_t>(level)])
            out << " " << shape.str();
          out << "\n";
        }
      }
      return 0;
    }

    if (cmd_gram->parsed()) {
      if (flags.ell)
        out << gram_to_json(opt_m, opt_n, CycloRing(*flags.ell)).dump() << "\n";
      else
        out << gram_to_json(opt_m, opt_n, GenericRing{}).dump() << "\n";
      return 0;
    }

    if (cmd_neg->parsed()) {
      if (flags.ell) {
        out << subspace_to_json(negligible_basis(opt_m, opt_n, CycloRing(*flags.ell))).dump()
            << "\n";
        return 0;
      }
      if (flags.mode == "certify-generic") {
        if (opt_m != opt_n)
          throw Error(ErrorCode::UsageError,
                      "the full-rank certificate is defined for endomorphism cells");
        bool certified = generic_gram_full_rank_certificate(opt_m, flags.seed);
        out << Json{{"m", opt_m},
                    {"n", opt_n},
                    {"ring", "generic"},
                    {"dim", 0},
                    {"certified_full_rank", certified}}
                   .dump()
            << "\n";
        return certified ? 0 : 1;
      }
      out << subspace_to_json(negligible_basis(opt_m, opt_n, GenericRing{})).dump() << "\n";
      return 0;
    }

    if (cmd_ideal->parsed()) {
      CycloRing ring(*flags.ell);
      Morphism<CycloRing> generator =
          opt_generator.empty()
              ? jones_wenzl_cyclo(*flags.ell - 1, *flags.ell)
              : evaluate_morphism(parse_generic_morphism(opt_generator), *flags.ell);
      TruncationOptions opts;
      opts.max_extra_strands = opt_max_extra;
      opts.seed = flags.seed;
      out << subspace_to_json(ideal_truncation(generator, opt_m, opt_n, opts)).dump() << "\n";
      return 0;
    }

    if (cmd_verify->parsed() || cmd_verify_even->parsed()) {
      VerifyOptions opts;
      opts.seed = flags.seed;
      opts.jobs = flags.jobs > 0
                      ? flags.jobs
                      : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
      VerifyReport report;
      if (cmd_verify_even->parsed()) {
        report = verify_even_subcategory(*flags.ell, flags.max_n, opts);
      } else if (opt_generic) {
        report = verify_generic(flags.max_n, opts);
      } else {
        if (!flags.ell)
          throw Error(ErrorCode::UsageError, "verify needs --ell or --generic");
        report = verify_main_theorem(*flags.ell, flags.max_n, opts);
      }
      print_verify_report(report, flags.out, out);
      return report.pass ? 0 : 1;
    }

    if (cmd_constancy->parsed()) {
      Rng rng(flags.seed);
      Json instances = Json::array();
      bool all_equal = true;
      for (int i = 0; i < opt_count; ++i) {
        int n = rng.range(1, 3);
        auto pick = [&](int size) -> Morphism<GenericRing> {
          switch (rng.below(4)) {
            case 0:
              return Morphism<GenericRing>::identity(GenericRing{}, size);
            case 1:
              return jones_wenzl(std::min(size, *flags.ell - 1));
            case 2:
              return z_reg_nil(size, *flags.ell).first;
            default: {
              std::vector<YoungDiagram> noncritical;
              for (const auto& shape : shapes_of_size(size))
                if (shape.width() % *flags.ell != 0) noncritical.push_back(shape);
              if (noncritical.empty())
                return Morphism<GenericRing>::identity(GenericRing{}, size);
              return z_left(noncritical[rng.below(noncritical.size())], *flags.ell);
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
        ConstancyReport result = constancy_check(e, f, ranks, fm, en, *flags.ell);
        all_equal = all_equal && result.equal;
        instances.push_back(Json{{"m", fm},
                                 {"n", en},
                                 {"diagrams", ranks.size()},
                                 {"generic_dim", result.generic_dim},
                                 {"specialized_dim", result.specialized_dim},
                                 {"equal", result.equal}});
      }
      out << Json{{"ell", *flags.ell},
                  {"seed", flags.seed},
                  {"instances", instances},
                  {"verdict", all_equal ? "PASS" : "FAIL"}}
                 .dump()
          << "\n";
      return all_equal ? 0 : 1;
    }

    if (cmd_cache->parsed()) {
      auto& cache = IdempotentCache::instance();
      if (cache_action == "clear") {
        int removed = cache.clear_disk();
        cache.clear_memory();
        out << Json{{"cleared", removed}}.dump() << "\n";
      } else if (cache_action == "warm") {
        int built = 0;
        for (int n = 1; n <= flags.max_n; ++n)
          for (const auto& path : all_paths(n)) {
            // store explicitly so a warmed directory is complete even
            // when the values were already in memory
            cache.store(path_key(path), path_idempotent(path));
            ++built;
          }
        out << Json{{"warmed", built}, {"dir", cache.directory().string()}}.dump() << "\n";
      } else {
        out << Json{{"dir", cache.directory().string()},
                    {"files", cache.disk_file_count()}}
                   .dump()
            << "\n";
      }
      return 0;
    }

    emit_error(err, "UsageError", "no subcommand given");
    return 2;
  } catch (const Error& e) {
    emit_error(err, error_code_name(e.code()), e.what());
    return exit_code_for(e);
  } catch (const std::exception& e) {
    emit_error(err, "InternalError", e.what());
    return 2;
  }
}

}  // namespace tl
