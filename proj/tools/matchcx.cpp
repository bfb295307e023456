// matchcx: homology tables, verification suites and exact-sequence checks
// for matching complexes.
//
// Exit status: 0 pass, 1 check failure, 2 usage or bad input, 3 resource
// budget exceeded (partial output is still printed).

#include "matchcx/cache.hpp"
#include "matchcx/collapse.hpp"
#include "matchcx/reference.hpp"
#include "matchcx/sequences.hpp"
#include "matchcx/suites.hpp"
#include "matchcx/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace matchcx;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kBudget = 3;
constexpr std::size_t kBigNnz = 5000000;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ComplexSpec {
  int complete = -1;
  std::vector<int> bipartite;
  std::string graph_file;
  std::string load_file;
  std::vector<std::string> delete_edges;

  void add_options(CLI::App* app) {
    auto* g = app->add_option_group("complex", "which complex to use (exactly one)");
    g->add_option("--complete,-n", complete, "M_n = M(K_n)");
    g->add_option("--bipartite", bipartite, "M(K_{a,b})")->expected(2);
    g->add_option("--graph", graph_file, "edge list file: n, then one 'u v' per line");
    g->add_option("--load", load_file, "complex file written by --save");
    g->require_option(1);
    app->add_option("--delete-edge", delete_edges, "remove every simplex containing the 0-cell u,v")
        ->delimiter(';');
  }

  // Complex and its identifier in JSON records.
  std::pair<MatchingComplex, std::string> build() const {
    MatchingComplex k;
    std::string id;
    if (complete >= 0) {
      k = matching_complex(complete_graph(complete));
      id = "M_" + std::to_string(complete);
    } else if (!bipartite.empty()) {
      k = matching_complex(complete_bipartite(bipartite[0], bipartite[1]));
      id = "M(K_" + std::to_string(bipartite[0]) + "," + std::to_string(bipartite[1]) + ")";
    } else if (!graph_file.empty()) {
      std::ifstream in(graph_file);
      if (!in) throw UsageError("cannot open " + graph_file);
      k = matching_complex(parse_edge_list(in));
    } else {
      std::ifstream in(load_file);
      if (!in) throw UsageError("cannot open " + load_file);
      k = read_complex(in);
    }
    for (const auto& s : delete_edges) {
      int u = 0, v = 0;
      char comma = 0;
      std::istringstream ls(s);
      if (!(ls >> u >> comma >> v) || comma != ',') throw UsageError("--delete-edge expects u,v");
      k = delete_zero_cell(k, make_edge(u, v));
    }
    if (complete >= 0 && delete_edges == std::vector<std::string>{"1,2"}) {
      id = complex_id(TableKind::DeletedEdge, complete);
    } else if (id.empty() || !delete_edges.empty()) {
      std::ostringstream s;
      s << "complex:" << std::hex << std::setw(16) << std::setfill('0') << k.content_hash();
      id = s.str();
    }
    return {std::move(k), id};
  }
};

struct BudgetFlags {
  std::size_t max_nnz = 0;
  double timeout = 300;
  bool big = false;
  void add_options(CLI::App* app) {
    app->add_option("--max-nnz", max_nnz, "largest boundary matrix allowed (default 50000, 5000000 with --big)");
    app->add_option("--timeout", timeout, "soft wall-clock limit in seconds")->capture_default_str();
    app->add_flag("--big", big, "allow n >= 11 and large matrices");
  }
  Budget budget() const {
    Budget b;
    b.big = big;
    b.timeout_s = timeout;
    b.max_nnz = max_nnz ? max_nnz : (big ? kBigNnz : b.max_nnz);
    return b;
  }
};

Ring parse_ring(const std::string& s) {
  try {
    return Ring::parse(s);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
}

void emit(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_table(int min_n, int max_n, const std::string& which, const std::string& ring, const std::string& format,
              bool check, const BudgetFlags& bf, const ResultCache& cache) {
  TableKind kind;
  try {
    kind = parse_table_kind(which);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  if (min_n < 0) min_n = kind == TableKind::Matching ? 1 : 2;
  if (max_n < min_n) throw UsageError("--max-n must be at least --min-n");
  auto t = compute_table(kind, min_n, max_n, parse_ring(ring), bf.budget(), cache);
  if (format == "json")
    emit(t.to_json());
  else if (format == "csv")
    std::cout << t.to_csv();
  else
    std::cout << t.to_text();

  int status = t.complete() ? kPass : kBudget;
  if (check) {
    bool ok = true;
    for (const auto& row : t.rows) {
      if (row.gap) continue;
      auto ref = kind == TableKind::Matching ? published_matching_homology(row.n)
                                             : published_deleted_edge_homology(row.n);
      if (!ref) continue;
      for (const auto& h : row.groups) {
        auto it = ref->find(h.degree);
        GroupDescriptor want = it == ref->end() ? GroupDescriptor{} : it->second;
        if (parse_ring(ring) != Ring::integers()) continue;
        if (h.group != want) {
          std::cerr << "mismatch at n=" << row.n << " d=" << h.degree << ": computed " << h.group.to_string()
                    << ", published " << want.to_string() << "\n";
          ok = false;
        }
      }
    }
    if (!ok) status = kFail;
  }
  return status;
}

int cmd_homology(const ComplexSpec& spec, std::optional<int> degree, const std::string& ring,
                 const std::string& save, const BudgetFlags& bf, const ResultCache& cache) {
  auto [k, id] = spec.build();
  if (!save.empty()) {
    std::ofstream out(save);
    if (!out) throw UsageError("cannot write " + save);
    write_complex(out, k);
  }
  const Budget b = bf.budget();
  if (row_nnz(k) > b.max_nnz) {
    std::cerr << "boundary matrices with " << row_nnz(k) << " nonzeros exceed the budget\n";
    return kBudget;
  }
  Ring r = parse_ring(ring);
  nlohmann::json out = nlohmann::json::array();
  const int lo = degree ? *degree : -1;
  const int hi = degree ? *degree : k.dimension();
  for (int d = lo; d <= hi; ++d) out.push_back(cached_homology(k, id, d, r, cache).to_json());
  emit(out);
  return kPass;
}

int cmd_cycle_order(const ComplexSpec& spec, const std::string& chain_file) {
  auto [k, id] = spec.build();
  std::ifstream in(chain_file);
  if (!in) throw UsageError("cannot open " + chain_file);
  std::stringstream text;
  text << in.rdbuf();
  Chain z;
  try {
    z = parse_chain(text.str());
  } catch (const std::exception& e) {
    throw UsageError(std::string("bad chain file: ") + e.what());
  }
  std::optional<Integer> ord;
  try {
    ord = class_order(k, z.dimension(), z);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::cout << (ord ? ord->get_str() : "infinite") << "\n";
  return kPass;
}

int cmd_verify(const std::string& suite, bool corrupt, std::uint64_t seed, std::size_t cap) {
  SuiteOptions opt;
  opt.corrupt_fixture = corrupt;
  opt.seed = seed;
  opt.enumeration_cap = cap;
  SuiteReport rep;
  try {
    rep = run_suite(suite, opt);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  emit(rep.to_json());
  return rep.passed() ? kPass : kFail;
}

int cmd_verify_sequence(const std::string& kind, int n, const std::string& ring, std::optional<int> lo,
                        std::optional<int> hi, bool exact_integral, const std::vector<std::string>& corrupt) {
  SequenceKind k;
  try {
    k = parse_sequence_kind(kind);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  std::optional<std::pair<int, int>> window;
  if (lo || hi) {
    auto def = default_window(n);
    window = std::pair{lo.value_or(def.first), hi.value_or(def.second)};
  }
  SequenceInstance s;
  if (k == SequenceKind::Pair) {
    MatchingComplex x = matching_complex(complete_graph(n));
    auto w = window.value_or(std::pair{-1, x.dimension() + 1});
    s = pair_les(ComplexPair(x, delete_zero_cell(x, make_edge(1, 2))), w.first, w.second);
  } else {
    s = make_sequence(k, n, window);
  }
  for (const auto& c : corrupt) {
    auto colon = c.find(':');
    if (colon == std::string::npos) throw UsageError("--corrupt expects MAP:DEGREE");
    corrupt_map(s, c.substr(0, colon), std::stoi(c.substr(colon + 1)));
  }
  ExactnessOptions opt;
  opt.exact_integral = exact_integral;
  auto rep = verify_exactness(s, parse_ring(ring), opt);
  emit(rep.to_json());
  return rep.passed() ? kPass : kFail;
}

int cmd_collapse(const ComplexSpec& spec, std::optional<int> target, const std::string& trace_out,
                 const std::string& replay_file) {
  auto [k, id] = spec.build();
  if (!replay_file.empty()) {
    std::ifstream in(replay_file);
    if (!in) throw UsageError("cannot open " + replay_file);
    CollapseTrace t;
    try {
      t = collapse_trace_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& e) {
      throw UsageError(std::string("bad trace: ") + e.what());
    }
    bool legal = replay(k, t);
    emit({{"complex_id", id}, {"steps", t.steps.size()}, {"legal", legal}});
    return legal ? kPass : kFail;
  }
  const int tgt = target ? *target : k.ground().num_vertices() / 2 - 2;
  auto t = collapse_to_dimension(k, tgt);
  if (!trace_out.empty()) {
    std::ofstream out(trace_out);
    if (!out) throw UsageError("cannot write " + trace_out);
    out << t.to_json().dump() << "\n";
  }
  bool preserved = true;
  for (int d = -1; d <= std::max(k.dimension(), 0); ++d)
    preserved = preserved && homology(k, d, Ring::integers()) == homology(t.final_complex, d, Ring::integers());
  nlohmann::json j{{"complex_id", id},
                   {"target", tgt},
                   {"success", t.success},
                   {"rotation", t.rotation},
                   {"steps", t.steps.size()},
                   {"final_dimension", t.final_complex.dimension()},
                   {"homology_preserved", preserved}};
  emit(j);
  return t.success && preserved ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homology of matching complexes"};
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "result cache directory (default: $MATCHCX_CACHE_DIR)");

  int min_n = -1, max_n = 7;
  std::string which = "M", ring = "Z", format = "text";
  bool check = false;
  BudgetFlags table_budget, hom_budget;
  auto* table = app.add_subcommand("table", "homology table of M_n or M_n - e");
  table->add_option("--max-n", max_n)->capture_default_str();
  table->add_option("--min-n", min_n, "first row (default 1 for M, 2 for M-e)");
  table->add_option("--which", which, "M or M-e")->capture_default_str();
  table->add_option("--ring", ring, "Z, Q or Zp:<p>")->capture_default_str();
  table->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();
  table->add_flag("--check", check, "compare with the published groups");
  table_budget.add_options(table);

  ComplexSpec hom_spec;
  std::optional<int> degree;
  std::string hom_ring = "Z", save;
  auto* hom = app.add_subcommand("homology", "homology groups of one complex");
  hom_spec.add_options(hom);
  hom->add_option("--degree,-d", degree, "single degree (default: all)");
  hom->add_option("--ring", hom_ring, "Z, Q or Zp:<p>")->capture_default_str();
  hom->add_option("--save", save, "write the complex to a file");
  hom_budget.add_options(hom);

  ComplexSpec co_spec;
  std::string chain_file;
  auto* co = app.add_subcommand("cycle-order", "order of a cycle's homology class over Z");
  co_spec.add_options(co);
  co->add_option("--chain", chain_file, "chain file, one 'coeff  u v | u v ...' term per line")->required();

  std::string suite;
  bool corrupt = false;
  std::uint64_t seed = SuiteOptions{}.seed;
  std::size_t cap = SuiteOptions{}.enumeration_cap;
  auto* ver = app.add_subcommand("verify", "run a verification suite");
  ver->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  ver->add_flag("--corrupt-fixture", corrupt, "add a sequence with one corrupted map (must fail)");
  ver->add_option("--seed", seed)->capture_default_str();
  ver->add_option("--cap", cap, "enumeration cap for generation checks")->capture_default_str();

  std::string kind;
  int seq_n = 6;
  std::string seq_ring = "Z";
  std::optional<int> lo, hi;
  bool exact_integral = false;
  std::vector<std::string> corrupt_maps;
  auto* vs = app.add_subcommand("verify-sequence", "check one long exact sequence");
  vs->add_option("--kind", kind, "pair, 0-1-2, 0-3-4, 0-3-5-6, 0-e-2 or 0-2-3-5")->required();
  vs->add_option("--n", seq_n)->capture_default_str();
  vs->add_option("--ring", seq_ring)->capture_default_str();
  vs->add_option("--lo", lo);
  vs->add_option("--hi", hi);
  vs->add_flag("--exact-integral", exact_integral, "also certify exactness of the integral lattices");
  vs->add_option("--corrupt", corrupt_maps, "MAP:DEGREE, flip one entry of f, g, h, alpha or delta");

  ComplexSpec col_spec;
  std::optional<int> target;
  std::string trace_out, replay_file;
  auto* col = app.add_subcommand("collapse", "greedy collapse below a dimension");
  col_spec.add_options(col);
  col->add_option("--target", target, "default: vertices / 2 - 2");
  col->add_option("--trace", trace_out, "write the trace as JSON");
  col->add_option("--replay", replay_file, "check a stored trace instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    ResultCache cache = cache_dir.empty() ? ResultCache::from_environment() : ResultCache(cache_dir);
    if (*table) return cmd_table(min_n, max_n, which, ring, format, check, table_budget, cache);
    if (*hom) return cmd_homology(hom_spec, degree, hom_ring, save, hom_budget, cache);
    if (*co) return cmd_cycle_order(co_spec, chain_file);
    if (*ver) return cmd_verify(suite, corrupt, seed, cap);
    if (*vs) return cmd_verify_sequence(kind, seq_n, seq_ring, lo, hi, exact_integral, corrupt_maps);
    if (*col) return cmd_collapse(col_spec, target, trace_out, replay_file);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
