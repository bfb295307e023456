#include "matchcx/suites.hpp"

#include "matchcx/collapse.hpp"
#include "matchcx/cycles.hpp"
#include "matchcx/field_homology.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/sequences.hpp"
#include "matchcx/snf.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace matchcx {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

nlohmann::json SuiteReport::to_json() const {
  nlohmann::json cs = nlohmann::json::array();
  std::size_t failed = 0;
  for (const auto& c : checks) {
    nlohmann::json j{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.is_null()) j["detail"] = c.detail;
    cs.push_back(j);
    if (!c.passed) ++failed;
  }
  return {{"suite", suite}, {"passed", passed()}, {"total", checks.size()}, {"failed", failed}, {"checks", cs}};
}

std::vector<std::string> suite_names() {
  return {"sequences", "bouc", "torsion", "collapse", "inequalities", "generation", "all"};
}

Integer abs_determinant(const DenseIntMatrix& m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return 1;
  auto snf = dense_smith_normal_form(m, n, false);
  if (snf.rank < n) return 0;
  Integer p = 1;
  for (const auto& d : snf.invariant_factors) p *= d;
  return p;
}

namespace {

MatchingComplex m_n(int n) { return matching_complex(complete_graph(n)); }

nlohmann::json exactness_summary(const ExactnessReport& r) {
  std::size_t bad_maps = 0, bad_hom = 0, bad_nodes = 0;
  for (const auto& c : r.chain_maps) bad_maps += !c.ok;
  for (const auto& c : r.homology_checks) bad_hom += !c.ok;
  nlohmann::json failing = nlohmann::json::array();
  for (const auto& c : r.nodes)
    if (!c.exact()) {
      ++bad_nodes;
      failing.push_back({{"node", r.node_names.at(static_cast<std::size_t>(c.node))}, {"degree", c.degree}});
    }
  return {{"degrees", {r.lo, r.hi}},
          {"nodes", r.nodes.size()},
          {"failed_chain_maps", bad_maps},
          {"failed_homology_checks", bad_hom},
          {"inexact_nodes", failing}};
}

std::string group_str(const GroupDescriptor& g) { return g.to_string(); }

void sequences_suite(SuiteReport& rep, const SuiteOptions& opt) {
  for (auto kind : {SequenceKind::Seq012, SequenceKind::Seq034, SequenceKind::Seq0356, SequenceKind::Seq0e2,
                    SequenceKind::Seq0235})
    for (int n = 6; n <= 8; ++n) {
      auto r = verify_exactness(make_sequence(kind, n), Ring::integers());
      rep.checks.push_back({to_string(kind) + " n=" + std::to_string(n), r.passed(), exactness_summary(r)});
    }

  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < 20; ++i) {
    const int nv = std::uniform_int_distribution<int>(5, 7)(rng);
    std::vector<Edge> es;
    std::bernoulli_distribution coin(0.6);
    for (int u = 1; u <= nv; ++u)
      for (int v = u + 1; v <= nv; ++v)
        if (coin(rng)) es.push_back({u, v});
    if (es.size() < 2) es = {{1, 2}, {2, 3}};
    Graph g(nv, es);
    MatchingComplex x = matching_complex(g);
    MatchingComplex a = x;
    const int removed = std::uniform_int_distribution<int>(1, 2)(rng);
    std::vector<Edge> pool = es;
    std::shuffle(pool.begin(), pool.end(), rng);
    nlohmann::json gone = nlohmann::json::array();
    for (int j = 0; j < removed; ++j) {
      a = delete_zero_cell(a, pool[static_cast<std::size_t>(j)]);
      gone.push_back(to_string(pool[static_cast<std::size_t>(j)]));
    }
    auto r = verify_exactness(pair_les(ComplexPair(x, a), -1, x.dimension() + 1), Ring::integers());
    auto detail = exactness_summary(r);
    detail["graph"] = format_edge_list(g);
    detail["deleted"] = gone;
    rep.checks.push_back({"random pair #" + std::to_string(i), r.passed(), detail});
  }

  if (opt.corrupt_fixture) {
    auto s = seq_012(6);
    corrupt_map(s, "f", 1);
    auto r = verify_exactness(s, Ring::integers());
    rep.checks.push_back({"corrupted fixture 0-1-2 n=6 f_1", r.passed(), exactness_summary(r)});
  }
}

void bouc_suite(SuiteReport& rep) {
  const GroupDescriptor z3 = make_group(0, {Integer(3)});
  for (int r : {2, 3}) {
    const int n = 3 * r + 1;
    MatchingComplex k = m_n(n);
    auto g = homology(k, r - 1, Ring::integers());
    rep.checks.push_back({"H_" + std::to_string(r - 1) + "(M_" + std::to_string(n) + ") = Z_3", g == z3,
                          {{"computed", group_str(g)}}});
    auto ord = class_order(k, r - 1, gamma(r));
    rep.checks.push_back({"order of gamma_" + std::to_string(3 * r) + " in M_" + std::to_string(n) + " is 3",
                          ord && *ord == 3, {{"computed", ord ? ord->get_str() : "infinite"}}});
  }

  const DenseIntMatrix expected = {{0, 1, -1, 0}, {1, 0, 0, -1}, {0, -1, -1, 1}, {1, -1, 0, 1}};
  auto m = psi_image_matrix();
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : m) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& x : row) r.push_back(to_int64(x));
    rows.push_back(r);
  }
  DenseIntMatrix negated = expected;
  for (auto& row : negated)
    for (auto& x : row) x = -x;
  rep.checks.push_back({"psi_* images equal the listed vectors", m == expected || m == negated, {{"rows", rows}}});
  auto det = abs_determinant(m);
  rep.checks.push_back({"|det psi_*| = 3", det == 3, {{"computed", det.get_str()}}});
}

// Coefficient of x^k in (1 + x + x^2)^k.
Integer central_trinomial(int k) {
  std::vector<Integer> p{1};
  for (int i = 0; i < k; ++i) {
    std::vector<Integer> q(p.size() + 2, 0);
    for (std::size_t j = 0; j < p.size(); ++j)
      for (std::size_t s = 0; s < 3; ++s) q[j + s] += p[j];
    p = std::move(q);
  }
  return p[static_cast<std::size_t>(k)];
}

void torsion_suite(SuiteReport& rep) {
  for (int k = 1; k <= 4; ++k) {
    auto g = homology(matching_complex(near_matching_deleted_graph(k)), k - 1, Ring::integers());
    Integer want = central_trinomial(k);
    rep.checks.push_back({"free rank H_" + std::to_string(k - 1) + "(M(G_" + std::to_string(k) + ")) = r_" +
                              std::to_string(k),
                          Integer(static_cast<unsigned long>(g.free_rank)) == want,
                          {{"computed", group_str(g)}, {"r_k", want.get_str()}}});
  }

  Chain z = Chain::oriented({{1, 2}}) - Chain::oriented({{1, 3}});
  Chain th = theta(z, gamma(2), 3);
  auto ord = class_order(m_n(10), 2, th);
  rep.checks.push_back({"(12-13) ^ shifted gamma_6 has order 3 in M_10", ord && *ord == 3,
                        {{"computed", ord ? ord->get_str() : "infinite"}}});

  auto det = abs_determinant(hexagon_projection_matrix());
  rep.checks.push_back({"|det| of the hexagon projection = 2", det == 2, {{"computed", det.get_str()}}});

  std::size_t total = 0;
  nlohmann::json bad = nlohmann::json::array();
  for (int n = 1; n <= 10; ++n) {
    MatchingComplex k = m_n(n);
    for (int d = -1; d <= k.dimension(); ++d)
      for (std::uint32_t p : {2U, 3U, 5U}) {
        auto u = uct_dimension_check(k, d, p);
        ++total;
        if (!u.holds())
          bad.push_back({{"n", n}, {"d", d}, {"p", p}, {"dim", u.mod_p_dimension}, {"predicted", u.predicted}});
      }
  }
  rep.checks.push_back({"UCT dimension checks, n <= 10, p in {2,3,5}", bad.empty(),
                        {{"checked", total}, {"failures", bad}}});
  auto b92 = homology(m_n(9), 2, Ring::mod(3)).free_rank;
  rep.checks.push_back({"dim H_2(M_9; Z_3) = 50", b92 == 50, {{"computed", b92}}});
}

std::string graph_label(const Graph& g, std::size_t index) {
  const int n = g.num_vertices();
  if (g == complete_graph(n)) return "K_" + std::to_string(n);
  for (int a = 1; a < n; ++a)
    if (g == complete_bipartite(a, n - a)) return "K_{" + std::to_string(a) + "," + std::to_string(n - a) + "}";
  return "random #" + std::to_string(index) + " (n=" + std::to_string(n) + ", " + std::to_string(g.edges().size()) +
         " edges)";
}

void collapse_suite(SuiteReport& rep, const SuiteOptions& opt) {
  auto graphs = collapse_fixture_graphs(opt.seed);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    MatchingComplex k = matching_complex(g);
    const int target = g.num_vertices() / 2 - 2;
    auto t = collapse_to_dimension(k, target);
    bool legal = t.success && replay(k, t);
    bool preserved = true;
    for (int d = -1; d <= std::max(k.dimension(), 0) && legal; ++d)
      preserved = preserved && homology(k, d, Ring::integers()) == homology(t.final_complex, d, Ring::integers());
    rep.checks.push_back({graph_label(g, i) + " collapses to dimension " + std::to_string(target),
                          legal && preserved,
                          {{"success", t.success},
                           {"replayed", legal},
                           {"homology_preserved", preserved},
                           {"steps", t.steps.size()},
                           {"rotation", t.rotation},
                           {"final_dimension", t.final_complex.dimension()}}});
  }
}

void inequalities_suite(SuiteReport& rep) {
  auto rows = inequality_report(10);
  nlohmann::json bad = nlohmann::json::array();
  for (const auto& r : rows)
    if (!r.first_holds() || !r.second_holds())
      bad.push_back({{"n", r.n}, {"d", r.d}, {"beta", r.beta}, {"alpha", r.alpha}, {"rhs1", r.rhs1}, {"rhs2", r.rhs2}});
  rep.checks.push_back({"both inequalities, n <= 10", bad.empty(), {{"rows", rows.size()}, {"failures", bad}}});
  auto beta = [&](int n, int d) -> std::size_t {
    for (const auto& r : rows)
      if (r.n == n && r.d == d) return r.beta;
    throw std::logic_error("row missing");
  };
  for (auto [n, d, want] : {std::tuple{3, 0, 2}, std::tuple{6, 1, 16}, std::tuple{9, 2, 50}}) {
    auto b = beta(n, d);
    rep.checks.push_back({"beta(" + std::to_string(n) + "," + std::to_string(d) + ") = " + std::to_string(want),
                          b == static_cast<std::size_t>(want), {{"computed", b}}});
  }
}

void generation_check(SuiteReport& rep, const std::string& name, const MatchingComplex& k, int d,
                      const std::vector<Chain>& cycles, const Ring& ring, std::size_t cap) {
  auto g = generation_report(k, d, cycles, ring);
  nlohmann::json detail{{"cycles", cycles.size()},
                        {"cap", cap},
                        {"cycle_rank", g.cycle_rank},
                        {"span_rank", g.span_rank}};
  if (!ring.is_field()) detail["index"] = g.index.get_str();
  if (!ring.is_field() && !g.generates) {
    // Localise the failure: which coefficient fields still see generation.
    nlohmann::json fields;
    for (auto r : {Ring::rationals(), Ring::mod(2), Ring::mod(3), Ring::mod(5), Ring::mod(7)})
      fields[r.name()] = classes_generate(k, d, cycles, r);
    detail["fields"] = fields;
  }
  rep.checks.push_back({name, g.generates && cycles.size() <= cap, detail});
}

void generation_suite(SuiteReport& rep, const SuiteOptions& opt) {
  {
    std::vector<int> p(7);
    std::iota(p.begin(), p.end(), 1);
    std::vector<Chain> orbit;
    const Chain g = gamma(2);
    do {
      std::vector<int> map(8, 0);
      for (int i = 0; i < 7; ++i) map[static_cast<std::size_t>(i + 1)] = p[static_cast<std::size_t>(i)];
      orbit.push_back(relabel(g, map));
    } while (std::next_permutation(p.begin(), p.end()) && orbit.size() < opt.enumeration_cap);
    generation_check(rep, "H_1(M_7; Z) generated by the S_7-orbit of gamma_6", m_n(7), 1, orbit, Ring::integers(),
                     opt.enumeration_cap);
  }
  generation_check(rep, "H_1(M_6; Z) generated by type <1 0>^<5 2> cycles", m_n(6), 1,
                   enumerate_type_cycles({{1, 0}, {5, 2}}, 6, opt.enumeration_cap), Ring::integers(),
                   opt.enumeration_cap);
  generation_check(rep, "H_2(M_8; Q) generated by type <3 1>^<5 2> cycles", m_n(8), 2,
                   enumerate_type_cycles({{3, 1}, {5, 2}}, 8, opt.enumeration_cap), Ring::rationals(),
                   opt.enumeration_cap);
}

}  // namespace

std::vector<Graph> collapse_fixture_graphs(std::uint64_t seed, std::size_t random_count) {
  std::vector<Graph> out;
  for (int k = 1; k <= 4; ++k) out.push_back(complete_graph(2 * k));
  for (int k = 1; k <= 4; ++k)
    for (int a = 1; a < 2 * k; ++a) out.push_back(complete_bipartite(a, 2 * k - a));
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < random_count; ++i) {
    const int n = 2 * std::uniform_int_distribution<int>(1, 4)(rng);
    std::vector<Edge> es;
    for (int u = 1; u <= n; ++u)
      for (int v = u + 1; v <= n; ++v)
        if (coin(rng)) es.push_back({u, v});
    out.emplace_back(n, std::move(es));
  }
  return out;
}

DenseIntMatrix psi_image_matrix() {
  SequenceInstance s = seq_0356(7);
  const RationalField q;
  FieldHomology<RationalField> h0(q, s.c0, 1);
  if (h0.dimension() != 4) throw std::logic_error("unexpected rank of H_1(N0) at n = 7");

  auto to_field = [&](const SparseVector& v) {
    FieldVector<RationalField> out;
    for (const auto& e : v) out.emplace_back(e.row, q.from_integer(e.value));
    return out;
  };
  // Basis e_cd in the representative coordinates of h0.
  FieldMatrix<RationalField> basis(4, std::vector<Rational>(4, 0));
  std::size_t col = 0;
  for (int c : {2, 3})
    for (int d : {5, 6}) {
      Chain e = Chain::oriented({{1, c}, {4, d}}) - Chain::oriented({{1, c}, {5, 6}});
      auto coords = h0.coordinates(to_field(s.n0.coordinates(e, true)));
      for (std::size_t i = 0; i < 4; ++i) basis[i][col] = coords[i];
      ++col;
    }
  auto inv = matrix_inverse(q, basis);
  if (!inv) throw std::logic_error("e_cd is not a basis");

  const SparseIntMatrix& h = s.h.at(2);
  DenseIntMatrix out;
  for (auto [s1, t1, u1] : {std::tuple{4, 5, 6}, std::tuple{4, 6, 5}, std::tuple{5, 4, 6}, std::tuple{5, 6, 4}}) {
    Chain x = Chain::oriented({{1, s1}, {2, t1}, {3, u1}});
    SparseVector img = multiply(h, s.n2.coordinates(x, true));
    auto c = h0.coordinates(to_field(img));
    std::vector<Integer> row;
    for (std::size_t i = 0; i < 4; ++i) {
      Rational v = 0;
      for (std::size_t j = 0; j < 4; ++j) v += (*inv)[i][j] * c[j];
      v.canonicalize();
      if (v.get_den() != 1) throw std::logic_error("non-integral coordinate");
      row.push_back(v.get_num());
    }
    out.push_back(std::move(row));
  }
  return out;
}

DenseIntMatrix hexagon_projection_matrix() {
  auto other = [](int a, int b) {
    std::vector<int> rest;
    for (int v = 1; v <= 5; ++v)
      if (v != a && v != b) rest.push_back(v);
    return rest;
  };
  const std::vector<std::pair<int, int>> blocks{{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}};
  const std::vector<std::vector<Edge>> targets{{{5, 1}, {2, 3}}, {{1, 2}, {3, 4}}, {{2, 3}, {4, 5}},
                                               {{3, 4}, {5, 1}}, {{4, 5}, {1, 2}}, {{1, 3}, {2, 4}}};
  DenseIntMatrix m;
  for (auto [a, b] : blocks) {
    Chain z = bipartite_fundamental_cycle(other(a, b), {std::min(a, b), std::max(a, b)});
    std::vector<Integer> row;
    for (const auto& t : targets) {
      Chain basis = Chain::oriented({make_edge(t[0].u, t[0].v), make_edge(t[1].u, t[1].v)});
      const auto& [cell, sign] = *basis.terms().begin();
      row.push_back(z.coefficient(cell) * sign);
    }
    m.push_back(std::move(row));
  }
  return m;
}

SuiteReport run_suite(const std::string& name, const SuiteOptions& opt) {
  SuiteReport rep;
  rep.suite = name;
  if (name == "sequences")
    sequences_suite(rep, opt);
  else if (name == "bouc")
    bouc_suite(rep);
  else if (name == "torsion")
    torsion_suite(rep);
  else if (name == "collapse")
    collapse_suite(rep, opt);
  else if (name == "inequalities")
    inequalities_suite(rep);
  else if (name == "generation")
    generation_suite(rep, opt);
  else if (name == "all") {
    for (const auto& s : {"sequences", "bouc", "torsion", "collapse", "inequalities"}) {
      auto sub = run_suite(s, opt);
      for (auto& c : sub.checks) {
        c.name = std::string(s) + ": " + c.name;
        rep.checks.push_back(std::move(c));
      }
    }
  } else {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  return rep;
}

}  // namespace matchcx
