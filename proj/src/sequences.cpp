#include "matchcx/sequences.hpp"

#include "matchcx/chain.hpp"
#include "matchcx/field.hpp"
#include "matchcx/field_homology.hpp"
#include "matchcx/snf.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <numeric>
#include <stdexcept>

namespace matchcx {

std::string to_string(SequenceKind k) {
  switch (k) {
    case SequenceKind::Pair: return "pair";
    case SequenceKind::Seq012: return "0-1-2";
    case SequenceKind::Seq034: return "0-3-4";
    case SequenceKind::Seq0356: return "0-3-5-6";
    case SequenceKind::Seq0e2: return "0-e-2";
    case SequenceKind::Seq0235: return "0-2-3-5";
  }
  return "?";
}

SequenceKind parse_sequence_kind(const std::string& s) {
  for (auto k : {SequenceKind::Pair, SequenceKind::Seq012, SequenceKind::Seq034, SequenceKind::Seq0356,
                 SequenceKind::Seq0e2, SequenceKind::Seq0235})
    if (s == to_string(k) || s == "seq-" + to_string(k)) return k;
  throw std::invalid_argument("unknown sequence kind '" + s + "'");
}

std::pair<int, int> default_window(int n) {
  int t = n - 3;
  int top = t >= 0 ? t / 2 : -((1 - t) / 2);
  return {-1, top + 1};
}

namespace {

using CellMap = std::function<Chain(int, std::size_t)>;

SparseIntMatrix realize(const BlockComplex& src, int d, const BlockComplex& dst, int dst_d, const CellMap& fn,
                        bool strict) {
  SparseIntMatrix m(dst.rank(dst_d), 0);
  for (std::size_t i = 0; i < src.rank(d); ++i) {
    Chain c = fn(d, i);
    if (!c.is_zero() && c.dimension() != dst_d) throw std::logic_error("map changes degree unexpectedly");
    m.append_column(dst.coordinates(c, strict));
  }
  return m;
}

Chain edge(int a, int b) { return Chain::oriented({make_edge(a, b)}); }
Chain edges(int a, int b, int c, int d) { return Chain::oriented({make_edge(a, b), make_edge(c, d)}); }

// Block-wise formula: cell prefix (x) tau goes to mu[block] ^ tau.
CellMap by_block(const BlockComplex& src, std::vector<Chain> mu) {
  return [&src, mu = std::move(mu)](int d, std::size_t i) {
    const auto& c = src.cell(d, i);
    return wedge(mu[c.block], Chain::simplex(c.inner));
  };
}

MatchingComplex complete_on(int n, std::vector<int> vs) { return matching_complex(complete_graph_on(n, vs)); }

std::vector<int> range_without(int lo, int hi, std::initializer_list<int> drop) {
  std::vector<int> v;
  for (int i = lo; i <= hi; ++i)
    if (std::find(drop.begin(), drop.end(), i) == drop.end()) v.push_back(i);
  return v;
}

std::pair<int, int> window_or(int n, std::optional<std::pair<int, int>> w) { return w ? *w : default_window(n); }

// Realises f, g, delta, alpha (and h from per-block formulas when given).
void finish(SequenceInstance& s, const std::vector<Chain>& alpha_mu, const std::vector<Chain>* h_mu) {
  s.x = BlockComplex::whole(s.ambient);
  s.a = BlockComplex::whole(s.sub);
  s.cx = chain_complex(s.ambient);
  s.ca = chain_complex(s.sub);
  s.c0 = s.n0.chain_complex();
  s.c2 = s.n2.chain_complex();
  const int top = std::max({s.x.top(), s.n0.top(), s.n2.top()}) + 1;
  CellMap alpha = by_block(s.n0, alpha_mu);
  CellMap lift = [&s](int d, std::size_t i) { return s.x.embed(d, i); };
  CellMap dlift = [&s](int d, std::size_t i) { return boundary(s.n2.embed(d, i)); };
  for (int d = -1; d <= top; ++d) {
    s.alpha[d] = realize(s.n0, d, s.a, d, alpha, true);
    s.f[d] = realize(s.n0, d, s.x, d, alpha, true);
    s.g[d] = realize(s.x, d, s.n2, d, lift, false);
    s.delta[d] = realize(s.n2, d, s.a, d - 1, dlift, false);
    if (h_mu) s.h[d] = realize(s.n2, d, s.n0, d - 1, by_block(s.n2, *h_mu), true);
  }
  s.explicit_h = h_mu != nullptr;
}

}  // namespace

SequenceInstance pair_les(const ComplexPair& pair, int lo, int hi) {
  SequenceInstance s;
  s.kind = SequenceKind::Pair;
  s.n = pair.ambient().ground().num_vertices();
  s.lo = lo;
  s.hi = hi;
  s.names[0] = "H(A)";
  s.names[1] = "H(X)";
  s.names[2] = "H(X,A)";
  s.ambient = pair.ambient();
  s.sub = pair.sub();
  s.n0 = BlockComplex::whole(s.sub);
  s.n2 = BlockComplex({relative_block(pair)});
  finish(s, {Chain::unit()}, nullptr);
  s.h = s.delta;
  s.explicit_h = true;
  return s;
}

SequenceInstance seq_012(int n, std::optional<std::pair<int, int>> degrees) {
  if (n < 2) throw std::invalid_argument("0-1-2 sequence needs n >= 2");
  SequenceInstance s;
  s.kind = SequenceKind::Seq012;
  s.n = n;
  std::tie(s.lo, s.hi) = window_or(n, degrees);
  s.names[0] = "H(M[2,n])";
  s.names[1] = "H(M_n)";
  s.names[2] = "+_s <1s> H(M[2,n]-s)";
  s.ambient = matching_complex(complete_graph(n));
  s.sub = filtration_level(n, 1, 0);
  s.n0 = BlockComplex::whole(complete_on(n, range_without(2, n, {})));
  std::vector<Block> bs;
  std::vector<Chain> h_mu;
  for (int t = 2; t <= n; ++t) {
    bs.push_back(make_block(make_matching({make_edge(1, t)}), complete_on(n, range_without(2, n, {t}))));
    h_mu.push_back(Chain::unit());
  }
  s.n2 = BlockComplex(std::move(bs));
  finish(s, {Chain::unit()}, &h_mu);
  return s;
}

SequenceInstance seq_034(int n, std::optional<std::pair<int, int>> degrees) {
  if (n < 4) throw std::invalid_argument("0-3-4 sequence needs n >= 4");
  SequenceInstance s;
  s.kind = SequenceKind::Seq034;
  s.n = n;
  std::tie(s.lo, s.hi) = window_or(n, degrees);
  s.names[0] = "R";
  s.names[1] = "H(M_n)";
  s.names[2] = "Q";
  s.ambient = matching_complex(complete_graph(n));
  s.sub = filtration_level(n, 2, 1);
  std::vector<Block> r;
  std::vector<Chain> phi;
  for (int a = 1; a <= 2; ++a)
    for (int u = 3; u <= n; ++u) {
      r.push_back(make_block(make_matching({make_edge(a, u)}), complete_on(n, range_without(3, n, {u}))));
      phi.push_back(edge(a, u) - edge(1, 2));
    }
  std::vector<Block> q;
  std::vector<Chain> psi;
  for (int p = 3; p <= n; ++p)
    for (int t = 3; t <= n; ++t) {
      if (p == t) continue;
      q.push_back(make_block(make_matching({make_edge(1, p), make_edge(2, t)}), complete_on(n, range_without(3, n, {p, t}))));
      psi.push_back(edge(2, t) - edge(1, p));
    }
  s.n0 = BlockComplex(std::move(r));
  s.n2 = BlockComplex(std::move(q));
  finish(s, phi, &psi);
  return s;
}

SequenceInstance seq_0356(int n, std::optional<std::pair<int, int>> degrees) {
  if (n < 6) throw std::invalid_argument("0-3-5-6 sequence needs n >= 6");
  SequenceInstance s;
  s.kind = SequenceKind::Seq0356;
  s.n = n;
  std::tie(s.lo, s.hi) = window_or(n, degrees);
  s.names[0] = "P + Q";
  s.names[1] = "H(M_n)";
  s.names[2] = "R";
  s.ambient = matching_complex(complete_graph(n));
  s.sub = filtration_level(n, 3, 2);

  std::vector<Block> pq;
  std::vector<Chain> phi;
  for (int c = 2; c <= 3; ++c) {
    pq.push_back(make_block(make_matching({make_edge(1, c)}), complete_on(n, range_without(4, n, {}))));
    phi.push_back(edge(1, c) - edge(2, 3));
  }
  const int rows[3][3] = {{1, 2, 3}, {1, 3, 2}, {2, 3, 1}};
  for (const auto& [a, b, c] : rows)
    for (int p = 4; p <= n; ++p)
      for (int t = 4; t <= n; ++t) {
        if (p == t) continue;
        pq.push_back(make_block(make_matching({make_edge(a, p), make_edge(b, t)}), complete_on(n, range_without(4, n, {p, t}))));
        // as ^ bt + ac ^ (st - bt) + bc ^ (as - st)
        phi.push_back(edges(a, p, b, t) + edges(a, c, p, t) - edges(a, c, b, t) + edges(b, c, a, p) - edges(b, c, p, t));
      }

  std::vector<Block> r;
  std::vector<Chain> psi;
  for (int p = 4; p <= n; ++p)
    for (int t = 4; t <= n; ++t)
      for (int u = 4; u <= n; ++u) {
        if (p == t || p == u || t == u) continue;
        r.push_back(make_block(make_matching({make_edge(1, p), make_edge(2, t), make_edge(3, u)}),
                               complete_on(n, range_without(4, n, {p, t, u}))));
        psi.push_back(edges(1, p, 2, t) + edges(2, t, 3, u) - edges(1, p, 3, u) + edges(1, 2, p, u) - edges(1, 2, t, u) +
                      edges(1, 3, t, u) - edges(1, 3, p, t));
      }
  s.n0 = BlockComplex(std::move(pq));
  s.n2 = BlockComplex(std::move(r));
  finish(s, phi, &psi);
  return s;
}

SequenceInstance seq_0e2(int n, std::optional<std::pair<int, int>> degrees) {
  if (n < 2) throw std::invalid_argument("0-e-2 sequence needs n >= 2");
  SequenceInstance s;
  s.kind = SequenceKind::Seq0e2;
  s.n = n;
  std::tie(s.lo, s.hi) = window_or(n, degrees);
  s.names[0] = "H(M_n-12)";
  s.names[1] = "H(M_n)";
  s.names[2] = "<12> H(M[3,n])";
  s.ambient = matching_complex(complete_graph(n));
  s.sub = delete_zero_cell(s.ambient, make_edge(1, 2));
  s.n0 = BlockComplex::whole(s.sub);
  s.n2 = BlockComplex({make_block(make_matching({make_edge(1, 2)}), complete_on(n, range_without(3, n, {})))});
  std::vector<Chain> h_mu{Chain::unit()};
  finish(s, {Chain::unit()}, &h_mu);
  return s;
}

SequenceInstance seq_0235(int n, std::optional<std::pair<int, int>> degrees) {
  if (n < 5) throw std::invalid_argument("0-2-3-5 sequence needs n >= 5");
  SequenceInstance s;
  s.kind = SequenceKind::Seq0235;
  s.n = n;
  std::tie(s.lo, s.hi) = window_or(n, degrees);
  s.names[0] = "<13> H(M[4,n]) + P";
  s.names[1] = "H(M_n-12)";
  s.names[2] = "Q";
  const Edge e12 = make_edge(1, 2);
  s.ambient = delete_zero_cell(matching_complex(complete_graph(n)), e12);
  std::vector<Matching> keep;
  for (int d = -1; d <= s.ambient.dimension(); ++d)
    for (const auto& m : s.ambient.simplices(d))
      if (std::none_of(m.edges.begin(), m.edges.end(), [](const Edge& e) { return e.u == 3 && e.v >= 4; }))
        keep.push_back(m);
  s.sub = MatchingComplex::from_simplices(s.ambient.ground(), std::move(keep));

  std::vector<Block> p;
  std::vector<Chain> phi;
  p.push_back(make_block(make_matching({make_edge(1, 3)}), complete_on(n, range_without(4, n, {}))));
  phi.push_back(edge(1, 3) - edge(2, 3));
  for (int a = 4; a <= n; ++a)
    for (int t = 4; t <= n; ++t) {
      if (a == t) continue;
      p.push_back(make_block(make_matching({make_edge(1, a), make_edge(2, t)}), complete_on(n, range_without(4, n, {a, t}))));
      // 1s ^ 2t + 2t ^ 13 + 13 ^ st + st ^ 23 + 23 ^ 1s
      phi.push_back(edges(1, a, 2, t) + edges(2, t, 1, 3) + edges(1, 3, a, t) + edges(a, t, 2, 3) + edges(2, 3, 1, a));
    }
  std::vector<Block> q;
  for (int u = 4; u <= n; ++u)
    q.push_back(make_block(make_matching({make_edge(3, u)}),
                           delete_zero_cell(complete_on(n, range_without(1, n, {3, u})), e12)));
  s.n0 = BlockComplex(std::move(p));
  s.n2 = BlockComplex(std::move(q));
  finish(s, phi, nullptr);
  return s;
}

SequenceInstance make_sequence(SequenceKind kind, int n, std::optional<std::pair<int, int>> degrees) {
  switch (kind) {
    case SequenceKind::Seq012: return seq_012(n, degrees);
    case SequenceKind::Seq034: return seq_034(n, degrees);
    case SequenceKind::Seq0356: return seq_0356(n, degrees);
    case SequenceKind::Seq0e2: return seq_0e2(n, degrees);
    case SequenceKind::Seq0235: return seq_0235(n, degrees);
    case SequenceKind::Pair: {
      auto x = matching_complex(complete_graph(n));
      auto w = window_or(n, degrees);
      return pair_les(ComplexPair(x, delete_zero_cell(x, make_edge(1, 2))), w.first, w.second);
    }
  }
  throw std::invalid_argument("unknown sequence kind");
}

void corrupt_map(SequenceInstance& s, const std::string& map, int degree) {
  std::map<int, SparseIntMatrix>* target = nullptr;
  if (map == "f") target = &s.f;
  else if (map == "g") target = &s.g;
  else if (map == "h") target = &s.h;
  else if (map == "alpha") target = &s.alpha;
  else if (map == "delta") target = &s.delta;
  if (!target || !target->count(degree)) throw std::invalid_argument("no map " + map + " in degree " + std::to_string(degree));
  SparseIntMatrix& m = (*target)[degree];
  std::vector<Triplet> ts;
  bool flipped = false;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j)) {
      ts.push_back({e.row, j, flipped ? e.value : Integer(-e.value)});
      flipped = true;
    }
  if (!flipped) {
    if (!m.rows() || !m.cols()) throw std::invalid_argument("map " + map + " is empty in degree " + std::to_string(degree));
    ts.push_back({0, 0, 1});
  }
  m = SparseIntMatrix::from_triplets(m.rows(), m.cols(), std::move(ts));
}

bool NodeCheck::exact() const {
  if (!composite_zero) return false;
  for (const auto& [name, c] : fields)
    if (!c.exact || !c.composite_zero) return false;
  return exact_integral.value_or(true);
}

bool ExactnessReport::passed() const {
  auto ok = [](const MapCheck& c) { return c.ok; };
  return std::all_of(chain_maps.begin(), chain_maps.end(), ok) &&
         std::all_of(homology_checks.begin(), homology_checks.end(), ok) &&
         std::all_of(nodes.begin(), nodes.end(), [](const NodeCheck& c) { return c.exact(); });
}

nlohmann::json ExactnessReport::to_json() const {
  using nlohmann::json;
  json j;
  j["kind"] = to_string(kind);
  j["n"] = n;
  j["ring"] = ring.name();
  j["degrees"] = {lo, hi};
  j["passed"] = passed();
  auto checks = [](const std::vector<MapCheck>& cs) {
    json a = json::array();
    for (const auto& c : cs) a.push_back({{"map", c.map}, {"degree", c.degree}, {"ok", c.ok}});
    return a;
  };
  j["chain_maps"] = checks(chain_maps);
  j["homology_checks"] = checks(homology_checks);
  json ns = json::array();
  for (const auto& c : nodes) {
    json o{{"node", node_names.at(static_cast<std::size_t>(c.node))},
           {"position", c.node},
           {"degree", c.degree},
           {"group", c.group.to_string()},
           {"composite_zero", c.composite_zero},
           {"exact", c.exact()}};
    json fs = json::object();
    for (const auto& [name, f] : c.fields)
      fs[name] = {{"dimension", f.dimension},
                  {"rank_in", f.rank_in},
                  {"rank_out", f.rank_out},
                  {"composite_zero", f.composite_zero},
                  {"exact", f.exact}};
    o["fields"] = fs;
    if (c.exact_integral) o["exact_integral"] = *c.exact_integral;
    ns.push_back(o);
  }
  j["nodes"] = ns;
  return j;
}

namespace {

const SparseIntMatrix& at_or_zero(const std::map<int, SparseIntMatrix>& m, int d, std::size_t rows, std::size_t cols,
                                  SparseIntMatrix& scratch) {
  auto it = m.find(d);
  if (it != m.end()) return it->second;
  scratch = SparseIntMatrix(rows, cols);
  return scratch;
}

// d_dst o m == sign * m o d_src, m of degree shift (0 or -1).
bool commutes(const ChainComplex& src, const ChainComplex& dst, const std::map<int, SparseIntMatrix>& m, int d,
              int shift, int sign) {
  SparseIntMatrix z1, z2;
  const auto& md = at_or_zero(m, d, dst.rank(d + shift), src.rank(d), z1);
  const auto& mdd = at_or_zero(m, d - 1, dst.rank(d - 1 + shift), src.rank(d - 1), z2);
  SparseIntMatrix lhs = dst.boundary(d + shift) * md;
  SparseIntMatrix rhs = mdd * src.boundary(d);
  return sign > 0 ? (lhs - rhs).is_zero() : (lhs + rhs).is_zero();
}

SparseIntMatrix columns(std::size_t rows, const std::vector<SparseVector>& vs) {
  SparseIntMatrix m(rows, 0);
  for (const auto& v : vs) m.append_column(v);
  return m;
}

bool all_in_lattice(const SparseIntMatrix& gens, const std::vector<SparseVector>& vs) {
  if (vs.empty()) return true;
  for (const auto& o : cokernel_orders(gens, vs))
    if (!o || *o != 1) return false;
  return true;
}

// Images under m of an integral cycle basis of C_d all lie in im(target boundary).
bool integral_composite_zero(const SparseIntMatrix& m, const SparseIntMatrix& src_boundary,
                             const SparseIntMatrix& target_boundary) {
  std::vector<SparseVector> images;
  for (const auto& z : integer_kernel_basis(src_boundary)) {
    auto y = multiply(m, z);
    if (!y.empty()) images.push_back(std::move(y));
  }
  return all_in_lattice(target_boundary, images);
}

// Exactness of P -u-> B -v-> C at B on homology, as lattices:
// {z in Z(B) : v z in B(C)} == u Z(P) + B(B).
bool integral_exact_at(const SparseIntMatrix& u, const SparseIntMatrix& p_out, const SparseIntMatrix& b_in,
                       const SparseIntMatrix& b_out, const SparseIntMatrix& v, const SparseIntMatrix& c_in) {
  auto zb = integer_kernel_basis(b_out);
  SparseIntMatrix zbm = columns(b_out.cols(), zb);
  SparseIntMatrix w = (v * zbm).hconcat(c_in);
  std::vector<SparseVector> kernel_part;
  for (const auto& k : integer_kernel_basis(w)) {
    SparseVector x;
    for (const auto& e : k)
      if (e.row < zb.size()) x.push_back(e);
    auto y = multiply(zbm, x);
    if (!y.empty()) kernel_part.push_back(std::move(y));
  }
  std::vector<SparseVector> gens;
  for (const auto& z : integer_kernel_basis(p_out)) {
    auto y = multiply(u, z);
    if (!y.empty()) gens.push_back(std::move(y));
  }
  SparseIntMatrix lattice = columns(b_out.cols(), gens).hconcat(b_in);
  if (!all_in_lattice(lattice, kernel_part)) return false;
  // The reverse inclusion is the composite-zero condition.
  std::vector<SparseVector> back;
  for (std::size_t j = 0; j < lattice.cols(); ++j) {
    SparseVector col(lattice.column(j).begin(), lattice.column(j).end());
    auto y = multiply(v, col);
    if (!y.empty()) back.push_back(std::move(y));
  }
  return all_in_lattice(c_in, back);
}

// Homology-level data of one field evaluation.
template <class F>
struct FieldEval {
  std::map<int, FieldMatrix<F>> fm, gm, hm;
  std::vector<MapCheck> checks;
  std::vector<FieldNodeCheck> nodes;  // in report order
};

template <class F>
FieldEval<F> evaluate_field(const F& field, const SequenceInstance& s) {
  const int lo = s.lo, hi = s.hi;
  std::map<int, FieldHomology<F>> h0, hx, h2, ha;
  for (int d = lo - 1; d <= hi + 1; ++d) {
    h0.emplace(d, FieldHomology<F>(field, s.c0, d));
    hx.emplace(d, FieldHomology<F>(field, s.cx, d));
    h2.emplace(d, FieldHomology<F>(field, s.c2, d));
    ha.emplace(d, FieldHomology<F>(field, s.ca, d));
  }
  FieldEval<F> ev;
  SparseIntMatrix scratch;
  auto map_at = [&](const std::map<int, SparseIntMatrix>& m, int d, std::size_t rows, std::size_t cols) {
    return at_or_zero(m, d, rows, cols, scratch);
  };
  // A map that sends some cycle to a non-cycle fails and acts as zero.
  auto induced = [&](const char* name, int d, const FieldHomology<F>& src, const FieldHomology<F>& dst,
                     const SparseIntMatrix& m) {
    try {
      return induced_map(src, dst, m);
    } catch (const std::invalid_argument&) {
      ev.checks.push_back({std::string(name) + "_preserves_cycles", d, false});
      return FieldMatrix<F>(dst.dimension(), std::vector<typename F::Elem>(src.dimension(), field.zero()));
    }
  };
  std::map<int, std::optional<FieldMatrix<F>>> alpha_inv;
  for (int d = lo - 1; d <= hi; ++d) {
    auto al = induced("alpha", d, h0.at(d), ha.at(d), map_at(s.alpha, d, s.ca.rank(d), s.c0.rank(d)));
    bool square = h0.at(d).dimension() == ha.at(d).dimension();
    alpha_inv[d] = square ? matrix_inverse(field, al) : std::nullopt;
    ev.checks.push_back({"alpha_iso", d, alpha_inv[d].has_value()});
  }
  for (int d = lo; d <= hi; ++d) {
    ev.fm[d] = induced("f", d, h0.at(d), hx.at(d), map_at(s.f, d, s.cx.rank(d), s.c0.rank(d)));
    ev.gm[d] = induced("g", d, hx.at(d), h2.at(d), map_at(s.g, d, s.c2.rank(d), s.cx.rank(d)));
  }
  for (int d = lo; d <= hi + 1; ++d) {
    const auto& src = h2.at(d);
    const auto& dst = h0.at(d - 1);
    auto dm = induced("delta", d, src, ha.at(d - 1), map_at(s.delta, d, s.ca.rank(d - 1), s.c2.rank(d)));
    if (s.explicit_h) {
      ev.hm[d] = induced("h", d, src, dst, map_at(s.h, d, s.c0.rank(d - 1), s.c2.rank(d)));
      auto al = induced("alpha", d - 1, dst, ha.at(d - 1), map_at(s.alpha, d - 1, s.ca.rank(d - 1), s.c0.rank(d - 1)));
      auto lhs = matmul(field, al, ev.hm[d], dst.dimension(), src.dimension());
      bool same = true;
      for (std::size_t i = 0; i < lhs.size(); ++i)
        for (std::size_t j = 0; j < src.dimension(); ++j)
          if (!field.is_zero(field.sub(lhs[i][j], dm[i][j]))) same = false;
      ev.checks.push_back({"alpha_h_equals_delta", d, same});
    } else if (alpha_inv[d - 1]) {
      ev.hm[d] = matmul(field, *alpha_inv[d - 1], dm, dst.dimension(), src.dimension());
    } else {
      ev.hm[d] = FieldMatrix<F>(dst.dimension(), std::vector<typename F::Elem>(src.dimension(), field.zero()));
    }
  }

  auto node = [&](std::size_t dim, const FieldMatrix<F>& in, std::size_t in_cols, const FieldMatrix<F>& out) {
    FieldNodeCheck c;
    c.dimension = dim;
    c.rank_in = matrix_rank(field, in, in_cols);
    c.rank_out = matrix_rank(field, out, dim);
    c.composite_zero = is_zero_matrix(field, matmul(field, out, in, dim, in_cols));
    c.exact = c.composite_zero && dim - c.rank_out == c.rank_in;
    return c;
  };
  for (int d = hi; d >= lo; --d) {
    ev.nodes.push_back(node(h0.at(d).dimension(), ev.hm.at(d + 1), h2.at(d + 1).dimension(), ev.fm.at(d)));
    ev.nodes.push_back(node(hx.at(d).dimension(), ev.fm.at(d), h0.at(d).dimension(), ev.gm.at(d)));
    ev.nodes.push_back(node(h2.at(d).dimension(), ev.gm.at(d), hx.at(d).dimension(), ev.hm.at(d)));
  }
  return ev;
}

}  // namespace

ExactnessReport verify_exactness(const SequenceInstance& s, const Ring& ring, const ExactnessOptions& opt) {
  if (s.f.empty() || s.g.empty() || s.delta.empty() || (s.explicit_h && s.h.empty()))
    throw std::invalid_argument("sequence maps are not realised");
  ExactnessReport rep;
  rep.kind = s.kind;
  rep.n = s.n;
  rep.ring = ring;
  rep.lo = s.lo;
  rep.hi = s.hi;
  rep.node_names = {s.names[0], s.names[1], s.names[2]};

  const int top = std::max({s.cx.top(), s.c0.top(), s.c2.top()}) + 1;
  for (int d = -1; d <= top; ++d) {
    rep.chain_maps.push_back({"f", d, commutes(s.c0, s.cx, s.f, d, 0, 1)});
    rep.chain_maps.push_back({"alpha", d, commutes(s.c0, s.ca, s.alpha, d, 0, 1)});
    rep.chain_maps.push_back({"g", d, commutes(s.cx, s.c2, s.g, d, 0, 1)});
    rep.chain_maps.push_back({"delta", d, commutes(s.c2, s.ca, s.delta, d, -1, -1)});
    if (s.explicit_h) rep.chain_maps.push_back({"h", d, commutes(s.c2, s.c0, s.h, d, -1, -1)});
  }

  std::vector<Ring> fields;
  if (ring.is_field()) {
    fields.push_back(ring);
  } else {
    fields.push_back(Ring::rationals());
    for (auto p : opt.primes) fields.push_back(Ring::mod(p));
  }
  struct Result {
    std::string name;
    std::vector<MapCheck> checks;
    std::vector<FieldNodeCheck> nodes;
  };
  std::vector<std::future<Result>> jobs;
  for (const auto& r : fields)
    jobs.push_back(std::async(std::launch::async, [&s, r] {
      Result out{r.name(), {}, {}};
      if (r.kind == RingKind::Rationals) {
        auto ev = evaluate_field(RationalField{}, s);
        out.checks = std::move(ev.checks);
        out.nodes = std::move(ev.nodes);
      } else {
        auto ev = evaluate_field(ModPField(r.p), s);
        out.checks = std::move(ev.checks);
        out.nodes = std::move(ev.nodes);
      }
      return out;
    }));
  std::vector<Result> results;
  for (auto& j : jobs) results.push_back(j.get());

  std::size_t k = 0;
  for (int d = s.hi; d >= s.lo; --d)
    for (int node = 0; node < 3; ++node, ++k) {
      NodeCheck c;
      c.node = node;
      c.degree = d;
      const ChainComplex& cc = node == 0 ? s.c0 : node == 1 ? s.cx : s.c2;
      c.group = homology(cc, d, ring);
      for (const auto& r : results) c.fields[r.name] = r.nodes[k];
      if (ring.is_field()) {
        c.composite_zero = c.fields.begin()->second.composite_zero;
      } else {
        SparseIntMatrix z1, z2;
        if (node == 0) {
          // f o h, or incl o delta for the zig-zag; both land in X_d via d o lift.
          const SparseIntMatrix& hh = s.explicit_h ? at_or_zero(s.h, d + 1, s.c0.rank(d), s.c2.rank(d + 1), z1)
                                                   : at_or_zero(s.delta, d + 1, s.ca.rank(d), s.c2.rank(d + 1), z1);
          const SparseIntMatrix& ff = s.explicit_h
                                          ? at_or_zero(s.f, d, s.cx.rank(d), s.c0.rank(d), z2)
                                          : (z2 = realize(s.a, d, s.x, d, [&s](int dd, std::size_t i) { return s.a.embed(dd, i); }, true));
          c.composite_zero = integral_composite_zero(ff * hh, s.c2.boundary(d + 1), s.cx.boundary(d + 1));
        } else if (node == 1) {
          SparseIntMatrix gf = at_or_zero(s.g, d, s.c2.rank(d), s.cx.rank(d), z1) * at_or_zero(s.f, d, s.cx.rank(d), s.c0.rank(d), z2);
          c.composite_zero = integral_composite_zero(gf, s.c0.boundary(d), s.c2.boundary(d + 1));
        } else {
          const SparseIntMatrix& gg = at_or_zero(s.g, d, s.c2.rank(d), s.cx.rank(d), z1);
          if (s.explicit_h)
            c.composite_zero = integral_composite_zero(at_or_zero(s.h, d, s.c0.rank(d - 1), s.c2.rank(d), z2) * gg,
                                                       s.cx.boundary(d), s.c0.boundary(d));
          else
            c.composite_zero = integral_composite_zero(at_or_zero(s.delta, d, s.ca.rank(d - 1), s.c2.rank(d), z2) * gg,
                                                       s.cx.boundary(d), s.ca.boundary(d));
        }
        if (opt.exact_integral) {
          SparseIntMatrix incl = realize(s.a, d, s.x, d, [&s](int dd, std::size_t i) { return s.a.embed(dd, i); }, true);
          SparseIntMatrix y1, y2;
          if (node == 0) {
            if (s.explicit_h)
              c.exact_integral = integral_exact_at(at_or_zero(s.h, d + 1, s.c0.rank(d), s.c2.rank(d + 1), y1), s.c2.boundary(d + 1),
                                                   s.c0.boundary(d + 1), s.c0.boundary(d),
                                                   at_or_zero(s.f, d, s.cx.rank(d), s.c0.rank(d), y2), s.cx.boundary(d + 1));
            else
              c.exact_integral = integral_exact_at(at_or_zero(s.delta, d + 1, s.ca.rank(d), s.c2.rank(d + 1), y1),
                                                   s.c2.boundary(d + 1), s.ca.boundary(d + 1), s.ca.boundary(d), incl,
                                                   s.cx.boundary(d + 1));
          } else if (node == 1) {
            c.exact_integral = integral_exact_at(at_or_zero(s.f, d, s.cx.rank(d), s.c0.rank(d), y1), s.c0.boundary(d),
                                                 s.cx.boundary(d + 1), s.cx.boundary(d),
                                                 at_or_zero(s.g, d, s.c2.rank(d), s.cx.rank(d), y2), s.c2.boundary(d + 1));
          } else {
            const SparseIntMatrix& gg = at_or_zero(s.g, d, s.c2.rank(d), s.cx.rank(d), y1);
            if (s.explicit_h)
              c.exact_integral = integral_exact_at(gg, s.cx.boundary(d), s.c2.boundary(d + 1), s.c2.boundary(d),
                                                   at_or_zero(s.h, d, s.c0.rank(d - 1), s.c2.rank(d), y2), s.c0.boundary(d));
            else
              c.exact_integral = integral_exact_at(gg, s.cx.boundary(d), s.c2.boundary(d + 1), s.c2.boundary(d),
                                                   at_or_zero(s.delta, d, s.ca.rank(d - 1), s.c2.rank(d), y2), s.ca.boundary(d));
          }
        }
      }
      rep.nodes.push_back(std::move(c));
    }

  // alpha_* and the consistency of h, merged over the fields.
  std::map<std::pair<std::string, int>, bool> merged;
  for (const auto& r : results)
    for (const auto& c : r.checks) {
      auto key = std::pair{c.map, c.degree};
      auto it = merged.find(key);
      merged[key] = (it == merged.end() ? true : it->second) && c.ok;
    }
  for (const auto& [key, ok] : merged) rep.homology_checks.push_back({key.first, key.second, ok});
  if (!ring.is_field() && opt.exact_integral) {
    // alpha_* is an isomorphism over Z: injective and surjective on lattices.
    for (int d = s.lo - 1; d <= s.hi; ++d) {
      SparseIntMatrix y;
      const SparseIntMatrix& al = at_or_zero(s.alpha, d, s.ca.rank(d), s.c0.rank(d), y);
      bool inj = integral_exact_at(SparseIntMatrix(s.c0.rank(d), 0), SparseIntMatrix(0, 0), s.c0.boundary(d + 1),
                                   s.c0.boundary(d), al, s.ca.boundary(d + 1));
      std::vector<SparseVector> za = integer_kernel_basis(s.ca.boundary(d));
      std::vector<SparseVector> imgs;
      for (const auto& z : integer_kernel_basis(s.c0.boundary(d))) imgs.push_back(multiply(al, z));
      bool surj = all_in_lattice(columns(s.ca.rank(d), imgs).hconcat(s.ca.boundary(d + 1)), za);
      rep.homology_checks.push_back({"alpha_iso_integral", d, inj && surj});
    }
  }
  return rep;
}

std::vector<InequalityRow> inequality_report(int max_n) {
  const Ring z3 = Ring::mod(3);
  auto beta = [&](int n, int d) -> std::size_t {
    if (n <= 1) return d == -1 ? 1 : 0;  // M_0 = M_1 = {empty}
    return homology(matching_complex(complete_graph(n)), d, z3).free_rank;
  };
  auto alpha = [&](int n, int d) -> std::size_t {
    if (n < 2) throw std::invalid_argument("M_n \\ e needs n >= 2");
    auto x = matching_complex(complete_graph(n));
    return homology(delete_zero_cell(x, make_edge(1, 2)), d, z3).free_rank;
  };
  std::vector<InequalityRow> rows;
  for (int n = 2; n <= max_n; ++n)
    for (int d = -1; d <= n / 2; ++d) {
      InequalityRow r;
      r.n = n;
      r.d = d;
      r.beta = beta(n, d);
      r.alpha = alpha(n, d);
      r.rhs1 = r.alpha + beta(n - 2, d - 1);
      if (n >= 5) {
        std::size_t c = static_cast<std::size_t>((n - 3) * (n - 4) / 2);
        r.rhs2 = beta(n - 3, d - 1) + 2 * c * beta(n - 5, d - 2) + static_cast<std::size_t>(n - 3) * alpha(n - 2, d - 1);
      } else {
        r.rhs2 = r.alpha;  // the second inequality starts at n = 5
      }
      rows.push_back(r);
    }
  return rows;
}

std::vector<FiltrationRow> filtration_consistency(int n, int m, const Ring& ring) {
  std::vector<FiltrationRow> rows;
  const int imax = std::min(m, n - m);
  for (int i = 0; i <= imax; ++i) {
    ComplexPair pair(filtration_level(n, m, i), filtration_level(n, m, i - 1));
    // Every (A, B): A an i-subset of [m], B an ordered i-sequence in [m+1, n].
    std::vector<MatchingComplex> joins;
    std::vector<int> left(m);
    std::iota(left.begin(), left.end(), 1);
    std::vector<int> right(n - m);
    std::iota(right.begin(), right.end(), m + 1);
    std::vector<int> pick(static_cast<std::size_t>(m), 0);
    std::fill(pick.end() - i, pick.end(), 1);
    do {
      std::vector<int> a;
      for (int k = 0; k < m; ++k)
        if (pick[static_cast<std::size_t>(k)]) a.push_back(k + 1);
      std::vector<int> seq;
      std::vector<char> used(static_cast<std::size_t>(n + 1), 0);
      auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(seq.size()) == i) {
          std::vector<int> l, r;
          for (int v : left)
            if (std::find(a.begin(), a.end(), v) == a.end()) l.push_back(v);
          for (int v : right)
            if (!used[static_cast<std::size_t>(v)]) r.push_back(v);
          joins.push_back(join(complete_on(n, l), complete_on(n, r), 0));
          return;
        }
        for (int v : right) {
          if (used[static_cast<std::size_t>(v)]) continue;
          used[static_cast<std::size_t>(v)] = 1;
          seq.push_back(v);
          self(self);
          seq.pop_back();
          used[static_cast<std::size_t>(v)] = 0;
        }
      };
      rec(rec);
    } while (std::next_permutation(pick.begin(), pick.end()));
    for (int d = -1; d <= n / 2; ++d) {
      FiltrationRow row{n, m, i, d, relative_homology(pair, d, ring), {}};
      std::vector<GroupDescriptor> parts;
      for (const auto& j : joins) parts.push_back(homology(j, d - i, ring));
      row.decomposition = direct_sum(parts);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace matchcx
