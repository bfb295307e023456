#include "matchcx/collapse.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace matchcx {

namespace {

// Live cells with their number of live codimension-one cofaces.
class LiveComplex {
 public:
  explicit LiveComplex(const MatchingComplex& k) {
    for (int d = -1; d <= k.dimension(); ++d)
      for (const auto& m : k.simplices(d)) {
        cofaces_.emplace(m, 0);
        by_dim_[d].insert(m);
      }
    for (const auto& [m, c] : cofaces_)
      for (std::size_t j = 0; j < m.edges.size(); ++j) ++cofaces_.at(facet(m, j));
  }

  static Matching facet(const Matching& m, std::size_t j) {
    Matching f = m;
    f.edges.erase(f.edges.begin() + static_cast<long>(j));
    return f;
  }

  bool contains(const Matching& m) const { return cofaces_.count(m) > 0; }
  int cofaces(const Matching& m) const { return cofaces_.at(m); }
  int dimension() const {
    for (auto it = by_dim_.rbegin(); it != by_dim_.rend(); ++it)
      if (!it->second.empty()) return it->first;
    return -2;
  }
  const std::set<Matching>& cells(int d) const {
    static const std::set<Matching> none;
    auto it = by_dim_.find(d);
    return it == by_dim_.end() ? none : it->second;
  }

  // Checks legality; returns false without changing anything otherwise.
  bool collapse(const Matching& face, const Matching& coface) {
    if (!contains(face) || !contains(coface)) return false;
    if (coface.edges.size() != face.edges.size() + 1) return false;
    if (!std::includes(coface.edges.begin(), coface.edges.end(), face.edges.begin(), face.edges.end())) return false;
    if (cofaces(face) != 1) return false;
    remove(coface);
    remove(face);
    return true;
  }

  std::vector<Matching> all() const {
    std::vector<Matching> out;
    for (const auto& [m, c] : cofaces_) out.push_back(m);
    return out;
  }

 private:
  void remove(const Matching& m) {
    for (std::size_t j = 0; j < m.edges.size(); ++j) --cofaces_.at(facet(m, j));
    cofaces_.erase(m);
    by_dim_[m.dimension()].erase(m);
  }

  std::map<Matching, int> cofaces_;
  std::map<int, std::set<Matching>> by_dim_;
};

MatchingComplex freeze(const Graph& g, const LiveComplex& live) {
  auto cells = live.all();
  if (cells.empty()) return MatchingComplex::void_complex(g);
  return MatchingComplex::from_simplices(g, std::move(cells));
}

bool run_greedy(LiveComplex& live, int target, int n, int rotation, std::vector<CollapseStep>& steps) {
  auto rank = [&](int v) { return ((v - 1 - rotation) % n + n) % n; };
  for (;;) {
    const int top = live.dimension();
    if (top <= target) return true;
    bool found = false;
    for (int d = top; d > target && !found; --d) {
      for (const auto& tau : live.cells(d)) {
        std::vector<std::size_t> order(tau.edges.size());
        for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
        std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
          const Edge& a = tau.edges[x];
          const Edge& b = tau.edges[y];
          int ka = std::min(rank(a.u), rank(a.v)), kb = std::min(rank(b.u), rank(b.v));
          if (ka != kb) return ka < kb;
          return std::max(rank(a.u), rank(a.v)) < std::max(rank(b.u), rank(b.v));
        });
        for (std::size_t j : order) {
          Matching sigma = LiveComplex::facet(tau, j);
          if (live.cofaces(sigma) == 1) {
            Matching t = tau;
            live.collapse(sigma, t);
            steps.push_back({std::move(sigma), std::move(t)});
            found = true;
            break;
          }
        }
        if (found) break;
      }
    }
    if (!found) return false;
  }
}

nlohmann::json matching_json(const Matching& m) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& e : m.edges) a.push_back({e.u, e.v});
  return a;
}

Matching matching_from_json(const nlohmann::json& j) {
  std::vector<Edge> es;
  for (const auto& e : j) es.push_back(make_edge(e.at(0).get<int>(), e.at(1).get<int>()));
  return make_matching(std::move(es));
}

}  // namespace

CollapseTrace collapse_to_dimension(const MatchingComplex& k, int target) {
  CollapseTrace t;
  t.target = target;
  const int n = std::max(1, k.ground().num_vertices());
  for (int r = 0; r < n; ++r) {
    LiveComplex live(k);
    std::vector<CollapseStep> steps;
    if (run_greedy(live, target, n, r, steps)) {
      t.success = true;
      t.rotation = r;
      t.steps = std::move(steps);
      t.final_complex = freeze(k.ground(), live);
      return t;
    }
    if (r + 1 == n) {
      t.steps = std::move(steps);
      t.rotation = r;
      t.final_complex = freeze(k.ground(), live);
    }
  }
  return t;
}

bool replay(const MatchingComplex& k, const CollapseTrace& t) {
  LiveComplex live(k);
  for (const auto& s : t.steps)
    if (!live.collapse(s.face, s.coface)) return false;
  MatchingComplex result = freeze(k.ground(), live);
  if (t.success && result.dimension() > t.target) return false;
  if (t.final_complex.ground().num_vertices() == 0 && t.final_complex.is_void()) return true;  // no final complex recorded
  return result == t.final_complex;
}

nlohmann::json CollapseTrace::to_json() const {
  nlohmann::json steps_json = nlohmann::json::array();
  for (const auto& s : steps) steps_json.push_back({matching_json(s.face), matching_json(s.coface)});
  return {{"success", success},
          {"target", target},
          {"rotation", rotation},
          {"final_dimension", final_complex.dimension()},
          {"steps", steps_json}};
}

CollapseTrace collapse_trace_from_json(const nlohmann::json& j) {
  CollapseTrace t;
  t.success = j.at("success").get<bool>();
  t.target = j.at("target").get<int>();
  t.rotation = j.value("rotation", 0);
  for (const auto& s : j.at("steps")) t.steps.push_back({matching_from_json(s.at(0)), matching_from_json(s.at(1))});
  return t;
}

}  // namespace matchcx
