#include "matchcx/collapse.hpp"
#include "matchcx/homology.hpp"
#include "matchcx/suites.hpp"

#include <doctest.h>

using namespace matchcx;

namespace {

MatchingComplex m_n(int n) { return matching_complex(complete_graph(n)); }

bool same_homology(const MatchingComplex& a, const MatchingComplex& b) {
  const int top = std::max(a.dimension(), b.dimension());
  for (int d = -1; d <= top; ++d)
    if (homology(a, d, Ring::integers()) != homology(b, d, Ring::integers())) return false;
  return true;
}

}  // namespace

TEST_CASE("K_4 collapses to the void complex") {
  auto t = collapse_to_dimension(m_n(4), 0);
  REQUIRE(t.success);
  CHECK(t.final_complex.dimension() <= 0);
  CHECK(replay(m_n(4), t));
  auto all = collapse_to_dimension(m_n(2), -1);
  CHECK(all.success);
  CHECK(all.final_complex.is_void());
}

TEST_CASE("complete graphs collapse to dimension k - 1") {
  for (int k = 1; k <= 4; ++k) {
    MatchingComplex m = m_n(2 * k);
    auto t = collapse_to_dimension(m, k - 2 < 0 ? -1 : k - 2);
    INFO("k=" << k);
    CHECK(t.success);
    CHECK(t.final_complex.dimension() <= std::max(k - 2, -1));
    CHECK(replay(m, t));
    CHECK(same_homology(m, t.final_complex));
  }
}

TEST_CASE("nothing to do below the target") {
  auto t = collapse_to_dimension(m_n(5), 3);
  CHECK(t.success);
  CHECK(t.steps.empty());
  CHECK(t.final_complex == m_n(5));
}

TEST_CASE("the collapse fixture") {
  auto graphs = collapse_fixture_graphs(20240607, 50);
  CHECK(graphs.size() == 70);
  for (const auto& g : graphs) {
    MatchingComplex k = matching_complex(g);
    const int target = g.num_vertices() / 2 - 2;
    auto t = collapse_to_dimension(k, target);
    if (!t.success) continue;
    CHECK(replay(k, t));
    CHECK(t.final_complex.dimension() <= target);
    CHECK(same_homology(k, t.final_complex));
  }
}

TEST_CASE("replay rejects tampered traces") {
  MatchingComplex k = m_n(6);
  auto t = collapse_to_dimension(k, 1);
  REQUIRE(t.success);
  REQUIRE(t.steps.size() >= 2);

  auto dropped = t;
  dropped.steps.erase(dropped.steps.begin());
  CHECK_FALSE(replay(k, dropped));

  auto swapped = t;
  std::swap(swapped.steps.front().face, swapped.steps.front().coface);
  CHECK_FALSE(replay(k, swapped));

  // M of {12, 13, 45} is a path 12 - 45 - 13; its vertex 45 is free only
  // after both edges are gone, so reordering the steps breaks the trace.
  MatchingComplex path = matching_complex(Graph(5, {{1, 2}, {1, 3}, {4, 5}}));
  auto p = collapse_to_dimension(path, -1);
  REQUIRE(p.success);
  REQUIRE(p.steps.size() == 3);
  CHECK(replay(path, p));
  bool broke = false;
  for (std::size_t i = 0; i + 1 < p.steps.size() && !broke; ++i) {
    auto s = p;
    std::swap(s.steps[i], s.steps[i + 1]);
    broke = !replay(path, s);
  }
  CHECK(broke);
}

TEST_CASE("trace JSON round trip") {
  MatchingComplex k = matching_complex(complete_bipartite(3, 3));
  auto t = collapse_to_dimension(k, 1);
  auto back = collapse_trace_from_json(t.to_json());
  CHECK(back.success == t.success);
  CHECK(back.target == t.target);
  CHECK(back.steps.size() == t.steps.size());
  CHECK(back.to_json()["steps"] == t.to_json()["steps"]);
  CHECK(replay(k, back));
  CHECK_THROWS(collapse_trace_from_json(nlohmann::json::parse(R"({"steps": 3})")));
}
