#include "matchcx/cache.hpp"
#include "matchcx/reference.hpp"
#include "matchcx/suites.hpp"
#include "matchcx/tables.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

using namespace matchcx;

namespace {

std::filesystem::path fresh_dir(const std::string& tag) {
  std::random_device rd;
  auto p = std::filesystem::temp_directory_path() / ("matchcx-test-" + tag + "-" + std::to_string(rd()));
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST_CASE("cache round trip") {
  auto dir = fresh_dir("cache");
  ResultCache c(dir);
  REQUIRE(c.enabled());
  CacheKey k{0x1234, 2, "Zp:3", "homology"};
  CHECK_FALSE(c.get(k).has_value());
  c.put(k, "{\"x\":1}");
  CHECK(c.get(k) == std::string("{\"x\":1}"));
  c.put(k, "second");
  CHECK(c.get(k) == std::string("second"));
  CHECK(c.get({0x1234, 3, "Zp:3", "homology"}) == std::nullopt);

  // No temporary files are left behind and the name carries no ':'.
  std::size_t files = 0;
  for (const auto& e : std::filesystem::recursive_directory_iterator(dir))
    if (e.is_regular_file()) {
      ++files;
      CHECK(e.path().filename().string().find(".tmp") == std::string::npos);
      CHECK(e.path().filename().string().find(':') == std::string::npos);
    }
  CHECK(files == 1);

  // A record from another format version is ignored.
  {
    std::ofstream out(dir / "v1" / k.file_name(), std::ios::trunc);
    out << "matchcx-cache 99\nstale";
  }
  CHECK_FALSE(c.get(k).has_value());

  CHECK_FALSE(ResultCache().enabled());
  ResultCache().put(k, "ignored");
  CHECK_FALSE(ResultCache().get(k).has_value());
  std::filesystem::remove_all(dir);
}

TEST_CASE("homology records") {
  HomologyRecord r{"M_9", 3, "Z", make_group(42, std::vector<Integer>(8, Integer(3))), 12.5};
  auto j = r.to_json();
  CHECK(j["free_rank"] == 42);
  CHECK(j["torsion"].size() == 8);
  auto back = HomologyRecord::from_json(j);
  CHECK(back.complex_id == "M_9");
  CHECK(back.degree == 3);
  CHECK(back.ring == "Z");
  CHECK(back.group == r.group);
  CHECK(back.wall_ms == doctest::Approx(12.5));

  HomologyRecord huge{"x", 0, "Z", make_group(0, {Integer("1000000000000000000000007")}), 0};
  CHECK(huge.to_json()["torsion"][0].is_string());
  CHECK(HomologyRecord::from_json(huge.to_json()).group == huge.group);
}

TEST_CASE("cached homology is byte identical on a hit") {
  auto dir = fresh_dir("hom");
  ResultCache c(dir);
  auto k = table_complex(TableKind::Matching, 7);
  auto first = cached_homology(k, "M_7", 1, Ring::integers(), c);
  CHECK(first.group == make_group(0, {3}));
  auto second = cached_homology(k, "M_7", 1, Ring::integers(), c);
  CHECK(first.to_json().dump() == second.to_json().dump());
  // The key is the content, not the name.
  auto renamed = cached_homology(k, "other", 1, Ring::integers(), c);
  CHECK(renamed.complex_id == "other");
  CHECK(renamed.wall_ms == first.wall_ms);
  std::filesystem::remove_all(dir);
}

TEST_CASE("table kinds and ids") {
  CHECK(parse_table_kind("M") == TableKind::Matching);
  CHECK(parse_table_kind("M-e") == TableKind::DeletedEdge);
  CHECK_THROWS_AS(parse_table_kind("N"), std::invalid_argument);
  CHECK(complex_id(TableKind::Matching, 7) == "M_7");
  CHECK(complex_id(TableKind::DeletedEdge, 7) == "M_7-e");
  CHECK(table_complex(TableKind::DeletedEdge, 5) == delete_zero_cell(table_complex(TableKind::Matching, 5), make_edge(1, 2)));
}

TEST_CASE("tables agree with published values") {
  for (auto kind : {TableKind::Matching, TableKind::DeletedEdge}) {
    auto t = compute_table(kind, 3, 8, Ring::integers(), Budget{});
    CHECK(t.complete());
    for (const auto& row : t.rows) {
      auto ref = kind == TableKind::Matching ? published_matching_homology(row.n) : published_deleted_edge_homology(row.n);
      REQUIRE(ref.has_value());
      for (const auto& h : row.groups) {
        auto it = ref->find(h.degree);
        CHECK(h.group == (it == ref->end() ? GroupDescriptor{} : it->second));
      }
    }
  }
}

TEST_CASE("budgets leave gaps") {
  auto t = compute_table(TableKind::Matching, 10, 11, Ring::integers(), Budget{});
  REQUIRE(t.rows.size() == 2);
  CHECK_FALSE(t.rows[0].gap.has_value());
  REQUIRE(t.rows[1].gap.has_value());
  CHECK(*t.rows[1].gap == "n >= 11 requires --big");
  CHECK_FALSE(t.complete());

  Budget tight;
  tight.max_nnz = 10;
  auto g = compute_table(TableKind::Matching, 6, 6, Ring::integers(), tight);
  REQUIRE(g.rows[0].gap.has_value());
  CHECK(g.rows[0].gap->find("--max-nnz") != std::string::npos);
  CHECK(g.to_json()["rows"][0]["gap"].is_string());
  CHECK(g.to_csv().find("gap") != std::string::npos);
}

TEST_CASE("table output formats") {
  auto t = compute_table(TableKind::Matching, 5, 7, Ring::integers(), Budget{});
  auto text = t.to_text();
  CHECK(text.find("Z_3") != std::string::npos);
  CHECK(text.find("Z^6") != std::string::npos);
  auto csv = t.to_csv();
  CHECK(csv.find("\n7,") != std::string::npos);
  auto j = t.to_json();
  CHECK(j["rows"].size() == 3);
}

TEST_CASE("suite registry") {
  auto names = suite_names();
  CHECK(names.back() == "all");
  CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
  auto r = run_suite("torsion");
  CHECK(r.passed());
  CHECK(r.to_json()["suite"] == "torsion");
  SuiteOptions bad;
  bad.corrupt_fixture = true;
  CHECK_FALSE(run_suite("sequences", bad).passed());
}
