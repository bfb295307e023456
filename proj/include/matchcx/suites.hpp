#pragma once

#include "matchcx/graph.hpp"
#include "matchcx/integer.hpp"
#include "matchcx/sparse_matrix.hpp"

#include <cstdint>
#include <json.hpp>
#include <string>
#include <vector>

namespace matchcx {

struct Check {
  std::string name;
  bool passed = false;
  nlohmann::json detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool passed() const;
  nlohmann::json to_json() const;
};

struct SuiteOptions {
  // Adds a sequence with one corrupted map entry; the suite must then fail.
  bool corrupt_fixture = false;
  std::uint64_t seed = 20240607;
  std::size_t enumeration_cap = 100000;
};

// "sequences", "bouc", "torsion", "collapse", "inequalities", "generation",
// or "all" (every suite but generation).
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt = {});

// Ground graphs for the collapse suite: K_{2k}, K_{a,2k-a} and seeded random
// graphs on 2k <= 8 vertices.
std::vector<Graph> collapse_fixture_graphs(std::uint64_t seed, std::size_t random_count = 50);

// psi_* of 14^25^36, 14^26^35, 15^24^36, 15^26^34 in H_0 coordinates
// {e_25, e_26, e_35, e_36}, e_cd = 1c (x) (4d - 56), from the 0-3-5-6
// sequence at n = 7. One row per image.
DenseIntMatrix psi_image_matrix();

// Rows: fundamental cycles of M(G_{a,b}) for ab = 12, 23, 34, 45, 51, 13.
// Columns: coefficients of 51^23, 12^34, 23^45, 34^51, 45^12, 13^24.
DenseIntMatrix hexagon_projection_matrix();

// |det| of a square integer matrix (product of invariant factors).
Integer abs_determinant(const DenseIntMatrix& m);

}  // namespace matchcx
