#pragma once

#include "matchcx/cache.hpp"
#include "matchcx/complex.hpp"
#include "matchcx/homology.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace matchcx {

// M_n, or M_n with the 0-cell 12 deleted.
enum class TableKind { Matching, DeletedEdge };

TableKind parse_table_kind(const std::string& s);  // "M" or "M-e"
MatchingComplex table_complex(TableKind kind, int n);
// "M_7", "M_7-e".
std::string complex_id(TableKind kind, int n);

struct Budget {
  std::size_t max_nnz = 50000;  // per boundary matrix
  double timeout_s = 300;       // soft: checked before each group
  bool big = false;             // required for n >= 11
};

// One homology group with its provenance record.
struct HomologyRecord {
  std::string complex_id;
  int degree = 0;
  std::string ring;
  GroupDescriptor group;
  double wall_ms = 0;
  nlohmann::json to_json() const;
  static HomologyRecord from_json(const nlohmann::json& j);
};

// Cached homology: a hit returns the stored record unchanged, so reruns
// print identical bytes.
HomologyRecord cached_homology(const MatchingComplex& k, const std::string& id, int d, const Ring& ring,
                               const ResultCache& cache);

struct TableRow {
  int n = 0;
  std::vector<HomologyRecord> groups;  // every degree -1 .. dim
  std::optional<std::string> gap;      // reason the row was not computed
};

struct HomologyTable {
  TableKind kind = TableKind::Matching;
  Ring ring;
  std::vector<TableRow> rows;
  bool complete() const;
  nlohmann::json to_json() const;
  std::string to_csv() const;
  // Nonzero groups only, one row per n.
  std::string to_text() const;
};

// Largest boundary matrix needed for a row.
std::size_t row_nnz(const MatchingComplex& k);

HomologyTable compute_table(TableKind kind, int min_n, int max_n, const Ring& ring, const Budget& budget,
                            const ResultCache& cache = {});

}  // namespace matchcx
