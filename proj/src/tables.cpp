#include "matchcx/tables.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

namespace matchcx {

TableKind parse_table_kind(const std::string& s) {
  if (s == "M" || s == "M_n") return TableKind::Matching;
  if (s == "M-e" || s == "M_n-e") return TableKind::DeletedEdge;
  throw std::invalid_argument("unknown table '" + s + "' (expected M or M-e)");
}

MatchingComplex table_complex(TableKind kind, int n) {
  MatchingComplex k = matching_complex(complete_graph(n));
  if (kind == TableKind::DeletedEdge) {
    if (n < 2) throw std::invalid_argument("M_n - e needs n >= 2");
    k = delete_zero_cell(k, make_edge(1, 2));
  }
  return k;
}

std::string complex_id(TableKind kind, int n) {
  return "M_" + std::to_string(n) + (kind == TableKind::DeletedEdge ? "-e" : "");
}

nlohmann::json HomologyRecord::to_json() const {
  nlohmann::json t = nlohmann::json::array();
  for (const auto& z : group.torsion) {
    if (fits_int64(z))
      t.push_back(to_int64(z));
    else
      t.push_back(z.get_str());
  }
  return {{"complex_id", complex_id}, {"degree", degree},      {"ring", ring},
          {"free_rank", group.free_rank}, {"torsion", t}, {"wall_ms", wall_ms}};
}

HomologyRecord HomologyRecord::from_json(const nlohmann::json& j) {
  HomologyRecord r;
  r.complex_id = j.at("complex_id").get<std::string>();
  r.degree = j.at("degree").get<int>();
  r.ring = j.at("ring").get<std::string>();
  r.group.free_rank = j.at("free_rank").get<std::size_t>();
  for (const auto& t : j.at("torsion"))
    r.group.torsion.push_back(t.is_string() ? Integer(t.get<std::string>()) : to_integer(t.get<std::int64_t>()));
  r.wall_ms = j.at("wall_ms").get<double>();
  return r;
}

HomologyRecord cached_homology(const MatchingComplex& k, const std::string& id, int d, const Ring& ring,
                               const ResultCache& cache) {
  CacheKey key{k.content_hash(), d, ring.name(), "homology"};
  if (auto hit = cache.get(key)) {
    auto r = HomologyRecord::from_json(nlohmann::json::parse(*hit));
    r.complex_id = id;
    return r;
  }
  auto t0 = std::chrono::steady_clock::now();
  HomologyRecord r;
  r.complex_id = id;
  r.degree = d;
  r.ring = ring.name();
  r.group = homology(k, d, ring);
  // Rounded to microseconds so the cached text and the fresh value agree.
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.wall_ms = static_cast<double>(static_cast<long long>(ms * 1000)) / 1000;
  cache.put(key, r.to_json().dump());
  return r;
}

bool HomologyTable::complete() const {
  for (const auto& r : rows)
    if (r.gap) return false;
  return true;
}

nlohmann::json HomologyTable::to_json() const {
  nlohmann::json rs = nlohmann::json::array();
  for (const auto& r : rows) {
    nlohmann::json g = nlohmann::json::array();
    for (const auto& h : r.groups) g.push_back(h.to_json());
    nlohmann::json row{{"n", r.n}, {"groups", g}};
    if (r.gap) row["gap"] = *r.gap;
    rs.push_back(row);
  }
  return {{"table", kind == TableKind::Matching ? "M" : "M-e"},
          {"ring", ring.name()},
          {"complete", complete()},
          {"rows", rs}};
}

std::string HomologyTable::to_csv() const {
  std::ostringstream out;
  out << "n,degree,group\n";
  for (const auto& r : rows) {
    if (r.gap) {
      out << r.n << ",,gap\n";
      continue;
    }
    for (const auto& h : r.groups) out << r.n << ',' << h.degree << ',' << h.group.to_string() << '\n';
  }
  return out.str();
}

std::string HomologyTable::to_text() const {
  std::ostringstream out;
  for (const auto& r : rows) {
    out << "n=" << r.n << ':';
    if (r.gap) {
      out << " gap (" << *r.gap << ")\n";
      continue;
    }
    bool any = false;
    for (const auto& h : r.groups)
      if (!h.group.is_zero()) {
        out << " d=" << h.degree << ": " << h.group.to_string() << ';';
        any = true;
      }
    if (!any) out << " 0";
    out << '\n';
  }
  return out.str();
}

std::size_t row_nnz(const MatchingComplex& k) {
  std::size_t best = 0;
  for (int d = 0; d <= k.dimension(); ++d) best = std::max(best, k.count(d) * static_cast<std::size_t>(d + 1));
  return best;
}

HomologyTable compute_table(TableKind kind, int min_n, int max_n, const Ring& ring, const Budget& budget,
                            const ResultCache& cache) {
  HomologyTable t;
  t.kind = kind;
  t.ring = ring;
  const auto start = std::chrono::steady_clock::now();
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  for (int n = min_n; n <= max_n; ++n) {
    TableRow row;
    row.n = n;
    if (n >= 11 && !budget.big) {
      row.gap = "n >= 11 requires --big";
      t.rows.push_back(std::move(row));
      continue;
    }
    MatchingComplex k = table_complex(kind, n);
    const std::size_t nnz = row_nnz(k);
    if (nnz > budget.max_nnz) {
      row.gap = "boundary matrix with " + std::to_string(nnz) + " nonzeros exceeds --max-nnz";
    } else {
      for (int d = -1; d <= k.dimension(); ++d) {
        if (elapsed() > budget.timeout_s) {
          row.groups.clear();
          row.gap = "timeout";
          break;
        }
        row.groups.push_back(cached_homology(k, complex_id(kind, n), d, ring, cache));
      }
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace matchcx
