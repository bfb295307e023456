#include "matchcx/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace matchcx {

namespace {

std::mutex& key_mutex(const std::string& name) {
  static std::mutex guard;
  static std::map<std::string, std::mutex> locks;
  std::lock_guard<std::mutex> g(guard);
  return locks[name];
}

const char* kHeader = "matchcx-cache";

}  // namespace

std::string CacheKey::file_name() const {
  std::ostringstream s;
  std::string r = ring;
  for (char& c : r)
    if (c == ':') c = '_';
  s << std::hex << std::setw(16) << std::setfill('0') << complex_hash << std::dec << '-' << op << "-d" << degree << '-'
    << r << ".rec";
  return s.str();
}

ResultCache::ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  if (!dir_.empty()) std::filesystem::create_directories(dir_ / ("v" + std::to_string(kVersion)));
}

ResultCache ResultCache::from_environment() {
  const char* env = std::getenv("MATCHCX_CACHE_DIR");
  if (!env || !*env) return ResultCache();
  return ResultCache(env);
}

std::optional<std::string> ResultCache::get(const CacheKey& k) const {
  if (!enabled()) return std::nullopt;
  const std::string name = k.file_name();
  std::lock_guard<std::mutex> g(key_mutex(name));
  std::ifstream in(dir_ / ("v" + std::to_string(kVersion)) / name, std::ios::binary);
  if (!in) return std::nullopt;
  std::string header;
  int version = 0;
  if (!(in >> header >> version) || header != kHeader || version != kVersion) return std::nullopt;
  in.get();
  std::ostringstream body;
  body << in.rdbuf();
  return body.str();
}

void ResultCache::put(const CacheKey& k, const std::string& value) const {
  if (!enabled()) return;
  const std::string name = k.file_name();
  std::lock_guard<std::mutex> g(key_mutex(name));
  auto dir = dir_ / ("v" + std::to_string(kVersion));
  std::ostringstream tmpname;
  tmpname << name << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  auto tmp = dir / tmpname.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << kHeader << ' ' << kVersion << '\n' << value;
  }
  std::filesystem::rename(tmp, dir / name);
}

void write_complex(std::ostream& out, const MatchingComplex& k) {
  const Graph& g = k.ground();
  out << "matchcx-complex 1\n";
  out << "vertices " << g.num_vertices() << "\n";
  out << "edges " << g.edges().size();
  for (const auto& e : g.edges()) out << ' ' << e.u << ' ' << e.v;
  out << "\n";
  out << "void " << (k.is_void() ? 1 : 0) << "\n";
  for (int d = -1; d <= k.dimension(); ++d) {
    out << "dim " << d << ' ' << k.count(d) << "\n";
    for (const auto& m : k.simplices(d)) {
      bool first = true;
      for (const auto& e : m.edges) {
        out << (first ? "" : " ") << e.u << ' ' << e.v;
        first = false;
      }
      out << "\n";
    }
  }
}

MatchingComplex read_complex(std::istream& in) {
  std::string word;
  int version = 0;
  if (!(in >> word >> version) || word != "matchcx-complex" || version != 1)
    throw std::invalid_argument("not a version 1 complex file");
  int n = 0;
  if (!(in >> word >> n) || word != "vertices") throw std::invalid_argument("missing vertex count");
  std::size_t m = 0;
  if (!(in >> word >> m) || word != "edges") throw std::invalid_argument("missing edge list");
  std::vector<Edge> es;
  for (std::size_t i = 0; i < m; ++i) {
    int u = 0, v = 0;
    if (!(in >> u >> v)) throw std::invalid_argument("truncated edge list");
    es.push_back(make_edge(u, v));
  }
  Graph g(n, std::move(es));
  int is_void = 0;
  if (!(in >> word >> is_void) || word != "void") throw std::invalid_argument("missing void flag");
  if (is_void) return MatchingComplex::void_complex(g);
  std::vector<Matching> cells;
  std::string line;
  while (in >> word) {
    if (word != "dim") throw std::invalid_argument("expected a dimension header");
    int d = 0;
    std::size_t count = 0;
    in >> d >> count;
    std::getline(in, line);
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) throw std::invalid_argument("truncated simplex list");
      std::istringstream ls(line);
      std::vector<Edge> me;
      int u = 0, v = 0;
      while (ls >> u >> v) me.push_back(make_edge(u, v));
      if (static_cast<int>(me.size()) != d + 1) throw std::invalid_argument("simplex has the wrong dimension");
      cells.push_back(make_matching(std::move(me)));
    }
  }
  return MatchingComplex::from_simplices(g, std::move(cells));
}

}  // namespace matchcx
