#pragma once

#include "matchcx/complex.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <mutex>
#include <optional>
#include <string>

namespace matchcx {

// Content-addressed store of result records. Keys hash the complex contents,
// so equal complexes share entries regardless of how they were built.
struct CacheKey {
  std::uint64_t complex_hash = 0;
  int degree = 0;
  std::string ring;
  std::string op;
  std::string file_name() const;
};

class ResultCache {
 public:
  static constexpr int kVersion = 1;

  ResultCache() = default;  // disabled
  explicit ResultCache(std::filesystem::path dir);
  // MATCHCX_CACHE_DIR, disabled when unset or empty.
  static ResultCache from_environment();

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& directory() const { return dir_; }
  std::optional<std::string> get(const CacheKey& k) const;
  // Atomic: written to a temporary file, then renamed into place.
  void put(const CacheKey& k, const std::string& value) const;

 private:
  std::filesystem::path dir_;
};

// Text serialisation of a complex: versioned header, the ground graph, then
// the simplices of each dimension.
void write_complex(std::ostream& out, const MatchingComplex& k);
MatchingComplex read_complex(std::istream& in);

}  // namespace matchcx
