#pragma once

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace siegel {

struct CacheKey {
  std::string operation;
  nlohmann::json params;
  int formula_version = 1;

  std::string canonical() const;  // compact JSON with sorted keys
  std::string hash() const;       // 16 hex digits (FNV-1a 64)
};

struct CacheEntryInfo {
  std::string hash;
  std::string operation;
  nlohmann::json params;
  int formula_version = 0;
  std::string created_at;
  std::uintmax_t size = 0;
  std::filesystem::path path;
};

struct CacheVerifyResult {
  std::filesystem::path path;
  bool ok = false;
  std::string message;
};

// Directory of JSON files, one per key. Writes go to a temporary file that is
// renamed over the target, so readers see either nothing or a complete entry.
class CoefficientCache {
 public:
  explicit CoefficientCache(std::filesystem::path dir);
  // $SIEGEL_CACHE_DIR, else $XDG_CACHE_HOME/siegel, else ~/.cache/siegel.
  static std::filesystem::path default_directory();

  const std::filesystem::path& directory() const { return dir_; }
  // Payload for the key, or nothing when absent, unreadable or of another version.
  std::optional<nlohmann::json> load(const CacheKey& key) const;
  void store(const CacheKey& key, const nlohmann::json& payload) const;

  std::vector<CacheEntryInfo> list() const;
  std::size_t clear() const;
  std::vector<CacheVerifyResult> verify() const;

 private:
  std::filesystem::path path_for(const CacheKey& key) const;
  std::filesystem::path dir_;
};

}  // namespace siegel
