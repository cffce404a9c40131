#include "siegel/cache.hpp"

#include "siegel/error.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace siegel {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kSuffix = ".json";

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open " + path.string());
  return json::parse(in);
}

void check_entry(const json& doc) {
  if (!doc.is_object() || !doc.contains("key") || !doc.contains("formulaVersion") || !doc.contains("payload"))
    throw DomainError("missing key, formulaVersion or payload");
  const auto& key = doc.at("key");
  if (!key.contains("operation") || !key.contains("params")) throw DomainError("malformed key");
}

}  // namespace

std::string CacheKey::canonical() const {
  json j{{"operation", operation}, {"params", params}, {"formulaVersion", formula_version}};
  return j.dump();  // nlohmann::json objects keep keys sorted
}

std::string CacheKey::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : canonical()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << h;
  return out.str();
}

CoefficientCache::CoefficientCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path CoefficientCache::default_directory() {
  if (const char* env = std::getenv("SIEGEL_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "siegel";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "siegel";
  return fs::temp_directory_path() / "siegel-cache";
}

fs::path CoefficientCache::path_for(const CacheKey& key) const { return dir_ / (key.hash() + kSuffix); }

std::optional<json> CoefficientCache::load(const CacheKey& key) const {
  const fs::path path = path_for(key);
  std::error_code ec;
  if (!fs::exists(path, ec)) return std::nullopt;
  try {
    json doc = read_json(path);
    check_entry(doc);
    if (doc.at("formulaVersion").get<int>() != key.formula_version) return std::nullopt;
    if (doc.at("key").at("operation") != key.operation || doc.at("key").at("params") != key.params)
      return std::nullopt;
    return doc.at("payload");
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void CoefficientCache::store(const CacheKey& key, const json& payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw DomainError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  const fs::path target = path_for(key);
  const fs::path tmp = dir_ / (key.hash() + ".tmp." + std::to_string(::getpid()));
  json doc{{"key", {{"operation", key.operation}, {"params", key.params}}},
           {"formulaVersion", key.formula_version},
           {"createdAt", utc_timestamp()},
           {"payload", payload}};
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw DomainError("cannot write " + tmp.string());
    out << doc.dump();
    out.flush();
    if (!out) throw DomainError("write failed for " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw DomainError("cannot move cache entry into place at " + target.string() + ": " + ec.message());
  }
}

std::vector<CacheEntryInfo> CoefficientCache::list() const {
  std::vector<CacheEntryInfo> out;
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return out;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    if (entry.path().extension() != kSuffix) continue;
    CacheEntryInfo info;
    info.path = entry.path();
    info.hash = entry.path().stem().string();
    info.size = entry.file_size();
    try {
      json doc = read_json(entry.path());
      check_entry(doc);
      info.operation = doc.at("key").at("operation").get<std::string>();
      info.params = doc.at("key").at("params");
      info.formula_version = doc.at("formulaVersion").get<int>();
      info.created_at = doc.value("createdAt", "");
    } catch (const std::exception&) {
      info.operation = "<unreadable>";
    }
    out.push_back(std::move(info));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.hash < b.hash; });
  return out;
}

std::size_t CoefficientCache::clear() const {
  std::size_t removed = 0;
  std::error_code ec;
  if (!fs::exists(dir_, ec)) return 0;
  for (const auto& entry : fs::directory_iterator(dir_)) {
    const auto ext = entry.path().extension();
    if (ext != kSuffix && entry.path().filename().string().find(".tmp.") == std::string::npos) continue;
    if (!fs::remove(entry.path(), ec) || ec)
      throw DomainError("cannot remove " + entry.path().string() + ": " + ec.message());
    ++removed;
  }
  return removed;
}

std::vector<CacheVerifyResult> CoefficientCache::verify() const {
  std::vector<CacheVerifyResult> out;
  for (const auto& info : list()) {
    CacheVerifyResult r{info.path, false, ""};
    try {
      json doc = read_json(info.path);
      check_entry(doc);
      CacheKey key{doc.at("key").at("operation").get<std::string>(), doc.at("key").at("params"),
                   doc.at("formulaVersion").get<int>()};
      if (key.hash() != info.hash) throw DomainError("file name does not match key hash " + key.hash());
      r.ok = true;
      r.message = "ok";
    } catch (const std::exception& e) {
      r.message = std::string("corrupt: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace siegel
