#include "siegel/cache.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <random>

using namespace siegel;
namespace fs = std::filesystem;

namespace {

class CacheTest : public ::testing::Test {
 protected:
  void SetUp() override {
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("siegel-cache-test-" + std::to_string(rd()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

CacheKey key_for(int k) { return {"eisenstein2", {{"k", k}, {"maxDet", 20}}, 1}; }

}  // namespace

TEST(CacheKey, CanonicalIsOrderIndependent) {
  CacheKey a{"op", nlohmann::json::parse(R"({"b":1,"a":2})"), 1};
  CacheKey b{"op", nlohmann::json::parse(R"({"a":2,"b":1})"), 1};
  EXPECT_EQ(a.canonical(), b.canonical());
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.hash().size(), 16u);
  CacheKey c = a;
  c.formula_version = 2;
  EXPECT_NE(a.hash(), c.hash());
}

TEST_F(CacheTest, RoundTrip) {
  CoefficientCache cache(dir_);
  EXPECT_FALSE(cache.load(key_for(4)).has_value());
  nlohmann::json payload{{"entries", {{"1,0,1", "30240"}}}};
  cache.store(key_for(4), payload);
  auto back = cache.load(key_for(4));
  ASSERT_TRUE(back.has_value());
  EXPECT_EQ(*back, payload);
  EXPECT_TRUE(fs::exists(dir_ / (key_for(4).hash() + ".json")));
}

TEST_F(CacheTest, ListClearVerify) {
  CoefficientCache cache(dir_);
  cache.store(key_for(4), 1);
  cache.store(key_for(6), 2);
  auto entries = cache.list();
  ASSERT_EQ(entries.size(), 2u);
  for (const auto& e : entries) {
    EXPECT_EQ(e.operation, "eisenstein2");
    EXPECT_FALSE(e.created_at.empty());
  }
  for (const auto& r : cache.verify()) EXPECT_TRUE(r.ok) << r.message;
  EXPECT_EQ(cache.clear(), 2u);
  EXPECT_TRUE(cache.list().empty());
}

TEST_F(CacheTest, TruncatedEntryIsDetected) {
  CoefficientCache cache(dir_);
  cache.store(key_for(4), nlohmann::json{{"x", std::string(200, 'a')}});
  const fs::path file = dir_ / (key_for(4).hash() + ".json");
  fs::resize_file(file, fs::file_size(file) / 2);
  EXPECT_FALSE(cache.load(key_for(4)).has_value());
  auto results = cache.verify();
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].ok);
  EXPECT_NE(results[0].message.find("corrupt"), std::string::npos);
}

TEST_F(CacheTest, RenamedEntryFailsVerify) {
  CoefficientCache cache(dir_);
  cache.store(key_for(4), 1);
  fs::rename(dir_ / (key_for(4).hash() + ".json"), dir_ / "0000000000000000.json");
  auto results = cache.verify();
  ASSERT_EQ(results.size(), 1u);
  EXPECT_FALSE(results[0].ok);
}

TEST_F(CacheTest, DefaultDirectoryFromEnvironment) {
  ::setenv("SIEGEL_CACHE_DIR", dir_.c_str(), 1);
  EXPECT_EQ(CoefficientCache::default_directory(), dir_);
  ::unsetenv("SIEGEL_CACHE_DIR");
  ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
  EXPECT_EQ(CoefficientCache::default_directory(), fs::path("/tmp/xdg/siegel"));
  ::unsetenv("XDG_CACHE_HOME");
}
