#include "setpart/table_cache.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "setpart/tables.hpp"

using setpart::BigInt;
using setpart::TableCache;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("setpart-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("round trip") {
  TempDir tmp;
  TableCache cache(tmp.path);
  setpart::BellSequence bell(50);
  REQUIRE(cache.store("bell", 50, bell.values()));
  auto loaded = cache.load("bell", 50);
  REQUIRE(loaded.has_value());
  CHECK(*loaded == bell.values());
  // different key: miss
  CHECK(!cache.load("bell", 51).has_value());
  CHECK(!cache.load("stirling-row", 50).has_value());
}

TEST_CASE("disabled cache never reads or writes") {
  TableCache cache = TableCache::disabled();
  CHECK(!cache.enabled());
  CHECK(!cache.store("bell", 5, {BigInt(1)}));
  CHECK(!cache.load("bell", 5).has_value());
}

TEST_CASE("corruption is a miss, never a crash") {
  TempDir tmp;
  TableCache cache(tmp.path);
  std::vector<BigInt> values{BigInt(1), BigInt::from_string("987654321098765432109876543210")};
  REQUIRE(cache.store("bell", 1, values));
  fs::path file = tmp.path / "bell-1.v1";
  REQUIRE(fs::exists(file));

  auto write_file = [&](const std::string& content) {
    std::ofstream out(file, std::ios::trunc);
    out << content;
  };

  SUBCASE("truncated body") {
    write_file("setpartcache 1 bell 1 2\n1:1\n");
    CHECK(!cache.load("bell", 1).has_value());
  }
  SUBCASE("length prefix mismatch") {
    write_file("setpartcache 1 bell 1 2\n1:1\n5:123\n");
    CHECK(!cache.load("bell", 1).has_value());
  }
  SUBCASE("non-numeric payload") {
    write_file("setpartcache 1 bell 1 2\n1:1\n3:a2b\n");
    CHECK(!cache.load("bell", 1).has_value());
  }
  SUBCASE("wrong version") {
    write_file("setpartcache 2 bell 1 2\n1:1\n1:2\n");
    CHECK(!cache.load("bell", 1).has_value());
  }
  SUBCASE("wrong kind in header") {
    write_file("setpartcache 1 stirling-row 1 2\n1:1\n1:2\n");
    CHECK(!cache.load("bell", 1).has_value());
  }
  SUBCASE("trailing junk") {
    write_file("setpartcache 1 bell 1 2\n1:1\n1:2\nextra\n");
    CHECK(!cache.load("bell", 1).has_value());
  }
  SUBCASE("intact file still loads") {
    auto loaded = cache.load("bell", 1);
    REQUIRE(loaded.has_value());
    CHECK(*loaded == values);
  }
}

TEST_CASE("store replaces atomically and leaves no temp files") {
  TempDir tmp;
  TableCache cache(tmp.path);
  REQUIRE(cache.store("bell", 3, {BigInt(1), BigInt(1), BigInt(2), BigInt(5)}));
  REQUIRE(cache.store("bell", 3, {BigInt(1), BigInt(1), BigInt(2), BigInt(5)}));
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    ++files;
    CHECK(entry.path().extension() == ".v1");
  }
  CHECK(files == 1);
}
