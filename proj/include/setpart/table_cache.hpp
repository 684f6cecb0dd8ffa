#pragma once

#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "setpart/bigint.hpp"

namespace setpart {

// Advisory on-disk cache for computed number tables (Bell sequences,
// Stirling rows). Files are versioned, length-prefixed decimal strings keyed
// by (kind, cap, format version); anything that fails validation is treated
// as a miss, so deleting or truncating cache files is always safe. Writes go
// through a temp file and rename, so concurrent readers never observe a torn
// file.
//
// Layout: "<dir>/<kind>-<cap>.v1" containing
//   setpartcache 1 <kind> <cap> <count>\n
//   <decimal-length>:<decimal>\n   (count times)
class TableCache {
 public:
  TableCache() = default;
  explicit TableCache(std::filesystem::path dir)
      : dir_(std::move(dir)), enabled_(true) {}

  static TableCache disabled() { return TableCache(); }

  // SETPART_CACHE_DIR, else XDG_CACHE_HOME/setpart, else ~/.cache/setpart.
  static std::filesystem::path default_dir() {
    if (const char* env = std::getenv("SETPART_CACHE_DIR")) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"))
      return std::filesystem::path(xdg) / "setpart";
    if (const char* home = std::getenv("HOME"))
      return std::filesystem::path(home) / ".cache" / "setpart";
    return std::filesystem::temp_directory_path() / "setpart-cache";
  }

  bool enabled() const { return enabled_; }
  const std::filesystem::path& dir() const { return dir_; }

  std::optional<std::vector<BigInt>> load(std::string_view kind,
                                          std::uint32_t cap) const {
    if (!enabled_) return std::nullopt;
    std::ifstream in(file_path(kind, cap));
    if (!in) return std::nullopt;

    std::string header;
    if (!std::getline(in, header)) return std::nullopt;
    std::istringstream hs(header);
    std::string magic, file_kind;
    unsigned version = 0;
    std::uint32_t file_cap = 0;
    std::size_t count = 0;
    hs >> magic >> version >> file_kind >> file_cap >> count;
    if (!hs || magic != "setpartcache" || version != 1 || file_kind != kind ||
        file_cap != cap)
      return std::nullopt;

    std::vector<BigInt> values;
    values.reserve(count);
    std::string line;
    for (std::size_t i = 0; i < count; ++i) {
      if (!std::getline(in, line)) return std::nullopt;
      std::size_t colon = line.find(':');
      if (colon == std::string::npos) return std::nullopt;
      std::size_t length = 0;
      try {
        length = std::stoul(line.substr(0, colon));
      } catch (...) {
        return std::nullopt;
      }
      std::string digits = line.substr(colon + 1);
      if (digits.size() != length) return std::nullopt;
      try {
        values.push_back(BigInt::from_string(digits));
      } catch (const std::invalid_argument&) {
        return std::nullopt;
      }
    }
    if (std::getline(in, line) && !line.empty()) return std::nullopt;
    return values;
  }

  bool store(std::string_view kind, std::uint32_t cap,
             const std::vector<BigInt>& values) const {
    if (!enabled_) return false;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return false;

    std::filesystem::path target = file_path(kind, cap);
    std::filesystem::path temp = target;
    temp += ".tmp." + std::to_string(
                          static_cast<unsigned long>(::getpid()));
    {
      std::ofstream out(temp, std::ios::trunc);
      if (!out) return false;
      out << "setpartcache 1 " << kind << ' ' << cap << ' ' << values.size()
          << '\n';
      for (const BigInt& v : values) {
        std::string digits = v.to_string();
        out << digits.size() << ':' << digits << '\n';
      }
      if (!out) {
        out.close();
        std::filesystem::remove(temp, ec);
        return false;
      }
    }
    std::filesystem::rename(temp, target, ec);
    if (ec) {
      std::filesystem::remove(temp, ec);
      return false;
    }
    return true;
  }

 private:
  std::filesystem::path file_path(std::string_view kind,
                                  std::uint32_t cap) const {
    return dir_ / (std::string(kind) + "-" + std::to_string(cap) + ".v1");
  }

  std::filesystem::path dir_;
  bool enabled_ = false;
};

}  // namespace setpart
