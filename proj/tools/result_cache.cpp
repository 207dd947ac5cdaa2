#include "result_cache.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace bm::cli {

namespace fs = std::filesystem;

std::string fnv1a_hex(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

fs::path ResultCache::default_dir() {
  if (const char* env = std::getenv("BESSELMOMENTS_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "besselmoments";
  if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "besselmoments";
  return fs::temp_directory_path() / "besselmoments";
}

std::string ResultCache::canonical_key(const std::string& op, const nlohmann::json& inputs, int digits,
                                       int max_level) {
  const nlohmann::json key = {{"format", 1}, {"op", op}, {"inputs", inputs}, {"digits", digits},
                              {"max_level", max_level}};
  return key.dump();
}

fs::path ResultCache::path_for(const std::string& key) const { return dir_ / (fnv1a_hex(key) + ".json"); }

std::optional<nlohmann::json> ResultCache::load(const std::string& key, int digits) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  try {
    const nlohmann::json entry = nlohmann::json::parse(in);
    // Hash collisions and entries from other settings are misses.
    if (entry.at("key").get<std::string>() != key) return std::nullopt;
    if (entry.at("target_digits").get<int>() < digits) return std::nullopt;
    return entry.at("envelope");
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ResultCache::store(const std::string& key, int digits, const nlohmann::json& envelope) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  const auto now = std::chrono::system_clock::now();
  const nlohmann::json entry = {
      {"key", key},
      {"target_digits", digits},
      {"created_at", std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count()},
      {"envelope", envelope}};

  std::random_device rd;
  std::ostringstream tmp_name;
  tmp_name << '.' << fnv1a_hex(key) << '.' << ::getpid() << '.' << rd() << ".tmp";
  const fs::path tmp = dir_ / tmp_name.str();
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) return;
    out << entry.dump() << '\n';
    if (!out.flush()) {
      fs::remove(tmp, ec);
      return;
    }
  }
  fs::rename(tmp, path_for(key), ec);
  if (ec) fs::remove(tmp, ec);
}

}  // namespace bm::cli
