#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

namespace bm::cli {

/// Flat-file store of result envelopes, one JSON file per key.
///
/// The key is the canonical JSON of (operation, inputs, target digits, max level);
/// the file name is its 64-bit FNV-1a hash. Writes go to a temporary file in the
/// same directory followed by a rename, so concurrent readers never see a
/// partial entry.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);

  // BESSELMOMENTS_CACHE, else $XDG_CACHE_HOME/besselmoments, else ~/.cache/besselmoments.
  static std::filesystem::path default_dir();

  static std::string canonical_key(const std::string& op, const nlohmann::json& inputs, int digits, int max_level);

  // Envelope stored under `key` with at least `digits` target digits.
  std::optional<nlohmann::json> load(const std::string& key, int digits) const;
  // Failures to write are ignored; the cache is an optimisation.
  void store(const std::string& key, int digits, const nlohmann::json& envelope) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  std::filesystem::path dir_;
};

std::string fnv1a_hex(const std::string& text);

}  // namespace bm::cli
