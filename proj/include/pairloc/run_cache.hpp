#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>

namespace pairloc {

std::string sha256_hex(const std::string& data);

/// Content-addressed store of serialized results. An entry records its key and
/// the hash of its payload; an entry that fails either check is reported as a
/// miss and overwritten by the recomputed value.
class RunCache {
 public:
  explicit RunCache(std::filesystem::path dir);

  const std::filesystem::path& directory() const { return dir_; }

  /// Returns the cached payload, or nullopt on a miss or a corrupt entry
  /// (`corrupt` is set in that case).
  std::optional<std::string> load(const std::string& key, bool* corrupt = nullptr) const;
  void store(const std::string& key, const std::string& payload) const;

  /// load() or compute-and-store.
  std::string get_or_compute(const std::string& key, const std::function<std::string()>& compute, bool* hit = nullptr,
                             bool* corrupt = nullptr) const;

  std::filesystem::path entry_path(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace pairloc
