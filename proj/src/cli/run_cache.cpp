#include "pairloc/run_cache.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "pairloc/error.hpp"

namespace pairloc {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorKind::CacheError, "SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

RunCache::RunCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) throw Error(ErrorKind::CacheError, "cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::filesystem::path RunCache::entry_path(const std::string& key) const { return dir_ / (sha256_hex(key) + ".json"); }

std::optional<std::string> RunCache::load(const std::string& key, bool* corrupt) const {
  if (corrupt) *corrupt = false;
  const auto path = entry_path(key);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    const auto doc = nlohmann::json::parse(buf.str());
    const auto payload = doc.at("payload").get<std::string>();
    if (doc.at("key").get<std::string>() == key && doc.at("payload_sha256").get<std::string>() == sha256_hex(payload)) {
      return payload;
    }
  } catch (const nlohmann::json::exception&) {
  }
  if (corrupt) *corrupt = true;
  return std::nullopt;
}

void RunCache::store(const std::string& key, const std::string& payload) const {
  const auto now = std::chrono::system_clock::now();
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch()).count();
  nlohmann::json doc = {{"key", key}, {"payload_sha256", sha256_hex(payload)}, {"created_unix", secs}, {"payload", payload}};
  const auto path = entry_path(key);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::CacheError, "cannot write " + tmp);
    out << doc.dump(2) << "\n";
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::CacheError, "cannot move cache entry into place: " + ec.message());
}

std::string RunCache::get_or_compute(const std::string& key, const std::function<std::string()>& compute, bool* hit,
                                     bool* corrupt) const {
  if (auto cached = load(key, corrupt)) {
    if (hit) *hit = true;
    return *cached;
  }
  if (hit) *hit = false;
  std::string payload = compute();
  store(key, payload);
  return payload;
}

}  // namespace pairloc
