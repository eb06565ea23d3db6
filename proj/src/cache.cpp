#include "gfan/cache.hpp"

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "gfan/hash.hpp"

namespace gfan {

ResultCache ResultCache::from_environment() {
  const char* dir = std::getenv("GFAN_CACHE_DIR");
  return ResultCache(dir && *dir ? dir : ".gfan-cache");
}

std::filesystem::path ResultCache::entry(std::uint64_t key) const {
  char name[17];
  std::snprintf(name, sizeof name, "%016llx", static_cast<unsigned long long>(key));
  return dir_ / name;
}

std::optional<std::string> ResultCache::get(std::uint64_t key) const {
  std::ifstream in(entry(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void ResultCache::put(std::uint64_t key, std::string_view value) const {
  static std::atomic<unsigned> counter{0};
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  auto target = entry(key);
  auto tmp = target;
  tmp += ".tmp" + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out.write(value.data(), static_cast<std::streamsize>(value.size()));
    if (!out) {
      out.close();
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

std::uint64_t cache_key(std::string_view algebra_text, std::string_view command, std::string_view parameters,
                        std::uint64_t seed) {
  std::uint64_t h = fnv1a64(algebra_text);
  h = hash_combine(h, fnv1a64(command));
  h = hash_combine(h, fnv1a64(parameters));
  return hash_combine(h, seed);
}

}  // namespace gfan
