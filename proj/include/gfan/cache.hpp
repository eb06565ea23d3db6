#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace gfan {

/// Plain files named by a 64-bit key in hex. Writes go through a temporary
/// file and a rename, so readers never see partial entries.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}
  /// GFAN_CACHE_DIR, or .gfan-cache/ under the working directory.
  static ResultCache from_environment();

  const std::filesystem::path& directory() const noexcept { return dir_; }
  std::optional<std::string> get(std::uint64_t key) const;
  void put(std::uint64_t key, std::string_view value) const;

 private:
  std::filesystem::path entry(std::uint64_t key) const;
  std::filesystem::path dir_;
};

/// Key over the algebra file bytes, the command, its parameters and the seed.
std::uint64_t cache_key(std::string_view algebra_text, std::string_view command, std::string_view parameters,
                        std::uint64_t seed);

}  // namespace gfan
