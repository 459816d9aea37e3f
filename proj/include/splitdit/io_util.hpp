#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "splitdit/rng.hpp"

namespace splitdit {

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view bytes);

/// Lowercase hex content hash used for cache keys and manifest entries.
inline std::string content_hash_hex(std::string_view bytes) {
  static const char* digits = "0123456789abcdef";
  std::uint64_t h = fnv1a64(bytes);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 0xf];
    h >>= 4;
  }
  return out;
}

std::string hash_file_hex(const std::filesystem::path& path);

}  // namespace splitdit
