#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "hecke/kl.hpp"

namespace hecke {

/// On-disk KL column cache.
///
/// Layout (little-endian): magic "HECKECAC", u32 version, u64 config hash, i32 radius,
/// u64 column count, then per column the word of w and its entries (word of x, term
/// count, (i32 exponent, decimal coefficient) per term), and finally a u64 FNV-1a
/// checksum of everything before it. Words rather than ids are stored so a cache can
/// be loaded into a ball of any radius.
inline constexpr std::uint32_t kCacheVersion = 1;

struct CacheLoadResult {
  bool loaded = false;
  std::size_t columns = 0;  ///< columns installed
  std::string reason;       ///< why nothing was loaded
};

/// <dir>/kl-<config hash>-r<radius>.bin
std::filesystem::path cache_path(const std::filesystem::path& dir, const GroupConfig& config, int radius);

/// Writes the columns of length <= radius that have already been computed.
void save_cache(const std::filesystem::path& path, const KLTable& table, int radius);

/// Validates and installs the cached columns that fall inside the table's ball. Never
/// throws on a bad file: a missing, corrupt, stale or foreign cache is reported in
/// `reason` and the caller simply recomputes.
CacheLoadResult load_cache(const std::filesystem::path& path, const KLTable& table);

std::uint64_t fnv1a(std::string_view bytes);

}  // namespace hecke
