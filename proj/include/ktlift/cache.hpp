#pragma once

#include <cstdint>
#include <string>

namespace ktlift {

/// Process-wide memo cache for Littlewood-Richardson coefficients.
///
/// Keys are canonical "lam|mu|nu" strings, values are the coefficients.
/// The cache behaves as if each coefficient is computed exactly once;
/// reads are safe from any number of concurrent callers.
///
/// On-disk format: versioned JSON map. Corrupt or version-mismatched
/// files are discarded, never trusted.
namespace lr_cache {

inline constexpr int kFileVersion = 1;

/// Look up a coefficient; returns true and sets out on a hit.
bool lookup(const std::string& key, std::int64_t& out);
/// Insert a computed coefficient. Re-inserting an existing key with a
/// different value is a logic error and aborts.
void insert(const std::string& key, std::int64_t value);

std::size_t size();
std::uint64_t hits();
std::uint64_t misses();
void clear_memory();

/// Default path: $KTLIFT_CACHE if set, else "lr_cache.json" in the cwd.
std::string default_path();
bool load(const std::string& path);   // false if missing/corrupt/mismatched
void save(const std::string& path);

} // namespace lr_cache
} // namespace ktlift
