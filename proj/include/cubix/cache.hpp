#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "cubix/e6_weyl.hpp"
#include "cubix/finite_orthogonal.hpp"

namespace cubix {

// On-disk memoization of the two expensive group closures.  Files are JSON
// keyed by a format string; anything unreadable or mismatched is silently
// recomputed and rewritten.
struct CacheConfig {
    std::optional<std::filesystem::path> dir; // disengaged: no caching
};

// The CUBIX_CACHE environment variable overrides the flag value; an empty
// flag and no env var disable caching.
CacheConfig resolve_cache(const std::string& flag_dir);

GroupEnumeration cached_orthogonal_group(const CacheConfig& cache);
WeylGroup cached_weyl_group(const CacheConfig& cache);

} // namespace cubix
