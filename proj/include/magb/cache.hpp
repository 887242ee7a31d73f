#pragma once

// Persistent cache for cohomology computations. Keys are a 64-bit FNV-1a hash
// over the canonical serialization of (Cayley table, phi, model, degree); the
// full key string is stored and compared on hit (the hash is an index, not a
// proof). Writes go to a temp file and are renamed into place.

#include <cstdint>
#include <optional>
#include <string>

#include "magb/cohomology.hpp"

namespace magb {

inline constexpr const char* kEngineVersion = "magbrauer/0.1.0";

std::uint64_t fnv1a64(const std::string& s);

// flag > MAGBRAUER_CACHE env > ".magbrauer-cache"
std::string resolve_cache_dir(const std::string& flag_value);

std::string cohomology_cache_key(const MagneticGroup& m, const CoefficientModel& model, int degree,
                                 bool bockstein);

// cache-aware entry points; empty dir disables caching
CohomologyGroup cohomology_cached(const MagneticGroup& m, CoefficientModel model, int degree,
                                  const Budget& budget, const std::string& dir, bool* from_cache);
CohomologyGroup h2_units_cached(const MagneticGroup& m, const Budget& budget,
                                const std::string& dir, bool* from_cache);

struct CacheEntryInfo {
    std::string file;
    std::string key;
    std::string engine_version;
};
std::vector<CacheEntryInfo> cache_inspect(const std::string& dir);
std::size_t cache_clear(const std::string& dir);

}  // namespace magb
