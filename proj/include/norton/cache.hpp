#pragma once

#include "norton/norton.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace norton {

// Bumped whenever a formula or basis rule changes, so old entries are never reused.
inline constexpr const char* kCacheVersion = "norton-cache-v1";

struct CacheEntry {
    FamilySpec family;
    std::vector<std::string> vertex_keys;
    std::vector<std::uint8_t> dist;
    int diameter = 0;
    std::vector<long> eigenvalues;
    std::vector<long> multiplicities;
    NortonAlgebra algebra;
};

CacheEntry make_cache_entry(const FamilyInstance& inst, const SpectralData& s, const NortonAlgebra& alg);

nlohmann::json params_to_json(const FamilySpec& f);
FamilySpec params_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CacheEntry& e);
CacheEntry cache_entry_from_json(const nlohmann::json& j);

std::filesystem::path cache_path(const std::filesystem::path& dir, const FamilySpec& f);
// Writes to a temporary file in the same directory, then renames it into place.
void write_cache(const std::filesystem::path& dir, const CacheEntry& e);
// nullopt when the file is missing or was written by another cache version.
std::optional<CacheEntry> read_cache(const std::filesystem::path& dir, const FamilySpec& f);

} // namespace norton
