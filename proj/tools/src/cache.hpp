#pragma once

#include "serialize.hpp"

#include <filesystem>
#include <optional>

namespace quatcong::cli {

constexpr int kCacheSchemaVersion = 1;

json cache_record(const LevelData& d);
// Rebuilds the level from a record. Unit groups and keys are recomputed from
// the stored representatives and compared against the record.
LevelData level_from_record(const json& record);

std::string fnv1a_hex(const std::string& bytes);

std::optional<std::filesystem::path> cache_dir_from_env();
std::filesystem::path cache_path(const std::filesystem::path& dir, long n);

void write_atomic(const std::filesystem::path& path, const std::string& text);
std::optional<LevelData> load_cached(const std::filesystem::path& dir, long n, long bound);
void store_cached(const std::filesystem::path& dir, const LevelData& d);

// Loads from the cache when present, computes and stores otherwise.
LevelData obtain_level(long n, long bound, const std::optional<std::filesystem::path>& dir);

}  // namespace quatcong::cli
