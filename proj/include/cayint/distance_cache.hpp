#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "cayint/distance_oracle.hpp"

namespace cayint {

// On-disk distance table, all multi-byte fields little-endian:
//
//   "CAYD"            4 bytes magic
//   version           1 byte (= 1)
//   descriptor size   u32, then the model descriptor bytes
//   generator hash    u64, FNV-1a over GeneratingSet::canonical_text()
//   degree            u32
//   distances         order() bytes in dense-index (Lehmer rank) order
inline constexpr std::uint8_t kCacheVersion = 1;

std::uint64_t fnv1a64(std::string_view text);

std::filesystem::path cache_path(const std::filesystem::path& dir, const GroupModel& model);

// Throws Unsupported unless the oracle holds a full table.
void write_distance_table(const std::filesystem::path& file, const DistanceOracle& oracle);

// Reads and checks the header against the model (descriptor, generator hash,
// degree, size). Throws ParseError on any mismatch.
DistanceOracle load_distance_table(const std::filesystem::path& file, const GroupModel& model);

// True iff the table is the BFS distance function of the Cayley graph:
// entry 0 exactly at the identity, and every other entry equals one plus the
// minimum over its in-neighbours x*s^-1. That fixed point is unique, so any
// corrupted byte fails the sweep.
bool table_is_consistent(const GroupModel& model, std::span<const std::uint8_t> table);

struct CacheReport {
  bool ok = false;
  std::string message;
};

CacheReport verify_distance_table(const std::filesystem::path& file, const GroupModel& model);

}  // namespace cayint
