#ifndef SAXL_CACHE_HPP
#define SAXL_CACHE_HPP

/*
 * Binary on-disk cache for full character tables.
 *
 * File layout (all integers little endian):
 *   magic   "SXTB"
 *   u32     format version (currently 1)
 *   u64     n
 *   u8      row/column order tag (1 = lexicographically decreasing)
 *   u64     rows
 *   u64     cols
 *   entries rows x cols of { u8 sign (0 zero / 1 plus / 2 minus),
 *                            u32 byte length, magnitude bytes LSB first }
 *   u32     CRC-32 of everything after the magic
 *
 * The loader re-derives the expected row labels from n and refuses files
 * whose header, sizes, or checksum disagree.
 */

#include <iostream>
#include <stdexcept>
#include <string>

#include "saxl/character.hpp"
#include "saxl/config.hpp"

namespace saxl {

// Raised when a cache file is unreadable, truncated, or inconsistent.
struct CacheError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// CRC-32 (reflected 0xEDB88320, init/final 0xFFFFFFFF) of a byte buffer.
std::uint32_t crc32_bytes(const unsigned char* data, std::size_t len);

// Where the table for a given n lives under the cache directory.
std::string table_cache_path(const std::string& cache_dir, long long n);

// Serialize a table to the given path (parent directory must exist).
void store_table(const CharTable& table, const std::string& path);

// Read a table back, validating the full format; throws CacheError.
CharTable load_table(const std::string& path);

// Budget-checked table access: refuses n whose table would exceed
// cfg.memory_budget_mb, loads from cfg.cache_dir when a valid cache file
// is present (noting the hit on diag), and otherwise builds the table
// with cfg.workers and stores it for next time.
CharTable load_or_build_table(long long n, const RunConfig& cfg,
                              std::ostream& diag = std::cerr);

}  // namespace saxl

#endif
