#include "saxl/cache.hpp"

#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <vector>

#include "saxl/counting.hpp"

namespace saxl {

namespace {

constexpr std::array<char, 4> kMagic = {'S', 'X', 'T', 'B'};
constexpr std::uint32_t kVersion = 1;
constexpr std::uint8_t kOrderLexDecreasing = 1;

void put_u32(std::vector<unsigned char>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back((unsigned char)(v >> (8 * i)));
}

void put_u64(std::vector<unsigned char>& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back((unsigned char)(v >> (8 * i)));
}

// Sequential bounded reader over the loaded file body.
struct Cursor {
    const unsigned char* p;
    std::size_t left;

    void need(std::size_t k) const {
        if (left < k) throw CacheError("cache file truncated");
    }
    std::uint8_t u8() {
        need(1);
        --left;
        return *p++;
    }
    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v |= (std::uint32_t)*p++ << (8 * i);
        left -= 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v |= (std::uint64_t)*p++ << (8 * i);
        left -= 8;
        return v;
    }
};

}  // namespace

std::uint32_t crc32_bytes(const unsigned char* data, std::size_t len) {
    static const auto table = [] {
        std::array<std::uint32_t, 256> t{};
        for (std::uint32_t i = 0; i < 256; ++i) {
            std::uint32_t c = i;
            for (int k = 0; k < 8; ++k) c = (c & 1) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
            t[i] = c;
        }
        return t;
    }();
    std::uint32_t crc = 0xFFFFFFFFu;
    for (std::size_t i = 0; i < len; ++i)
        crc = table[(crc ^ data[i]) & 0xFFu] ^ (crc >> 8);
    return crc ^ 0xFFFFFFFFu;
}

std::string table_cache_path(const std::string& cache_dir, long long n) {
    return cache_dir + "/table-" + std::to_string(n) + ".sxtb";
}

void store_table(const CharTable& table, const std::string& path) {
    std::vector<unsigned char> body;
    put_u32(body, kVersion);
    put_u64(body, (std::uint64_t)table.n);
    body.push_back(kOrderLexDecreasing);
    const std::uint64_t rows = table.values.size();
    const std::uint64_t cols = rows == 0 ? 0 : table.values[0].size();
    put_u64(body, rows);
    put_u64(body, cols);

    std::vector<unsigned char> mag;
    for (const auto& row : table.values) {
        if (row.size() != cols) throw CacheError("store: ragged table");
        for (const CharValue& v : row) {
            if (v == 0) {
                body.push_back(0);
                put_u32(body, 0);
                continue;
            }
            body.push_back(v > 0 ? 1 : 2);
            mag.clear();
            const CharValue a = v > 0 ? v : CharValue(-v);
            export_bits(a, std::back_inserter(mag), 8, /*msv_first=*/false);
            put_u32(body, (std::uint32_t)mag.size());
            body.insert(body.end(), mag.begin(), mag.end());
        }
    }

    const std::uint32_t crc = crc32_bytes(body.data(), body.size());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("store: cannot open " + path);
    out.write(kMagic.data(), kMagic.size());
    out.write((const char*)body.data(), (std::streamsize)body.size());
    std::array<unsigned char, 4> tail;
    for (int i = 0; i < 4; ++i) tail[(size_t)i] = (unsigned char)(crc >> (8 * i));
    out.write((const char*)tail.data(), tail.size());
    if (!out) throw CacheError("store: write failed for " + path);
}

CharTable load_table(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw CacheError("load: cannot open " + path);
    std::vector<unsigned char> file((std::istreambuf_iterator<char>(in)),
                                    std::istreambuf_iterator<char>());
    if (file.size() < kMagic.size() + 4) throw CacheError("cache file truncated");
    if (!std::equal(kMagic.begin(), kMagic.end(), (const char*)file.data()))
        throw CacheError("not a table cache file");

    const std::size_t body_len = file.size() - kMagic.size() - 4;
    const unsigned char* body = file.data() + kMagic.size();
    std::uint32_t stored_crc = 0;
    for (int i = 0; i < 4; ++i)
        stored_crc |= (std::uint32_t)file[file.size() - 4 + (size_t)i] << (8 * i);
    if (crc32_bytes(body, body_len) != stored_crc)
        throw CacheError("cache checksum mismatch");

    Cursor cur{body, body_len};
    if (cur.u32() != kVersion) throw CacheError("unsupported cache version");
    const std::uint64_t n = cur.u64();
    if (cur.u8() != kOrderLexDecreasing) throw CacheError("unknown row order tag");
    const std::uint64_t rows = cur.u64();
    const std::uint64_t cols = cur.u64();
    if (rows != cols) throw CacheError("cache table is not square");
    if (n > 10000) throw CacheError("implausible n in cache header");

    CharTable table;
    table.n = (long long)n;
    table.shapes = enumerate_partitions((long long)n);
    if (rows != table.shapes.size())
        throw CacheError("cache row count disagrees with the partition count");

    table.values.assign(rows, std::vector<CharValue>(cols));
    std::vector<unsigned char> mag;
    for (std::uint64_t r = 0; r < rows; ++r)
        for (std::uint64_t c = 0; c < cols; ++c) {
            const std::uint8_t sign = cur.u8();
            const std::uint32_t len = cur.u32();
            if (sign == 0) {
                if (len != 0) throw CacheError("zero entry with payload bytes");
                continue;
            }
            if (sign != 1 && sign != 2) throw CacheError("bad sign byte");
            if (len == 0) throw CacheError("signed entry with empty payload");
            cur.need(len);
            mag.assign(cur.p, cur.p + len);
            cur.p += len;
            cur.left -= len;
            CharValue v;
            import_bits(v, mag.begin(), mag.end(), 8, /*msv_first=*/false);
            if (sign == 2) v = -v;
            table.values[(size_t)r][(size_t)c] = std::move(v);
        }
    if (cur.left != 0) throw CacheError("trailing bytes after table entries");
    return table;
}

CharTable load_or_build_table(long long n, const RunConfig& cfg, std::ostream& diag) {
    if (n < 0) throw std::invalid_argument("load_or_build_table: negative n");
    const Int classes = pi_table(n).values[(size_t)n];
    const long long budget = cfg.memory_budget_mb * 1024 * 1024;
    if (classes > budget ||
        RunConfig::estimate_table_bytes(classes.convert_to<long long>()) > budget)
        throw BudgetExceeded("character table for n = " + std::to_string(n) +
                             " would exceed the memory budget of " +
                             std::to_string(cfg.memory_budget_mb) + " MB");

    const std::string path = table_cache_path(cfg.cache_dir, n);
    if (std::filesystem::exists(path)) {
        try {
            CharTable table = load_table(path);
            diag << "cache hit: " << path << "\n";
            return table;
        } catch (const CacheError& e) {
            diag << "cache: ignoring " << path << " (" << e.what() << ")\n";
        }
    }

    CharTable table = char_table(n, cfg.workers);
    std::error_code ec;
    std::filesystem::create_directories(cfg.cache_dir, ec);
    if (!ec) {
        try {
            store_table(table, path);
        } catch (const CacheError& e) {
            diag << "cache: could not store " << path << " (" << e.what() << ")\n";
        }
    }
    return table;
}

}  // namespace saxl
