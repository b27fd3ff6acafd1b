#ifndef SAXL_CONFIG_HPP
#define SAXL_CONFIG_HPP

/*
 * Run configuration shared by the command-line tool and the budgeted
 * library entry points.  Values come from (in increasing precedence)
 * built-in defaults, an optional saxl-lab.json config file, the
 * SAXL_LAB_CACHE_DIR environment variable, and command-line flags.
 */

#include <stdexcept>
#include <string>

namespace saxl {

// Raised when a requested computation exceeds the configured budget;
// the CLI maps it to exit code 3.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int workers = 0;                      // 0 = one per hardware thread
    long long memory_budget_mb = 512;     // cap for in-memory character tables
    long long cell_budget = 64000000;     // cap for exact-mode table cells
    std::string cache_dir = ".saxl-cache";
    std::string format = "json";          // "json" or "tsv"
    unsigned long long seed = 20260815;

    // Parse a JSON config file; unknown keys are rejected.
    static RunConfig load(const std::string& path);
    // Use ./saxl-lab.json when present, else defaults; then apply the
    // environment override for the cache directory.
    static RunConfig discover();

    void validate() const;  // throws std::invalid_argument on bad values

    // Estimated bytes for an n x n character table with C = #partitions(n)
    // entries per side; used to enforce memory_budget_mb.
    static long long estimate_table_bytes(long long entries_per_side);
};

}  // namespace saxl

#endif
