#include "saxl/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace saxl {

RunConfig RunConfig::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument("config: malformed JSON in " + path + ": " + e.what());
    }
    if (!j.is_object()) throw std::invalid_argument("config: top level must be an object");

    RunConfig cfg;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        try {
            if (key == "workers")
                cfg.workers = it.value().get<int>();
            else if (key == "memory_budget_mb")
                cfg.memory_budget_mb = it.value().get<long long>();
            else if (key == "cell_budget")
                cfg.cell_budget = it.value().get<long long>();
            else if (key == "cache_dir")
                cfg.cache_dir = it.value().get<std::string>();
            else if (key == "format")
                cfg.format = it.value().get<std::string>();
            else if (key == "seed")
                cfg.seed = it.value().get<unsigned long long>();
            else
                throw std::invalid_argument("config: unknown key \"" + key + "\"");
        } catch (const nlohmann::json::exception&) {
            throw std::invalid_argument("config: bad value for key \"" + key + "\"");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig RunConfig::discover() {
    RunConfig cfg;
    if (std::filesystem::exists("saxl-lab.json")) cfg = load("saxl-lab.json");
    if (const char* dir = std::getenv("SAXL_LAB_CACHE_DIR"); dir && *dir)
        cfg.cache_dir = dir;
    return cfg;
}

void RunConfig::validate() const {
    if (workers < 0) throw std::invalid_argument("config: workers must be >= 0");
    if (memory_budget_mb < 1)
        throw std::invalid_argument("config: memory_budget_mb must be positive");
    if (cell_budget < 1) throw std::invalid_argument("config: cell_budget must be positive");
    if (format != "json" && format != "tsv")
        throw std::invalid_argument("config: format must be \"json\" or \"tsv\"");
}

long long RunConfig::estimate_table_bytes(long long entries_per_side) {
    // Flat big-integer entries are one or two words for every n this tool
    // reaches; 24 bytes is a conservative per-entry figure plus row vectors.
    return entries_per_side * entries_per_side * 24 + entries_per_side * 64;
}

}  // namespace saxl
