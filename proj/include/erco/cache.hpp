#pragma once

#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "erco/bigcount.hpp"
#include "erco/graph.hpp"

namespace erco {

// Persistent count store: one JSON record per line in <dir>/counts.jsonl,
// {"n":..,"r":..,"pattern_code":..,"parts"|"graph6":..,"count":"<decimal>"}.
// Sweeps look up before counting, so interrupted runs resume.
class CountCache {
public:
    CountCache() = default;  // disabled
    explicit CountCache(const std::filesystem::path& dir);

    bool enabled() const { return enabled_; }
    std::size_t size() const { return map_.size(); }

    std::optional<BigCount> lookup(const std::string& key) const;
    void store_parts(int n, int r, const std::string& pattern_hex, const PartSizes& parts,
                     const BigCount& count);
    void store_graph(int n, int r, const std::string& pattern_hex, const std::string& graph6,
                     const BigCount& count);

    static std::string parts_key(const std::string& pattern_hex, int r, const PartSizes& parts);
    static std::string graph_key(const std::string& pattern_hex, int r, const std::string& graph6);

private:
    void insert_and_append(const std::string& key, const std::string& line, const BigCount& count);

    bool enabled_ = false;
    std::filesystem::path file_;
    mutable std::mutex mu_;
    std::unordered_map<std::string, BigCount> map_;
};

}  // namespace erco
