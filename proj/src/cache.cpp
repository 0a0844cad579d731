#include "erco/cache.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace erco {

CountCache::CountCache(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    file_ = dir / "counts.jsonl";
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.contains("count") || !j.contains("pattern_code") || !j.contains("r"))
            continue;  // tolerate stray lines; a miss just recounts
        BigCount count(j["count"].get<std::string>());
        std::string pat = j["pattern_code"].get<std::string>();
        int r = j["r"].get<int>();
        if (j.contains("parts"))
            map_[parts_key(pat, r, PartSizes::parse(j["parts"].get<std::string>()))] = count;
        else if (j.contains("graph6"))
            map_[graph_key(pat, r, j["graph6"].get<std::string>())] = count;
    }
    enabled_ = true;
}

std::optional<BigCount> CountCache::lookup(const std::string& key) const {
    if (!enabled_) return std::nullopt;
    std::lock_guard<std::mutex> lock(mu_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
}

void CountCache::insert_and_append(const std::string& key, const std::string& line,
                                   const BigCount& count) {
    if (!enabled_) return;
    std::lock_guard<std::mutex> lock(mu_);
    if (map_.count(key)) return;
    map_[key] = count;
    std::ofstream out(file_, std::ios::app);
    out << line << '\n';
}

void CountCache::store_parts(int n, int r, const std::string& pattern_hex, const PartSizes& parts,
                             const BigCount& count) {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["pattern_code"] = pattern_hex;
    j["parts"] = parts.to_string();
    j["count"] = to_decimal(count);
    insert_and_append(parts_key(pattern_hex, r, parts), j.dump(), count);
}

void CountCache::store_graph(int n, int r, const std::string& pattern_hex, const std::string& graph6,
                             const BigCount& count) {
    nlohmann::json j;
    j["n"] = n;
    j["r"] = r;
    j["pattern_code"] = pattern_hex;
    j["graph6"] = graph6;
    j["count"] = to_decimal(count);
    insert_and_append(graph_key(pattern_hex, r, graph6), j.dump(), count);
}

std::string CountCache::parts_key(const std::string& pattern_hex, int r, const PartSizes& parts) {
    return "p|" + pattern_hex + "|" + std::to_string(r) + "|" + parts.to_string();
}

std::string CountCache::graph_key(const std::string& pattern_hex, int r, const std::string& graph6) {
    return "g|" + pattern_hex + "|" + std::to_string(r) + "|" + graph6;
}

}  // namespace erco
