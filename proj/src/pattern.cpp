#include "erco/pattern.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace erco {

Pattern Pattern::canonicalize(const std::vector<int>& class_table, int k) {
    if (k < 3 || k > 8) throw std::out_of_range("pattern: k must be in [3, 8]");
    int np = num_pairs(k);
    if (static_cast<int>(class_table.size()) != np)
        throw std::invalid_argument("pattern: class table must cover all C(k,2) pairs");
    int max_id = -1;
    for (int c : class_table) {
        if (c < 0) throw std::invalid_argument("pattern: negative class id");
        max_id = std::max(max_id, c);
    }
    if (max_id >= np) throw std::invalid_argument("pattern: class id exceeds pair count");
    std::vector<char> seen(max_id + 1, 0);
    for (int c : class_table) seen[c] = 1;
    for (int c = 0; c <= max_id; ++c)
        if (!seen[c]) throw std::invalid_argument("pattern: empty class " + std::to_string(c));
    int nc = max_id + 1;

    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::uint8_t> best, cand(np);
    std::array<int, 32> remap{};
    do {
        remap.fill(-1);
        int next = 0, t = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j, ++t) {
                int a = perm[i], b = perm[j];
                if (a > b) std::swap(a, b);
                int c = class_table[pair_index(a, b, k)];
                if (remap[c] < 0) remap[c] = next++;
                cand[t] = static_cast<std::uint8_t>(remap[c]);
            }
        if (best.empty() || cand < best) best = cand;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return Pattern(k, nc, std::move(best));
}

std::vector<std::uint8_t> Pattern::code() const {
    std::vector<std::uint8_t> c;
    c.reserve(table_.size() + 2);
    c.push_back(static_cast<std::uint8_t>(k_));
    c.push_back(static_cast<std::uint8_t>(num_classes_));
    c.insert(c.end(), table_.begin(), table_.end());
    return c;
}

std::string Pattern::code_hex() const {
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (std::uint8_t b : code()) {
        out.push_back(hex[b >> 4]);
        out.push_back(hex[b & 15]);
    }
    return out;
}

// Relabels colors by first appearance; returns the class count.
static int relabel_colors(std::span<const std::uint8_t> colors, std::vector<int>& out) {
    std::array<int, 256> remap;
    remap.fill(-1);
    int next = 0;
    out.resize(colors.size());
    for (std::size_t t = 0; t < colors.size(); ++t) {
        int c = colors[t];
        if (remap[c] < 0) remap[c] = next++;
        out[t] = remap[c];
    }
    return next;
}

bool matches(std::span<const std::uint8_t> clique_colors, const Pattern& p) {
    if (static_cast<int>(clique_colors.size()) != num_pairs(p.k()))
        throw std::invalid_argument("matches: color list length mismatch");
    std::vector<int> table;
    if (relabel_colors(clique_colors, table) != p.num_classes()) return false;
    return Pattern::canonicalize(table, p.k()).table() == p.table();
}

bool CliqueMatcher::matches(std::span<const std::uint8_t> clique_colors) {
    std::vector<int> table;
    if (relabel_colors(clique_colors, table) != pattern_.num_classes()) return false;
    std::string key(table.begin(), table.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    bool hit = Pattern::canonicalize(table, pattern_.k()).table() == pattern_.table();
    memo_.emplace(std::move(key), hit);
    return hit;
}

AlmostMonoResult is_almost_monochromatic(const Pattern& p) {
    if (p.is_monochromatic()) return {};
    int k = p.k();
    const auto& table = p.table();
    for (int x = 0; x < k; ++x) {
        int cls = -1;
        bool uniform = true;
        for (int i = 0; i < k && uniform; ++i) {
            if (i == x) continue;
            for (int j = i + 1; j < k; ++j) {
                if (j == x) continue;
                int c = table[pair_index(i, j, k)];
                if (cls < 0)
                    cls = c;
                else if (c != cls) {
                    uniform = false;
                    break;
                }
            }
        }
        if (!uniform) continue;
        for (int j = 0; j < k; ++j) {
            if (j == x) continue;
            int a = std::min(x, j), b = std::max(x, j);
            if (table[pair_index(a, b, k)] == cls) return {true, x};
        }
    }
    return {};
}

Pattern mono_pattern(int k) { return Pattern::canonicalize(std::vector<int>(num_pairs(k), 0), k); }

Pattern rainbow_pattern(int k) {
    std::vector<int> t(num_pairs(k));
    std::iota(t.begin(), t.end(), 0);
    return Pattern::canonicalize(t, k);
}

static Pattern from_classes(int k, const std::vector<std::vector<std::pair<int, int>>>& classes) {
    std::vector<int> table(num_pairs(k), -1);
    int cid = 0;
    for (const auto& cls : classes) {
        if (cls.empty()) throw std::invalid_argument("pattern: empty class");
        for (auto [i, j] : cls) {
            if (i == j || i < 0 || j < 0 || i >= k || j >= k)
                throw std::invalid_argument("pattern: bad vertex pair");
            int a = std::min(i, j), b = std::max(i, j);
            if (table[pair_index(a, b, k)] != -1) throw std::invalid_argument("pattern: classes overlap");
            table[pair_index(a, b, k)] = cid;
        }
        ++cid;
    }
    for (int v : table)
        if (v == -1) throw std::invalid_argument("pattern: classes do not cover all pairs");
    return Pattern::canonicalize(table, k);
}

const std::vector<PatternCatalogEntry>& pattern_catalog() {
    static const std::vector<PatternCatalogEntry> entries = [] {
        std::vector<PatternCatalogEntry> out;
        out.push_back({"T0", from_classes(3, {{{0, 1}, {1, 2}}, {{0, 2}}})});
        out.push_back({"R0", from_classes(3, {{{0, 1}}, {{1, 2}}, {{0, 2}}})});
        // K4 on {a,b,c,d} = {0,1,2,3}: triangle bcd plus edges at a
        out.push_back({"P1", from_classes(4, {{{1, 2}, {2, 3}, {1, 3}, {0, 1}, {0, 2}}, {{0, 3}}})});
        out.push_back({"P2", from_classes(4, {{{1, 2}, {2, 3}, {1, 3}, {0, 2}}, {{0, 1}, {0, 3}}})});
        out.push_back({"P3", from_classes(4, {{{1, 2}, {2, 3}, {1, 3}, {0, 2}}, {{0, 1}}, {{0, 3}}})});
        for (int k = 3; k <= 8; ++k)
            out.push_back({"MONO" + std::to_string(k), mono_pattern(k)});
        for (int k = 3; k <= 8; ++k)
            out.push_back({"RAINBOW" + std::to_string(k), rainbow_pattern(k)});
        return out;
    }();
    return entries;
}

std::optional<Pattern> pattern_from_name(const std::string& name) {
    std::string norm;
    for (char c : name)
        if (c != '(' && c != ')' && !std::isspace(static_cast<unsigned char>(c)))
            norm.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    for (const auto& e : pattern_catalog())
        if (e.name == norm) return e.pattern;
    return std::nullopt;
}

Pattern pattern_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("k") || !j.contains("classes"))
        throw std::invalid_argument("pattern json: need fields k, classes");
    int k = j["k"].get<int>();
    std::vector<std::vector<std::pair<int, int>>> classes;
    for (const auto& cls : j["classes"]) {
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : cls) {
            if (!e.is_array() || e.size() != 2) throw std::invalid_argument("pattern json: bad pair");
            edges.emplace_back(e[0].get<int>(), e[1].get<int>());
        }
        classes.push_back(std::move(edges));
    }
    return from_classes(k, classes);
}

std::string pattern_to_json(const Pattern& p) {
    int k = p.k();
    std::vector<std::vector<std::pair<int, int>>> classes(p.num_classes());
    int t = 0;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j, ++t) classes[p.table()[t]].emplace_back(i, j);
    nlohmann::json out;
    out["k"] = k;
    out["classes"] = nlohmann::json::array();
    for (const auto& cls : classes) {
        nlohmann::json jc = nlohmann::json::array();
        for (auto [i, j] : cls) jc.push_back({i, j});
        out["classes"].push_back(jc);
    }
    return out.dump();
}

// Subgraph containment (not induced) by backtracking over injections.
static bool contains_subgraph(const SimpleGraph& host, const SimpleGraph& j) {
    if (j.n() > host.n()) return false;
    std::vector<int> order(j.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return j.degree(a) > j.degree(b); });
    std::vector<int> image(j.n(), -1);
    std::vector<bool> used(host.n(), false);
    auto rec = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == order.size()) return true;
        int v = order[depth];
        for (int h = 0; h < host.n(); ++h) {
            if (used[h]) continue;
            bool ok = true;
            for (std::size_t d = 0; d < depth && ok; ++d)
                if (j.has_edge(v, order[d]) && !host.has_edge(h, image[order[d]])) ok = false;
            if (!ok) continue;
            image[v] = h;
            used[h] = true;
            if (self(self, depth + 1)) return true;
            used[h] = false;
            image[v] = -1;
        }
        return false;
    };
    return rec(rec, 0);
}

bool ramsey_le(const SimpleGraph& j, int k) {
    if (j.edge_count() < 1) throw std::invalid_argument("ramsey_le: J needs at least one edge");
    if (k < 1 || k > 6) throw std::out_of_range("ramsey_le: k > 6 exceeds the 2^C(k,2) sweep budget");
    int m = k * (k - 1) / 2;
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
    for (std::uint64_t mask = 0; mask < (1ULL << m); ++mask) {
        std::vector<std::pair<int, int>> e0, e1;
        for (int t = 0; t < m; ++t) ((mask >> t) & 1 ? e1 : e0).push_back(pairs[t]);
        if (!contains_subgraph(SimpleGraph(k, e0), j) && !contains_subgraph(SimpleGraph(k, e1), j))
            return false;
    }
    return true;
}

}  // namespace erco
