#include "erco/graph6.hpp"

#include <nlohmann/json.hpp>
#include <stdexcept>

namespace erco {

std::string to_graph6(const SimpleGraph& g) {
    int n = g.n();
    if (n < 1 || n > 62) throw std::invalid_argument("to_graph6: n must be in [1, 62]");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int acc = 0, filled = 0;
    // column order: x(0,1), x(0,2), x(1,2), x(0,3), ...
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

SimpleGraph from_graph6(const std::string& s) {
    std::string body = s;
    if (body.rfind(">>graph6<<", 0) == 0) body = body.substr(10);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();
    if (body.empty()) throw std::invalid_argument("from_graph6: empty input");
    int n = static_cast<unsigned char>(body[0]) - 63;
    if (n < 1 || n > 62) throw std::invalid_argument("from_graph6: unsupported vertex count byte");
    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (body.size() != 1 + nbytes) throw std::invalid_argument("from_graph6: bad length");
    std::vector<std::pair<int, int>> es;
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(body[1 + bit / 6]) - 63;
            if (byte < 0 || byte > 63) throw std::invalid_argument("from_graph6: byte out of range");
            if ((byte >> (5 - bit % 6)) & 1) es.emplace_back(i, j);
        }
    // padding bits must be zero
    for (std::size_t b = nbits; b < nbytes * 6; ++b) {
        int byte = static_cast<unsigned char>(body[1 + b / 6]) - 63;
        if ((byte >> (5 - b % 6)) & 1) throw std::invalid_argument("from_graph6: nonzero padding");
    }
    return SimpleGraph(n, es);
}

std::string to_json_edges(const SimpleGraph& g) {
    nlohmann::json j;
    j["n"] = g.n();
    j["edges"] = nlohmann::json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j.dump();
}

SimpleGraph from_json_edges(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (!j.contains("n") || !j.contains("edges"))
        throw std::invalid_argument("graph json: need fields n, edges");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("graph json: bad edge entry");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return SimpleGraph(n, es);
}

}  // namespace erco
