// Command-line front end: exact counts, extremal sweeps, invariant suites,
// and the pattern catalog. Exit codes: 0 ok, 2 invalid input, 3 budget
// exceeded, 4 verification failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>

#include "erco/cache.hpp"
#include "erco/counting.hpp"
#include "erco/graph6.hpp"
#include "erco/search.hpp"
#include "erco/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalidInput = 2;
constexpr int kExitBudgetExceeded = 3;
constexpr int kExitVerifyFailed = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string first_line(const std::string& text) {
    auto pos = text.find('\n');
    return pos == std::string::npos ? text : text.substr(0, pos);
}

// Constructor mini-language: K<n>, turan:<n>:<k>, parts:<a,b,..>, path:<n>,
// cycle:<n>; otherwise a file path or a graph6 literal.
erco::SimpleGraph parse_graph_spec(const std::string& spec) {
    std::smatch m;
    if (std::regex_match(spec, m, std::regex(R"(K(\d+))")))
        return erco::complete_graph(std::stoi(m[1]));
    if (std::regex_match(spec, m, std::regex(R"(turan:(\d+):(\d+))")))
        return erco::turan_graph(std::stoi(m[1]), std::stoi(m[2]));
    if (std::regex_match(spec, m, std::regex(R"(parts:([\d,]+))")))
        return erco::complete_multipartite(erco::PartSizes::parse(m[1]));
    if (std::regex_match(spec, m, std::regex(R"(path:(\d+))")))
        return erco::path_graph(std::stoi(m[1]));
    if (std::regex_match(spec, m, std::regex(R"(cycle:(\d+))")))
        return erco::cycle_graph(std::stoi(m[1]));
    if (std::filesystem::exists(spec)) {
        std::string text = read_file(spec);
        auto body = text.find_first_not_of(" \t\r\n");
        if (body != std::string::npos && text[body] == '{') return erco::from_json_edges(text);
        return erco::from_graph6(first_line(text));
    }
    return erco::from_graph6(spec);
}

erco::Pattern parse_pattern_spec(const std::string& spec) {
    if (auto p = erco::pattern_from_name(spec)) return *p;
    if (std::filesystem::exists(spec)) return erco::pattern_from_json(read_file(spec));
    auto body = spec.find_first_not_of(" \t\r\n");
    if (body != std::string::npos && spec[body] == '{') return erco::pattern_from_json(spec);
    throw std::invalid_argument("unrecognized pattern spec: " + spec);
}

int env_int(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (!v) return fallback;
    try {
        return std::stoi(v);
    } catch (...) {
        return fallback;
    }
}

struct GlobalOpts {
    int threads = env_int("ERCO_THREADS", 1);
    std::string cache_dir;
    std::uint64_t node_budget = 0;
    double time_budget_ms = 0;
    std::string format = "json";

    erco::Budget budget() const {
        erco::Budget b;
        if (node_budget > 0) b.max_nodes = node_budget;
        if (time_budget_ms > 0) b.max_seconds = time_budget_ms / 1000.0;
        return b;
    }
    std::unique_ptr<erco::CountCache> open_cache() const {
        std::string dir = cache_dir;
        if (dir.empty())
            if (const char* env = std::getenv("ERCO_CACHE_DIR")) dir = env;
        if (dir.empty()) return nullptr;
        return std::make_unique<erco::CountCache>(dir);
    }
};

void add_global_opts(CLI::App* cmd, GlobalOpts& g) {
    cmd->add_option("--threads", g.threads, "worker threads (env ERCO_THREADS)");
    cmd->add_option("--cache-dir", g.cache_dir, "count cache directory (env ERCO_CACHE_DIR)");
    cmd->add_option("--node-budget", g.node_budget, "abort after this many search nodes");
    cmd->add_option("--time-budget-ms", g.time_budget_ms, "abort after this much wall time");
    cmd->add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

int emit_count(const erco::CountResult& res, const std::string& format) {
    if (res.status != erco::RunStatus::complete) {
        std::cerr << "budget exceeded: " << erco::to_string(res.status) << " after "
                  << res.nodes_visited << " nodes\n";
        return kExitBudgetExceeded;
    }
    if (format == "csv") {
        std::cout << "count,nodes,r,graph,pattern_code,status\n"
                  << erco::to_decimal(res.count) << ',' << res.nodes_visited << ',' << res.r << ','
                  << res.graph_code << ',' << res.pattern_code << ",complete\n";
    } else {
        nlohmann::json j;
        j["count"] = erco::to_decimal(res.count);
        j["nodes"] = res.nodes_visited;
        j["r"] = res.r;
        j["graph"] = res.graph_code;
        j["pattern_code"] = res.pattern_code;
        j["status"] = "complete";
        std::cout << j.dump() << "\n";
    }
    std::cerr << "wall: " << res.wall_seconds << " s\n";
    return kExitOk;
}

int emit_search(const erco::SearchReport& rep, const std::string& format) {
    if (rep.status != erco::RunStatus::complete) {
        std::cerr << "budget exceeded: " << erco::to_string(rep.status) << "\n";
        return kExitBudgetExceeded;
    }
    std::vector<std::string> argmax;
    if (rep.mode == erco::SearchMode::multipartite)
        for (const auto& parts : rep.argmax_parts) argmax.push_back(parts.to_string());
    else
        argmax = rep.argmax_graph6;
    if (format == "csv") {
        std::cout << "n,r,mode,best_count,argmax\n";
        for (const auto& a : argmax)
            std::cout << rep.n << ',' << rep.r << ','
                      << (rep.mode == erco::SearchMode::multipartite ? "multipartite" : "all-graphs")
                      << ',' << erco::to_decimal(rep.best_count) << ",\"" << a << "\"\n";
    } else {
        nlohmann::json j;
        j["n"] = rep.n;
        j["r"] = rep.r;
        j["mode"] = rep.mode == erco::SearchMode::multipartite ? "multipartite" : "all-graphs";
        j["pattern_code"] = rep.pattern_code;
        j["best_count"] = erco::to_decimal(rep.best_count);
        j["argmax"] = argmax;
        j["status"] = "complete";
        std::cout << j.dump() << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact clique-pattern-avoiding edge-coloring counts and extremal search"};
    app.require_subcommand(1);

    GlobalOpts g;
    std::string graph_spec, pattern_spec = "R0", mode = "multipartite", suite;
    int colors = 3, search_n = 0;
    std::string order = "a";

    CLI::App* cmd_count = app.add_subcommand("count", "count pattern-free r-colorings of one graph");
    cmd_count->add_option("--graph", graph_spec, "graph spec, file, or graph6")->required();
    cmd_count->add_option("--pattern", pattern_spec, "catalog name or pattern JSON file");
    cmd_count->add_option("--colors", colors, "number of colors r")->required();
    cmd_count->add_option("--edge-order", order, "a (max-vertex) or b (min-vertex)")
        ->check(CLI::IsMember({"a", "b"}));
    add_global_opts(cmd_count, g);

    CLI::App* cmd_search = app.add_subcommand("search", "find extremal graphs on n vertices");
    cmd_search->add_option("--n", search_n, "vertex count")->required();
    cmd_search->add_option("--pattern", pattern_spec, "catalog name or pattern JSON file");
    cmd_search->add_option("--colors", colors, "number of colors r")->required();
    cmd_search->add_option("--mode", mode, "all-graphs or multipartite")
        ->check(CLI::IsMember({"all-graphs", "multipartite"}));
    add_global_opts(cmd_search, g);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a named invariant suite");
    cmd_verify->add_option("suite", suite, "suite name")->required();
    add_global_opts(cmd_verify, g);

    CLI::App* cmd_patterns = app.add_subcommand("patterns", "list the pattern catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (cmd_patterns->parsed()) {
            for (const auto& e : erco::pattern_catalog()) {
                nlohmann::json j;
                j["name"] = e.name;
                j["k"] = e.pattern.k();
                j["num_classes"] = e.pattern.num_classes();
                j["code"] = e.pattern.code_hex();
                j["classes"] = nlohmann::json::parse(erco::pattern_to_json(e.pattern))["classes"];
                std::cout << j.dump() << "\n";
            }
            return kExitOk;
        }

        auto cache = g.open_cache();
        if (cmd_count->parsed()) {
            erco::CountOptions opts;
            opts.threads = g.threads;
            opts.budget = g.budget();
            opts.order = order == "a" ? erco::EdgeOrder::clique_first_maxlex
                                      : erco::EdgeOrder::clique_first_minlex;
            erco::SimpleGraph graph = parse_graph_spec(graph_spec);
            erco::Pattern pattern = parse_pattern_spec(pattern_spec);
            erco::CountResult res = erco::count_colorings(graph, pattern, colors, opts);
            if (cache && res.status == erco::RunStatus::complete)
                cache->store_graph(graph.n(), colors, res.pattern_code, res.graph_code, res.count);
            return emit_count(res, g.format);
        }
        if (cmd_search->parsed()) {
            erco::SearchOptions opts;
            opts.threads = g.threads;
            opts.budget_per_count = g.budget();
            opts.cache = cache.get();
            erco::Pattern pattern = parse_pattern_spec(pattern_spec);
            erco::SearchReport rep =
                mode == "multipartite"
                    ? erco::search_multipartite(search_n, pattern, colors, opts)
                    : erco::search_all_graphs(search_n, pattern, colors, opts);
            return emit_search(rep, g.format);
        }
        if (cmd_verify->parsed()) {
            erco::VerifyOptions opts;
            opts.threads = g.threads;
            opts.cache = cache.get();
            bool ok = erco::run_verify_suite(suite, opts, std::cout);
            return ok ? kExitOk : kExitVerifyFailed;
        }
    } catch (const std::out_of_range& e) {
        std::cerr << "budget guard: " << e.what() << "\n";
        return kExitBudgetExceeded;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitOk;
}
