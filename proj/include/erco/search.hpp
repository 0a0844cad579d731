#pragma once

#include <string>
#include <vector>

#include "erco/cache.hpp"
#include "erco/counting.hpp"

namespace erco {

enum class SearchMode { all_graphs, multipartite };

struct SearchOptions {
    int threads = 1;
    Budget budget_per_count;
    CountCache* cache = nullptr;
};

struct SearchReport {
    int n = 0;
    int r = 0;
    std::string pattern_code;
    SearchMode mode = SearchMode::multipartite;
    RunStatus status = RunStatus::complete;
    BigCount best_count;
    std::vector<std::string> argmax_graph6;  // canonical codes, sorted (all-graphs)
    std::vector<PartSizes> argmax_parts;     // sorted (multipartite)
};

// All partitions of n, largest part first within each, in descending-lex
// sweep order: [n], [n-1,1], ..., [1,...,1].
std::vector<PartSizes> all_partitions(int n);

// Exact maximum of the count over all complete multipartite graphs on n
// vertices, with every maximizing partition listed.
SearchReport search_multipartite(int n, const Pattern& p, int r, const SearchOptions& opts = {});

// Exact maximum over all isomorphism classes (n <= 6); every maximizer is
// recounted under the alternate edge order before being reported.
SearchReport search_all_graphs(int n, const Pattern& p, int r, const SearchOptions& opts = {});

// Cross-checks the two searches and classifies the maximizers.
struct TheoremVerdict {
    SearchReport all_graphs;
    SearchReport multipartite;
    bool counts_agree = false;                // sweeps found the same maximum
    bool some_maximizer_multipartite = false; // must hold
    bool all_maximizers_multipartite = false;
    // Expected to hold when the pattern is non-monochromatic, not T0, and not
    // P2 with r = 2; small-n verdicts are reported, not over-claimed.
    bool all_multipartite_expected = false;
    std::vector<std::string> non_multipartite_maximizers;  // reproducible ones
};
TheoremVerdict verify_multipartite_theorems(int n, const Pattern& p, int r,
                                            const SearchOptions& opts = {});

}  // namespace erco
