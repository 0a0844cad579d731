#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "erco/bigcount.hpp"
#include "erco/budget.hpp"
#include "erco/graph.hpp"
#include "erco/pattern.hpp"

namespace erco {

// Total color assignment, indexed like SimpleGraph::edges().
using EdgeColoring = std::vector<std::uint8_t>;

// Two fixed search orders; counts are order-independent (and tested so).
// Both place edges lying in no k-clique last, where the tree is branch-free.
enum class EdgeOrder { clique_first_maxlex, clique_first_minlex };

struct CountOptions {
    int threads = 1;
    EdgeOrder order = EdgeOrder::clique_first_maxlex;
    Budget budget;
};

struct CountResult {
    RunStatus status = RunStatus::complete;
    BigCount count;  // meaningful only when status == complete
    std::string graph_code;
    std::string pattern_code;
    int r = 0;
    std::uint64_t nodes_visited = 0;
    double wall_seconds = 0.0;
};

// Exact number of pattern-free r-colorings of E(G). Backtracking over a fixed
// edge order, testing each k-clique at its last edge; exactness is mandatory,
// the order is a heuristic.
CountResult count_colorings(const SimpleGraph& g, const Pattern& p, int r,
                            const CountOptions& opts = {});

// Extension counts c(v, H^) for a fresh vertex v joined to `targets` of H.
// The structural setup is reused across many colorings of H.
class ExtensionCounter {
public:
    ExtensionCounter(const SimpleGraph& h, std::vector<int> targets, const Pattern& p, int r);

    // h_colors must itself be pattern-free (not rechecked here).
    // Returns nullopt when the meter trips.
    std::optional<BigCount> count(std::span<const std::uint8_t> h_colors,
                                  CliqueMatcher& matcher, BudgetMeter& meter) const;

    int num_targets() const { return static_cast<int>(targets_.size()); }

private:
    struct ExtClique {
        std::vector<std::pair<int, int>> fixed_slots;  // (slot, h edge index)
        std::vector<std::pair<int, int>> var_slots;    // (slot, target position)
    };
    int k_ = 0;
    int r_ = 0;
    int pairs_ = 0;
    std::vector<int> targets_;  // sorted ascending
    std::vector<ExtClique> cliques_;
    std::vector<std::vector<int>> cliques_at_;  // by last variable position
    std::vector<bool> tail_free_;
    std::vector<BigCount> r_pows_;
};

// Validating wrapper: rejects h_colors that already contain the pattern.
struct ExtensionResult {
    RunStatus status = RunStatus::complete;
    BigCount count;
};
ExtensionResult count_extensions(const SimpleGraph& h, const EdgeColoring& h_colors,
                                 const std::vector<int>& targets, const Pattern& p, int r,
                                 const CountOptions& opts = {});

// Exact count for a complete multipartite graph via the twin identity: peel
// the largest part (s pairwise twins adjacent to all of H), enumerate good
// colorings of H, and add c(v, H^)^s per coloring.
CountResult count_multipartite(const PartSizes& parts, const Pattern& p, int r,
                               const CountOptions& opts = {});

// Serial enumeration of every pattern-free r-coloring of G; fn receives the
// colors in edge-list order. Stops early if the budget trips.
RunStatus enumerate_good_colorings(const SimpleGraph& g, const Pattern& p, int r,
                                   const Budget& budget,
                                   const std::function<void(const EdgeColoring&)>& fn);

// Variant sharing a caller-owned meter across several enumerations; fn may
// return false to abort.
bool enumerate_good_colorings(const SimpleGraph& g, const Pattern& p, int r, BudgetMeter& meter,
                              const std::function<bool(const EdgeColoring&)>& fn);

// Full profile table over the good colorings of H = G - S: for every coloring,
// the extension counts of each vertex of S (edges per G's adjacency).
struct ProfileTable {
    RunStatus status = RunStatus::complete;
    SimpleGraph h;                 // induced on V(G) - S, original label order
    std::vector<int> s_vertices;   // sorted labels of S in G
    std::vector<EdgeColoring> colorings;
    std::vector<std::vector<BigCount>> ext_counts;  // [coloring][index into s_vertices]
};
ProfileTable profile_vector(const SimpleGraph& g, const std::vector<int>& s,
                            const Pattern& p, int r, const CountOptions& opts = {});

}  // namespace erco
