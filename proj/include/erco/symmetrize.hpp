#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "erco/counting.hpp"

namespace erco {

// Replace an independent set S by |S| twins of its best member (the one with
// the largest profile-vector s-norm, ties to the lowest label). The returned
// counts are recomputed directly on both graphs; the new count never drops.
struct ReplaceReport {
    RunStatus status = RunStatus::complete;
    SimpleGraph result;
    int chosen = -1;  // label in G
    BigCount count_before, count_after;
    std::vector<BigCount> norms;  // ||u||_s^s per member of sorted S
};
ReplaceReport replace_independent_set(const SimpleGraph& g, const std::vector<int>& s,
                                      const Pattern& p, int r, const CountOptions& opts = {});

// Delete v and add a twin of u (u, v non-adjacent). Reports both counts; they
// agree when G is extremal, and may differ either way otherwise.
struct CloneReport {
    RunStatus status = RunStatus::complete;
    SimpleGraph result;
    BigCount count_before, count_after;
};
CloneReport clone_step(const SimpleGraph& g, int u, int v, const Pattern& p, int r,
                       const CountOptions& opts = {});

// Remove edge vw given a witness u with uv, uw both absent. Reports both
// counts; equality is guaranteed only for extremal G.
struct EdgeDeletionReport {
    RunStatus status = RunStatus::complete;
    SimpleGraph result;
    BigCount count_before, count_after;
};
EdgeDeletionReport edge_deletion_step(const SimpleGraph& g, int u, int v, int w,
                                      const Pattern& p, int r, const CountOptions& opts = {});
// First (u, v, w) with uv, uw non-edges and vw an edge, if any.
std::optional<std::array<int, 3>> find_edge_deletion_config(const SimpleGraph& g);

// One clone step of the symmetrization walk. Counts are exact: "before" is
// the current graph's count, "after" the count once the pair {center, removed}
// has been merged into twins of the winner.
struct SymStep {
    int center = -1;
    int removed = -1;
    bool kept_center = true;  // false when the pair's norms forced a swap
    BigCount count_before, count_after;
};

struct SymmetrizationTrace {
    RunStatus status = RunStatus::complete;
    std::vector<SymStep> steps;
    SimpleGraph final_graph;
    PartSizes final_parts;  // valid when the final graph is complete multipartite
    BigCount initial_count, final_count;
};

// Repeatedly merges non-adjacent non-twin pairs into twins until the graph is
// complete multipartite. Centers are picked by maximum degree; each merge
// keeps the member with the larger pairwise profile norm, so the count is
// non-decreasing along the whole trace for every input graph.
SymmetrizationTrace symmetrize(const SimpleGraph& g, const Pattern& p, int r,
                               const CountOptions& opts = {});

std::string trace_to_json(const SymmetrizationTrace& t);

// Exact check of ||prod x_k||_1^s <= prod ||x_k||_s^s for nonnegative integer
// vectors, everything raised to the s-th power so no roots are taken.
// equality_condition is the proportionality criterion x_i(t)^s * ||x_j||_s^s
// == x_j(t)^s * ||x_i||_s^s for all i, j, t.
struct HolderReport {
    BigCount lhs, rhs;
    bool inequality_holds = false;
    bool equality_condition = false;
};
HolderReport holder_check(const std::vector<std::vector<BigCount>>& vectors);

}  // namespace erco
