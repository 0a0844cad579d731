#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace erco {

// Descending-sorted part sizes of a complete multipartite graph.
struct PartSizes {
    std::vector<int> sizes;

    PartSizes() = default;
    explicit PartSizes(std::vector<int> s);

    int n() const;
    std::string to_string() const;              // "3,2,1"
    static PartSizes parse(const std::string&); // inverse of to_string

    auto operator<=>(const PartSizes&) const = default;
};

// Undirected labeled simple graph, immutable after construction.
// Vertex count is capped at 62 (single-byte graph6 range; desk scale).
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int n() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const { return u != v && (adj_[u] >> v) & 1; }
    std::uint64_t neighbor_mask(int u) const { return adj_[u]; }
    int degree(int u) const;
    int edge_index(int u, int v) const;  // position in edges(), -1 if absent

    // Derived graphs (value semantics; labels are remapped deterministically).
    SimpleGraph without_edge(int u, int v) const;
    SimpleGraph without_vertex(int v) const;       // labels > v shift down
    SimpleGraph with_twin_of(int u) const;         // twin appended as label n
    SimpleGraph induced(const std::vector<int>& keep) const;
    SimpleGraph relabeled(const std::vector<int>& perm) const;  // new label of i is perm[i]

    std::vector<std::vector<int>> k_cliques(int k) const;  // sorted vertex lists
    bool is_independent_set(const std::vector<int>& vs) const;
    bool is_complete_multipartite(PartSizes* parts = nullptr) const;

    bool operator==(const SimpleGraph&) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> adj_;
    std::vector<std::pair<int, int>> edges_;  // lexicographic (i, j), i < j
    std::vector<int> edge_index_;             // n*n lookup table

    void rebuild_edges();
};

// Constructors for the graph families used throughout.
SimpleGraph complete_graph(int n);
SimpleGraph complete_multipartite(const PartSizes& parts);  // blocks largest first
SimpleGraph path_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph turan_graph(int n, int k);  // T_{k-1}(n), k >= 2
long long turan_number(int n, int k);   // ex(n, K_k)

// Exhaustive canonical form by permutation minimization (n <= 8).
std::uint64_t canonical_bits(const SimpleGraph& g);
SimpleGraph canonical_graph(const SimpleGraph& g);
// Canonical graph6 for n <= 8, literal graph6 for larger graphs.
std::string graph_code(const SimpleGraph& g);

// One representative per isomorphism class; counts 1,2,4,11,34,156,1044 for
// n = 1..7. Guarded at n <= 7.
std::vector<SimpleGraph> enumerate_graphs(int n);

// Part-size balance bound for near-extremal (k-1)-partite graphs.
struct PartSizeBoundReport {
    bool applicable = false;  // precondition of the bound holds
    bool holds = false;       // every part within the allowed deviation
    std::string detail;
};
PartSizeBoundReport part_size_bound_check(const PartSizes& parts, int k, long long m);

}  // namespace erco
