#include "erco/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "erco/graph6.hpp"

namespace erco {

static constexpr int kMaxVertices = 62;

PartSizes::PartSizes(std::vector<int> s) : sizes(std::move(s)) {
    if (sizes.empty()) throw std::invalid_argument("PartSizes: empty");
    for (int x : sizes)
        if (x < 1) throw std::invalid_argument("PartSizes: parts must be positive");
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
}

int PartSizes::n() const { return std::accumulate(sizes.begin(), sizes.end(), 0); }

std::string PartSizes::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (i) os << ',';
        os << sizes[i];
    }
    return os.str();
}

PartSizes PartSizes::parse(const std::string& text) {
    std::vector<int> out;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument("PartSizes: bad token '" + tok + "'");
        out.push_back(v);
    }
    return PartSizes(out);
}

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(n, 0), edge_index_(n * n, -1) {
    if (n < 0 || n > kMaxVertices) throw std::invalid_argument("SimpleGraph: vertex count out of range");
}

SimpleGraph::SimpleGraph(int n, const std::vector<std::pair<int, int>>& edge_list) : SimpleGraph(n) {
    for (auto [u, v] : edge_list) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("SimpleGraph: vertex out of range");
        if (u == v) throw std::invalid_argument("SimpleGraph: self-loop");
        adj_[u] |= 1ULL << v;
        adj_[v] |= 1ULL << u;
    }
    rebuild_edges();
}

void SimpleGraph::rebuild_edges() {
    edges_.clear();
    edge_index_.assign(n_ * n_, -1);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if ((adj_[i] >> j) & 1) {
                edge_index_[i * n_ + j] = edge_index_[j * n_ + i] = static_cast<int>(edges_.size());
                edges_.emplace_back(i, j);
            }
}

int SimpleGraph::degree(int u) const { return std::popcount(adj_[u]); }

int SimpleGraph::edge_index(int u, int v) const {
    if (u == v) return -1;
    return edge_index_[u * n_ + v];
}

SimpleGraph SimpleGraph::without_edge(int u, int v) const {
    if (!has_edge(u, v)) throw std::invalid_argument("without_edge: not an edge");
    SimpleGraph g(*this);
    g.adj_[u] &= ~(1ULL << v);
    g.adj_[v] &= ~(1ULL << u);
    g.rebuild_edges();
    return g;
}

SimpleGraph SimpleGraph::without_vertex(int v) const {
    std::vector<int> keep;
    keep.reserve(n_ - 1);
    for (int i = 0; i < n_; ++i)
        if (i != v) keep.push_back(i);
    return induced(keep);
}

SimpleGraph SimpleGraph::with_twin_of(int u) const {
    SimpleGraph g(n_ + 1);
    for (int i = 0; i < n_; ++i) g.adj_[i] = adj_[i];
    g.adj_[n_] = adj_[u];
    std::uint64_t bit = 1ULL << n_;
    for (int i = 0; i < n_; ++i)
        if ((adj_[u] >> i) & 1) g.adj_[i] |= bit;
    g.rebuild_edges();
    return g;
}

SimpleGraph SimpleGraph::induced(const std::vector<int>& keep) const {
    SimpleGraph g(static_cast<int>(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
        for (std::size_t b = a + 1; b < keep.size(); ++b)
            if (has_edge(keep[a], keep[b])) {
                g.adj_[a] |= 1ULL << b;
                g.adj_[b] |= 1ULL << a;
            }
    g.rebuild_edges();
    return g;
}

SimpleGraph SimpleGraph::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabeled: bad permutation");
    SimpleGraph g(n_);
    for (auto [u, v] : edges_) {
        int a = perm[u], b = perm[v];
        g.adj_[a] |= 1ULL << b;
        g.adj_[b] |= 1ULL << a;
    }
    g.rebuild_edges();
    return g;
}

std::vector<std::vector<int>> SimpleGraph::k_cliques(int k) const {
    std::vector<std::vector<int>> out;
    if (k < 1) return out;
    std::vector<int> cur;
    std::uint64_t all = n_ >= 64 ? ~0ULL : ((1ULL << n_) - 1);
    // extend by vertices above the last chosen one, intersecting neighborhoods
    auto rec = [&](auto&& self, int start, std::uint64_t cand) -> void {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n_; ++v) {
            if (!((cand >> v) & 1)) continue;
            cur.push_back(v);
            self(self, v + 1, cand & adj_[v]);
            cur.pop_back();
        }
    };
    rec(rec, 0, all);
    return out;
}

bool SimpleGraph::is_independent_set(const std::vector<int>& vs) const {
    for (std::size_t a = 0; a < vs.size(); ++a)
        for (std::size_t b = a + 1; b < vs.size(); ++b)
            if (has_edge(vs[a], vs[b])) return false;
    return true;
}

bool SimpleGraph::is_complete_multipartite(PartSizes* parts) const {
    if (n_ == 0) return false;
    // complete multipartite <=> adjacency is exactly "different neighborhood"
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            bool same = adj_[u] == adj_[v];
            if (same == has_edge(u, v)) return false;
        }
    if (parts) {
        std::map<std::uint64_t, int> groups;
        for (int u = 0; u < n_; ++u) ++groups[adj_[u]];
        std::vector<int> sizes;
        for (auto& [mask, cnt] : groups) sizes.push_back(cnt);
        *parts = PartSizes(sizes);
    }
    return true;
}

SimpleGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return SimpleGraph(n, es);
}

SimpleGraph complete_multipartite(const PartSizes& parts) {
    int n = parts.n();
    std::vector<int> part_of(n);
    int at = 0, pid = 0;
    for (int s : parts.sizes) {
        for (int i = 0; i < s; ++i) part_of[at++] = pid;
        ++pid;
    }
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) es.emplace_back(i, j);
    return SimpleGraph(n, es);
}

SimpleGraph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return SimpleGraph(n, es);
}

SimpleGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n >= 3 required");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    es.emplace_back(0, n - 1);
    return SimpleGraph(n, es);
}

static PartSizes balanced_parts(int n, int parts) {
    std::vector<int> sizes(parts);
    for (int i = 0; i < parts; ++i) sizes[i] = n / parts + (i < n % parts ? 1 : 0);
    std::erase(sizes, 0);
    return PartSizes(sizes);
}

SimpleGraph turan_graph(int n, int k) {
    if (k < 2) throw std::invalid_argument("turan_graph: k >= 2 required");
    if (n < 1) throw std::invalid_argument("turan_graph: n >= 1 required");
    return complete_multipartite(balanced_parts(n, std::min(n, k - 1)));
}

long long turan_number(int n, int k) {
    if (k < 2) throw std::invalid_argument("turan_number: k >= 2 required");
    if (n < 1) return 0;
    auto parts = balanced_parts(n, std::min(n, k - 1));
    long long sq = 0;
    for (int s : parts.sizes) sq += 1LL * s * s;
    return (1LL * n * n - sq) / 2;
}

// Adjacency flattened to bits in lex pair order (first pair most significant)
// and minimized over all n! relabelings. 8! * 28 stays tiny, so no labeling
// heuristics are needed.
std::uint64_t canonical_bits(const SimpleGraph& g) {
    int n = g.n();
    if (n > 8) throw std::out_of_range("canonical_bits: n > 8 exceeds the permutation sweep budget");
    int np = n * (n - 1) / 2;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        std::uint64_t bits = 0;
        int t = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++t)
                if (g.has_edge(perm[i], perm[j])) bits |= 1ULL << (np - 1 - t);
        best = std::min(best, bits);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

static SimpleGraph graph_from_bits(int n, std::uint64_t bits) {
    int np = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> es;
    int t = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++t)
            if ((bits >> (np - 1 - t)) & 1) es.emplace_back(i, j);
    return SimpleGraph(n, es);
}

SimpleGraph canonical_graph(const SimpleGraph& g) { return graph_from_bits(g.n(), canonical_bits(g)); }

std::string graph_code(const SimpleGraph& g) {
    if (g.n() <= 8) return to_graph6(canonical_graph(g));
    return to_graph6(g);
}

std::vector<SimpleGraph> enumerate_graphs(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n >= 1 required");
    if (n > 7) throw std::out_of_range("enumerate_graphs: n > 7 exceeds the enumeration budget");
    // grow one vertex at a time: every class on m vertices extends some class
    // on m-1 vertices, so canonicalized extensions cover everything
    std::vector<std::uint64_t> reps = {0};  // n = 1
    for (int m = 2; m <= n; ++m) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t bits : reps) {
            SimpleGraph base = graph_from_bits(m - 1, bits);
            for (std::uint64_t nb = 0; nb < (1ULL << (m - 1)); ++nb) {
                SimpleGraph ext(m);
                std::vector<std::pair<int, int>> es = base.edges();
                for (int v = 0; v < m - 1; ++v)
                    if ((nb >> v) & 1) es.emplace_back(v, m - 1);
                next.push_back(canonical_bits(SimpleGraph(m, es)));
            }
        }
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        reps = std::move(next);
    }
    std::vector<SimpleGraph> out;
    out.reserve(reps.size());
    for (std::uint64_t bits : reps) out.push_back(graph_from_bits(n, bits));
    return out;
}

PartSizeBoundReport part_size_bound_check(const PartSizes& parts, int k, long long m) {
    PartSizeBoundReport rep;
    if (k < 3) throw std::invalid_argument("part_size_bound_check: k >= 3 required");
    int t = parts.n();
    long long km1 = k - 1;
    std::ostringstream detail;
    if (static_cast<long long>(parts.sizes.size()) > km1) {
        rep.detail = "more than k-1 parts";
        return rep;
    }
    if (m < km1 * km1) {
        rep.detail = "m below (k-1)^2";
        return rep;
    }
    long long sq = 0;
    for (int s : parts.sizes) sq += 1LL * s * s;
    long long edges = (1LL * t * t - sq) / 2;
    long long needed = turan_number(t, k) - m;
    if (edges < needed) {
        rep.detail = "edge count below ex(t,K_k) - m";
        return rep;
    }
    rep.applicable = true;
    rep.holds = true;
    // |s - t/(k-1)| <= sqrt(2(k-2)m/(k-1) + 2(k-2)), squared and scaled by
    // (k-1)^2 to stay in integers
    long long rhs = 2 * (k - 2) * km1 * m + 2 * (k - 2) * km1 * km1;
    auto check = [&](long long size) {
        long long dev = size * km1 - t;
        if (dev * dev > rhs) {
            rep.holds = false;
            detail << "part of size " << size << " deviates too much; ";
        }
    };
    for (int s : parts.sizes) check(s);
    for (std::size_t i = parts.sizes.size(); i < static_cast<std::size_t>(km1); ++i) check(0);
    rep.detail = detail.str();
    return rep;
}

}  // namespace erco
