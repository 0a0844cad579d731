#include "erco/counting.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "erco/graph6.hpp"
#include "erco/threading.hpp"

namespace erco {

namespace {

constexpr int kMaxPairs = 28;  // C(8,2)

// Fixed-order backtracking layout: positions are edges in search order, each
// k-clique is attached to its last edge so it is tested exactly once, when it
// becomes fully colored.
struct SearchPlan {
    int m = 0;
    int pairs = 0;
    std::vector<int> edge_at;  // position -> index into g.edges()
    struct Clique {
        std::vector<std::pair<int, int>> slots;  // (slot in pair order, position)
    };
    std::vector<Clique> cliques;
    std::vector<std::vector<int>> cliques_at;  // position -> clique ids
    std::vector<bool> tail_free;               // no cliques attached at >= position

    SearchPlan(const SimpleGraph& g, const Pattern& p, EdgeOrder order) {
        m = g.edge_count();
        pairs = num_pairs(p.k());
        auto kc = g.k_cliques(p.k());
        const auto& edges = g.edges();

        std::vector<char> covered(m, 0);
        for (const auto& vs : kc) {
            int k = static_cast<int>(vs.size());
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) covered[g.edge_index(vs[a], vs[b])] = 1;
        }
        edge_at.resize(m);
        std::iota(edge_at.begin(), edge_at.end(), 0);
        auto key = [&](int e) {
            auto [i, j] = edges[e];
            // clique-covered edges first; branch-free edges sink to the tail
            if (order == EdgeOrder::clique_first_maxlex) return std::tuple(covered[e] ? 0 : 1, j, i);
            return std::tuple(covered[e] ? 0 : 1, i, j);
        };
        std::sort(edge_at.begin(), edge_at.end(), [&](int a, int b) { return key(a) < key(b); });
        std::vector<int> pos_of(m);
        for (int pos = 0; pos < m; ++pos) pos_of[edge_at[pos]] = pos;

        cliques_at.resize(m);
        for (const auto& vs : kc) {
            Clique c;
            int k = static_cast<int>(vs.size());
            int last = -1, slot = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b, ++slot) {
                    int pos = pos_of[g.edge_index(vs[a], vs[b])];
                    c.slots.emplace_back(slot, pos);
                    last = std::max(last, pos);
                }
            cliques_at[last].push_back(static_cast<int>(cliques.size()));
            cliques.push_back(std::move(c));
        }
        tail_free.assign(m + 1, false);
        tail_free[m] = true;
        for (int pos = m - 1; pos >= 0; --pos) tail_free[pos] = tail_free[pos + 1] && cliques_at[pos].empty();
    }
};

std::vector<BigCount> r_powers(int r, int up_to) {
    std::vector<BigCount> pw(up_to + 1);
    pw[0] = 1;
    for (int i = 1; i <= up_to; ++i) pw[i] = pw[i - 1] * r;
    return pw;
}

// One worker's depth-first tally over a plan subtree.
struct CountWorker {
    const SearchPlan& plan;
    int r;
    const std::vector<BigCount>& rpow;
    CliqueMatcher matcher;
    NodeTicker ticker;
    std::vector<std::uint8_t> assign;
    std::array<std::uint8_t, kMaxPairs> scratch{};
    BigCount total = 0;
    bool ok = true;

    CountWorker(const SearchPlan& pl, const Pattern& p, int r_, const std::vector<BigCount>& pw,
                BudgetMeter& meter)
        : plan(pl), r(r_), rpow(pw), matcher(p), ticker(meter), assign(pl.m, 0) {}

    bool position_clean(int pos) {
        for (int cid : plan.cliques_at[pos]) {
            for (auto [slot, p2] : plan.cliques[cid].slots) scratch[slot] = assign[p2];
            if (matcher.matches({scratch.data(), static_cast<std::size_t>(plan.pairs)})) return false;
        }
        return true;
    }

    void dfs(int pos) {
        if (plan.tail_free[pos]) {
            total += rpow[plan.m - pos];
            return;
        }
        for (int c = 0; c < r; ++c) {
            if (!ticker.tick()) {
                ok = false;
                return;
            }
            assign[pos] = static_cast<std::uint8_t>(c);
            if (position_clean(pos)) {
                dfs(pos + 1);
                if (!ok) return;
            }
        }
    }

    // Fixes the first `depth` positions to the digits of `job` (most
    // significant digit = position 0), then explores below. Pruned prefixes
    // contribute nothing; the union over all r^depth jobs is the whole tree.
    void run_prefix_job(std::uint64_t job, int depth) {
        std::uint64_t rem = job;
        std::uint64_t scale = 1;
        for (int i = 1; i < depth; ++i) scale *= static_cast<std::uint64_t>(r);
        for (int pos = 0; pos < depth; ++pos) {
            int c = static_cast<int>(rem / scale);
            rem %= scale;
            if (scale > 1) scale /= static_cast<std::uint64_t>(r);
            if (!ticker.tick()) {
                ok = false;
                return;
            }
            assign[pos] = static_cast<std::uint8_t>(c);
            if (!position_clean(pos)) return;
        }
        dfs(depth);
    }
};

int choose_split_depth(int m, int r, int threads) {
    int depth = 0;
    std::uint64_t jobs = 1;
    while (depth < m && jobs < static_cast<std::uint64_t>(threads) * 8 && jobs * r <= (1u << 15)) {
        jobs *= static_cast<std::uint64_t>(r);
        ++depth;
    }
    return depth;
}

void validate_counting_args(int r) {
    if (r < 1 || r > 255) throw std::invalid_argument("color count must be in [1, 255]");
}

}  // namespace

CountResult count_colorings(const SimpleGraph& g, const Pattern& p, int r, const CountOptions& opts) {
    validate_counting_args(r);
    auto t0 = std::chrono::steady_clock::now();
    CountResult res;
    res.r = r;
    res.pattern_code = p.code_hex();
    res.graph_code = graph_code(g);
    int m = g.edge_count();
    auto rpow = r_powers(r, m);
    auto finish = [&](RunStatus st, BigCount value, std::uint64_t nodes) {
        res.status = st;
        res.count = st == RunStatus::complete ? std::move(value) : BigCount(0);
        res.nodes_visited = nodes;
        res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };
    // a pattern with more classes than colors cannot occur
    if (r < p.num_classes()) return finish(RunStatus::complete, rpow[m], 0);

    SearchPlan plan(g, p, opts.order);
    BudgetMeter meter(opts.budget);
    if (plan.tail_free[0]) return finish(RunStatus::complete, rpow[m], 0);

    if (opts.threads <= 1) {
        CountWorker w(plan, p, r, rpow, meter);
        w.dfs(0);
        w.ticker.flush();
        if (meter.tripped()) return finish(meter.status(), 0, meter.nodes());
        return finish(RunStatus::complete, std::move(w.total), meter.nodes());
    }

    int depth = choose_split_depth(m, r, opts.threads);
    std::uint64_t jobs = 1;
    for (int i = 0; i < depth; ++i) jobs *= static_cast<std::uint64_t>(r);
    std::vector<std::unique_ptr<CountWorker>> workers(opts.threads);
    parallel_for(static_cast<int>(jobs), opts.threads, [&](int wid, int job) {
        if (!workers[wid]) workers[wid] = std::make_unique<CountWorker>(plan, p, r, rpow, meter);
        if (meter.tripped()) return;
        workers[wid]->run_prefix_job(static_cast<std::uint64_t>(job), depth);
    });
    if (meter.tripped()) return finish(meter.status(), 0, meter.nodes());
    BigCount total = 0;
    for (auto& w : workers)
        if (w) total += w->total;
    return finish(RunStatus::complete, std::move(total), meter.nodes());
}

ExtensionCounter::ExtensionCounter(const SimpleGraph& h, std::vector<int> targets, const Pattern& p,
                                   int r)
    : k_(p.k()), r_(r), pairs_(num_pairs(p.k())), targets_(std::move(targets)) {
    validate_counting_args(r);
    std::sort(targets_.begin(), targets_.end());
    for (std::size_t i = 0; i < targets_.size(); ++i) {
        if (targets_[i] < 0 || targets_[i] >= h.n())
            throw std::invalid_argument("ExtensionCounter: target out of range");
        if (i > 0 && targets_[i] == targets_[i - 1])
            throw std::invalid_argument("ExtensionCounter: duplicate target");
    }
    int t = static_cast<int>(targets_.size());
    cliques_at_.resize(t);
    r_pows_ = r_powers(r, t);

    // every (k-1)-subset of the targets that is a clique of H closes a
    // k-clique with the new vertex, which plays the largest local label
    int need = k_ - 1;
    if (need <= t) {
        std::vector<int> comb(need);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == need) {
                for (int a = 0; a < need; ++a)
                    for (int b = a + 1; b < need; ++b)
                        if (!h.has_edge(targets_[comb[a]], targets_[comb[b]])) return;
                ExtClique c;
                int last = -1, slot = 0;
                for (int a = 0; a < k_; ++a)
                    for (int b = a + 1; b < k_; ++b, ++slot) {
                        if (b < k_ - 1) {
                            c.fixed_slots.emplace_back(slot, h.edge_index(targets_[comb[a]], targets_[comb[b]]));
                        } else {
                            c.var_slots.emplace_back(slot, comb[a]);
                            last = std::max(last, comb[a]);
                        }
                    }
                cliques_at_[last].push_back(static_cast<int>(cliques_.size()));
                cliques_.push_back(std::move(c));
                return;
            }
            for (int i = start; i <= t - (need - depth); ++i) {
                comb[depth] = i;
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }
    tail_free_.assign(t + 1, false);
    tail_free_[t] = true;
    for (int pos = t - 1; pos >= 0; --pos) tail_free_[pos] = tail_free_[pos + 1] && cliques_at_[pos].empty();
}

std::optional<BigCount> ExtensionCounter::count(std::span<const std::uint8_t> h_colors,
                                                CliqueMatcher& matcher, BudgetMeter& meter) const {
    int t = num_targets();
    NodeTicker ticker(meter);
    std::array<std::uint8_t, kMaxPairs> scratch{};
    std::vector<std::uint8_t> assign(t, 0);
    BigCount total = 0;
    bool ok = true;
    auto rec = [&](auto&& self, int pos) -> void {
        if (tail_free_[pos]) {
            total += r_pows_[t - pos];
            return;
        }
        for (int c = 0; c < r_; ++c) {
            if (!ticker.tick()) {
                ok = false;
                return;
            }
            assign[pos] = static_cast<std::uint8_t>(c);
            bool clean = true;
            for (int cid : cliques_at_[pos]) {
                const auto& cl = cliques_[cid];
                for (auto [slot, he] : cl.fixed_slots) scratch[slot] = h_colors[he];
                for (auto [slot, tp] : cl.var_slots) scratch[slot] = assign[tp];
                if (matcher.matches({scratch.data(), static_cast<std::size_t>(pairs_)})) {
                    clean = false;
                    break;
                }
            }
            if (clean) {
                self(self, pos + 1);
                if (!ok) return;
            }
        }
    };
    rec(rec, 0);
    ticker.flush();
    if (!ok || meter.tripped()) return std::nullopt;
    return total;
}

ExtensionResult count_extensions(const SimpleGraph& h, const EdgeColoring& h_colors,
                                 const std::vector<int>& targets, const Pattern& p, int r,
                                 const CountOptions& opts) {
    validate_counting_args(r);
    if (static_cast<int>(h_colors.size()) != h.edge_count())
        throw std::invalid_argument("count_extensions: coloring size mismatch");
    for (auto c : h_colors)
        if (c >= r) throw std::invalid_argument("count_extensions: color out of range");
    // reject base colorings that already contain the pattern
    CliqueMatcher matcher(p);
    std::array<std::uint8_t, kMaxPairs> scratch{};
    for (const auto& vs : h.k_cliques(p.k())) {
        int k = static_cast<int>(vs.size()), slot = 0;
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b, ++slot) scratch[slot] = h_colors[h.edge_index(vs[a], vs[b])];
        if (matcher.matches({scratch.data(), static_cast<std::size_t>(num_pairs(p.k()))}))
            throw std::invalid_argument("count_extensions: base coloring is not pattern-free");
    }
    ExtensionCounter counter(h, targets, p, r);
    BudgetMeter meter(opts.budget);
    ExtensionResult res;
    auto value = counter.count(h_colors, matcher, meter);
    if (!value) {
        res.status = meter.status();
        return res;
    }
    res.count = std::move(*value);
    return res;
}

namespace {

// Full-leaf enumeration worker: same pruning as CountWorker but visits every
// coloring of the branch-free tail as well, handing the caller total colorings
// in edge-list order.
struct EnumWorker {
    const SearchPlan& plan;
    int r;
    CliqueMatcher matcher;
    NodeTicker ticker;
    std::vector<std::uint8_t> assign;
    EdgeColoring by_edge;
    std::array<std::uint8_t, kMaxPairs> scratch{};
    bool ok = true;
    const std::function<bool(const EdgeColoring&)>& leaf;  // false aborts

    EnumWorker(const SearchPlan& pl, const Pattern& p, int r_, BudgetMeter& meter,
               const std::function<bool(const EdgeColoring&)>& fn)
        : plan(pl), r(r_), matcher(p), ticker(meter), assign(pl.m, 0), by_edge(pl.m, 0), leaf(fn) {}

    bool position_clean(int pos) {
        for (int cid : plan.cliques_at[pos]) {
            for (auto [slot, p2] : plan.cliques[cid].slots) scratch[slot] = assign[p2];
            if (matcher.matches({scratch.data(), static_cast<std::size_t>(plan.pairs)})) return false;
        }
        return true;
    }

    void dfs(int pos) {
        if (pos == plan.m) {
            if (!leaf(by_edge)) ok = false;
            return;
        }
        for (int c = 0; c < r; ++c) {
            if (!ticker.tick()) {
                ok = false;
                return;
            }
            assign[pos] = static_cast<std::uint8_t>(c);
            by_edge[plan.edge_at[pos]] = static_cast<std::uint8_t>(c);
            if (position_clean(pos)) {
                dfs(pos + 1);
                if (!ok) return;
            }
        }
    }

    void run_prefix_job(std::uint64_t job, int depth) {
        std::uint64_t scale = 1;
        for (int i = 1; i < depth; ++i) scale *= static_cast<std::uint64_t>(r);
        std::uint64_t rem = job;
        for (int pos = 0; pos < depth; ++pos) {
            int c = static_cast<int>(rem / scale);
            rem %= scale;
            if (scale > 1) scale /= static_cast<std::uint64_t>(r);
            if (!ticker.tick()) {
                ok = false;
                return;
            }
            assign[pos] = static_cast<std::uint8_t>(c);
            by_edge[plan.edge_at[pos]] = static_cast<std::uint8_t>(c);
            if (!position_clean(pos)) return;
        }
        dfs(depth);
    }
};

}  // namespace

RunStatus enumerate_good_colorings(const SimpleGraph& g, const Pattern& p, int r,
                                   const Budget& budget,
                                   const std::function<void(const EdgeColoring&)>& fn) {
    BudgetMeter meter(budget);
    enumerate_good_colorings(g, p, r, meter, [&](const EdgeColoring& c) {
        fn(c);
        return true;
    });
    return meter.status();
}

bool enumerate_good_colorings(const SimpleGraph& g, const Pattern& p, int r, BudgetMeter& meter,
                              const std::function<bool(const EdgeColoring&)>& fn) {
    validate_counting_args(r);
    SearchPlan plan(g, p, EdgeOrder::clique_first_maxlex);
    EnumWorker w(plan, p, r, meter, fn);
    w.dfs(0);
    w.ticker.flush();
    return w.ok && !meter.tripped();
}

CountResult count_multipartite(const PartSizes& parts, const Pattern& p, int r,
                               const CountOptions& opts) {
    validate_counting_args(r);
    auto t0 = std::chrono::steady_clock::now();
    SimpleGraph g = complete_multipartite(parts);
    CountResult res;
    res.r = r;
    res.pattern_code = p.code_hex();
    res.graph_code = graph_code(g);
    auto finish = [&](RunStatus st, BigCount value, std::uint64_t nodes) {
        res.status = st;
        res.count = st == RunStatus::complete ? std::move(value) : BigCount(0);
        res.nodes_visited = nodes;
        res.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return res;
    };
    if (r < p.num_classes()) return finish(RunStatus::complete, int_pow(r, g.edge_count()), 0);

    // peel the largest part: its s vertices are pairwise twins adjacent to all
    // of H, so each good coloring of H contributes c(v, H^)^s
    unsigned s = static_cast<unsigned>(parts.sizes.front());
    SimpleGraph h(0);
    if (parts.sizes.size() > 1)
        h = complete_multipartite(PartSizes(std::vector<int>(parts.sizes.begin() + 1, parts.sizes.end())));
    std::vector<int> all_h(h.n());
    std::iota(all_h.begin(), all_h.end(), 0);
    ExtensionCounter counter(h, all_h, p, r);

    SearchPlan plan(h, p, opts.order);
    BudgetMeter meter(opts.budget);

    struct Acc {
        BigCount total = 0;
        CliqueMatcher matcher;
        explicit Acc(const Pattern& pat) : matcher(pat) {}
    };
    auto leaf_for = [&](Acc& acc) {
        return std::function<bool(const EdgeColoring&)>(
            [&acc, &counter, &meter, s](const EdgeColoring& colors) {
                auto v = counter.count(colors, acc.matcher, meter);
                if (!v) return false;
                acc.total += big_pow(*v, s);
                return true;
            });
    };

    if (opts.threads <= 1 || h.edge_count() == 0) {
        Acc acc(p);
        auto leaf = leaf_for(acc);
        EnumWorker w(plan, p, r, meter, leaf);
        w.dfs(0);
        w.ticker.flush();
        if (meter.tripped()) return finish(meter.status(), 0, meter.nodes());
        return finish(RunStatus::complete, std::move(acc.total), meter.nodes());
    }

    int depth = choose_split_depth(h.edge_count(), r, opts.threads);
    std::uint64_t jobs = 1;
    for (int i = 0; i < depth; ++i) jobs *= static_cast<std::uint64_t>(r);
    std::vector<std::unique_ptr<Acc>> accs(opts.threads);
    std::vector<std::function<bool(const EdgeColoring&)>> leaves(opts.threads);
    std::vector<std::unique_ptr<EnumWorker>> workers(opts.threads);
    parallel_for(static_cast<int>(jobs), opts.threads, [&](int wid, int job) {
        if (!workers[wid]) {
            accs[wid] = std::make_unique<Acc>(p);
            leaves[wid] = leaf_for(*accs[wid]);
            workers[wid] = std::make_unique<EnumWorker>(plan, p, r, meter, leaves[wid]);
        }
        if (meter.tripped()) return;
        workers[wid]->run_prefix_job(static_cast<std::uint64_t>(job), depth);
    });
    if (meter.tripped()) return finish(meter.status(), 0, meter.nodes());
    BigCount total = 0;
    for (auto& a : accs)
        if (a) total += a->total;
    return finish(RunStatus::complete, std::move(total), meter.nodes());
}

ProfileTable profile_vector(const SimpleGraph& g, const std::vector<int>& s, const Pattern& p,
                            int r, const CountOptions& opts) {
    validate_counting_args(r);
    ProfileTable table;
    table.s_vertices = s;
    std::sort(table.s_vertices.begin(), table.s_vertices.end());
    if (table.s_vertices.empty()) throw std::invalid_argument("profile_vector: S is empty");
    for (std::size_t i = 1; i < table.s_vertices.size(); ++i)
        if (table.s_vertices[i] == table.s_vertices[i - 1])
            throw std::invalid_argument("profile_vector: duplicate vertex in S");
    for (int v : table.s_vertices)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("profile_vector: vertex out of range");
    if (!g.is_independent_set(table.s_vertices))
        throw std::invalid_argument("profile_vector: S is not independent");

    std::vector<int> keep, h_label(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (!std::binary_search(table.s_vertices.begin(), table.s_vertices.end(), v)) {
            h_label[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    table.h = g.induced(keep);

    std::vector<ExtensionCounter> counters;
    counters.reserve(table.s_vertices.size());
    for (int u : table.s_vertices) {
        std::vector<int> targets;
        for (int w : keep)
            if (g.has_edge(u, w)) targets.push_back(h_label[w]);
        counters.emplace_back(table.h, std::move(targets), p, r);
    }

    BudgetMeter meter(opts.budget);
    CliqueMatcher matcher(p);
    bool aborted = false;
    SearchPlan plan(table.h, p, EdgeOrder::clique_first_maxlex);
    std::function<bool(const EdgeColoring&)> leaf = [&](const EdgeColoring& colors) {
        std::vector<BigCount> row;
        row.reserve(counters.size());
        for (const auto& c : counters) {
            auto v = c.count(colors, matcher, meter);
            if (!v) {
                aborted = true;
                return false;
            }
            row.push_back(std::move(*v));
        }
        table.colorings.push_back(colors);
        table.ext_counts.push_back(std::move(row));
        return true;
    };
    EnumWorker w(plan, p, r, meter, leaf);
    w.dfs(0);
    w.ticker.flush();
    table.status = aborted || meter.tripped() ? meter.status() : RunStatus::complete;
    return table;
}

}  // namespace erco
