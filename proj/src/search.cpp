#include "erco/search.hpp"

#include <algorithm>
#include <memory>
#include <stdexcept>

#include "erco/graph6.hpp"
#include "erco/threading.hpp"

namespace erco {

std::vector<PartSizes> all_partitions(int n) {
    if (n < 1) throw std::invalid_argument("all_partitions: n >= 1 required");
    std::vector<PartSizes> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(PartSizes(cur));
            return;
        }
        for (int a = std::min(max_part, remaining); a >= 1; --a) {
            cur.push_back(a);
            self(self, remaining - a, a);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

namespace {

struct JobOutcome {
    RunStatus status = RunStatus::complete;
    BigCount count;
};

CountOptions per_count_options(const SearchOptions& opts) {
    CountOptions c;
    c.threads = 1;  // parallelism lives at the job level
    c.budget = opts.budget_per_count;
    return c;
}

}  // namespace

SearchReport search_multipartite(int n, const Pattern& p, int r, const SearchOptions& opts) {
    SearchReport rep;
    rep.n = n;
    rep.r = r;
    rep.pattern_code = p.code_hex();
    rep.mode = SearchMode::multipartite;
    auto partitions = all_partitions(n);
    std::vector<JobOutcome> outcomes(partitions.size());
    // the single-part-heavy partitions dwarf the rest, so the workers go
    // inside each count rather than across the handful of jobs
    CountOptions copts = per_count_options(opts);
    copts.threads = opts.threads;
    for (std::size_t job = 0; job < partitions.size(); ++job) {
        const PartSizes& parts = partitions[job];
        if (opts.cache) {
            auto hit = opts.cache->lookup(CountCache::parts_key(rep.pattern_code, r, parts));
            if (hit) {
                outcomes[job].count = std::move(*hit);
                continue;
            }
        }
        CountResult res = count_multipartite(parts, p, r, copts);
        outcomes[job].status = res.status;
        if (res.status == RunStatus::complete) {
            outcomes[job].count = res.count;
            if (opts.cache) opts.cache->store_parts(n, r, rep.pattern_code, parts, res.count);
        }
    }
    for (const auto& o : outcomes)
        if (o.status != RunStatus::complete) {
            rep.status = o.status;
            return rep;
        }
    rep.best_count = 0;
    for (std::size_t i = 0; i < partitions.size(); ++i)
        if (outcomes[i].count > rep.best_count) rep.best_count = outcomes[i].count;
    for (std::size_t i = 0; i < partitions.size(); ++i)
        if (outcomes[i].count == rep.best_count) rep.argmax_parts.push_back(partitions[i]);
    std::sort(rep.argmax_parts.begin(), rep.argmax_parts.end());
    return rep;
}

SearchReport search_all_graphs(int n, const Pattern& p, int r, const SearchOptions& opts) {
    if (n > 6) throw std::out_of_range("search_all_graphs: n > 6 exceeds the sweep budget");
    SearchReport rep;
    rep.n = n;
    rep.r = r;
    rep.pattern_code = p.code_hex();
    rep.mode = SearchMode::all_graphs;
    auto graphs = enumerate_graphs(n);
    std::vector<JobOutcome> outcomes(graphs.size());
    std::vector<std::string> codes(graphs.size());
    CountOptions copts = per_count_options(opts);
    parallel_for(static_cast<int>(graphs.size()), opts.threads, [&](int, int job) {
        codes[job] = graph_code(graphs[job]);
        if (opts.cache) {
            auto hit = opts.cache->lookup(CountCache::graph_key(rep.pattern_code, r, codes[job]));
            if (hit) {
                outcomes[job].count = std::move(*hit);
                return;
            }
        }
        CountResult res = count_colorings(graphs[job], p, r, copts);
        outcomes[job].status = res.status;
        if (res.status == RunStatus::complete) {
            outcomes[job].count = res.count;
            if (opts.cache) opts.cache->store_graph(n, r, rep.pattern_code, codes[job], res.count);
        }
    });
    for (const auto& o : outcomes)
        if (o.status != RunStatus::complete) {
            rep.status = o.status;
            return rep;
        }
    rep.best_count = 0;
    for (const auto& o : outcomes)
        if (o.count > rep.best_count) rep.best_count = o.count;
    for (std::size_t i = 0; i < graphs.size(); ++i)
        if (outcomes[i].count == rep.best_count) rep.argmax_graph6.push_back(codes[i]);
    std::sort(rep.argmax_graph6.begin(), rep.argmax_graph6.end());

    // every maximizer must recount to the same value under the other order
    CountOptions alt = copts;
    alt.order = EdgeOrder::clique_first_minlex;
    for (const auto& code : rep.argmax_graph6) {
        CountResult check = count_colorings(from_graph6(code), p, r, alt);
        if (check.status == RunStatus::complete && check.count != rep.best_count)
            throw std::logic_error("search_all_graphs: recount disagrees for " + code);
    }
    return rep;
}

TheoremVerdict verify_multipartite_theorems(int n, const Pattern& p, int r,
                                            const SearchOptions& opts) {
    TheoremVerdict v;
    v.all_graphs = search_all_graphs(n, p, r, opts);
    v.multipartite = search_multipartite(n, p, r, opts);
    if (v.all_graphs.status != RunStatus::complete || v.multipartite.status != RunStatus::complete)
        return v;
    v.counts_agree = v.all_graphs.best_count == v.multipartite.best_count;

    CountOptions recount = per_count_options(opts);
    recount.order = EdgeOrder::clique_first_minlex;
    bool some = false, all = true;
    for (const auto& code : v.all_graphs.argmax_graph6) {
        SimpleGraph g = from_graph6(code);
        if (g.is_complete_multipartite()) {
            some = true;
            continue;
        }
        CountResult res = count_colorings(g, p, r, recount);
        if (res.status == RunStatus::complete && res.count == v.all_graphs.best_count) {
            all = false;
            v.non_multipartite_maximizers.push_back(code);
        }
    }
    v.some_maximizer_multipartite = some;
    v.all_maximizers_multipartite = all;

    auto t0 = pattern_from_name("T0");
    auto p2 = pattern_from_name("P2");
    v.all_multipartite_expected =
        !p.is_monochromatic() && !(p == *t0) && !(r == 2 && p == *p2);
    return v;
}

}  // namespace erco
