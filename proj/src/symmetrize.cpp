#include "erco/symmetrize.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <numeric>
#include <stdexcept>

#include "erco/graph6.hpp"

namespace erco {

namespace {

// Streamed profile sums for a non-adjacent pair over H = G - {a, b}:
// cross = sum c(a,H^)c(b,H^) (the count of G), norm_* = sum of squares.
struct PairProfile {
    bool complete = false;
    BigCount cross, norm_a, norm_b;
};

PairProfile pair_profile(const SimpleGraph& g, int a, int b, const Pattern& p, int r,
                         BudgetMeter& meter) {
    std::vector<int> keep, h_label(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (v != a && v != b) {
            h_label[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    SimpleGraph h = g.induced(keep);
    auto targets_of = [&](int u) {
        std::vector<int> t;
        for (int w : keep)
            if (g.has_edge(u, w)) t.push_back(h_label[w]);
        return t;
    };
    ExtensionCounter ca(h, targets_of(a), p, r), cb(h, targets_of(b), p, r);
    CliqueMatcher matcher(p);
    PairProfile out;
    out.cross = out.norm_a = out.norm_b = 0;
    bool ok = enumerate_good_colorings(h, p, r, meter, [&](const EdgeColoring& colors) {
        auto va = ca.count(colors, matcher, meter);
        if (!va) return false;
        auto vb = cb.count(colors, matcher, meter);
        if (!vb) return false;
        out.cross += *va * *vb;
        out.norm_a += *va * *va;
        out.norm_b += *vb * *vb;
        return true;
    });
    out.complete = ok;
    return out;
}

bool are_twins(const SimpleGraph& g, int a, int b) {
    return !g.has_edge(a, b) && g.neighbor_mask(a) == g.neighbor_mask(b);
}

}  // namespace

ReplaceReport replace_independent_set(const SimpleGraph& g, const std::vector<int>& s,
                                      const Pattern& p, int r, const CountOptions& opts) {
    ReplaceReport rep;
    std::vector<int> members = s;
    std::sort(members.begin(), members.end());
    unsigned size_s = static_cast<unsigned>(members.size());
    if (size_s == 0) throw std::invalid_argument("replace_independent_set: S is empty");
    if (!g.is_independent_set(members))
        throw std::invalid_argument("replace_independent_set: S is not independent");

    std::vector<int> keep, h_label(g.n(), -1);
    for (int v = 0; v < g.n(); ++v)
        if (!std::binary_search(members.begin(), members.end(), v)) {
            h_label[v] = static_cast<int>(keep.size());
            keep.push_back(v);
        }
    SimpleGraph h = g.induced(keep);

    std::vector<ExtensionCounter> counters;
    std::vector<std::vector<int>> targets;
    for (int u : members) {
        std::vector<int> t;
        for (int w : keep)
            if (g.has_edge(u, w)) t.push_back(h_label[w]);
        targets.push_back(t);
        counters.emplace_back(h, t, p, r);
    }

    BudgetMeter meter(opts.budget);
    CliqueMatcher matcher(p);
    rep.norms.assign(size_s, BigCount(0));
    bool ok = enumerate_good_colorings(h, p, r, meter, [&](const EdgeColoring& colors) {
        for (unsigned i = 0; i < size_s; ++i) {
            auto v = counters[i].count(colors, matcher, meter);
            if (!v) return false;
            rep.norms[i] += big_pow(*v, size_s);
        }
        return true;
    });
    if (!ok) {
        rep.status = meter.status();
        return rep;
    }

    // largest s-norm wins; ties go to the lowest label
    unsigned best = 0;
    for (unsigned i = 1; i < size_s; ++i)
        if (rep.norms[i] > rep.norms[best]) best = i;
    rep.chosen = members[best];

    std::vector<std::pair<int, int>> es = h.edges();
    int hn = h.n();
    for (unsigned c = 0; c < size_s; ++c)
        for (int t : targets[best]) es.emplace_back(t, hn + static_cast<int>(c));
    rep.result = SimpleGraph(hn + static_cast<int>(size_s), es);

    CountResult before = count_colorings(g, p, r, opts);
    CountResult after = count_colorings(rep.result, p, r, opts);
    if (before.status != RunStatus::complete || after.status != RunStatus::complete) {
        rep.status = before.status != RunStatus::complete ? before.status : after.status;
        return rep;
    }
    rep.count_before = before.count;
    rep.count_after = after.count;
    if (rep.count_after < rep.count_before)
        throw std::logic_error("replace_independent_set: count decreased");
    return rep;
}

CloneReport clone_step(const SimpleGraph& g, int u, int v, const Pattern& p, int r,
                       const CountOptions& opts) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v)
        throw std::invalid_argument("clone_step: bad vertex pair");
    if (g.has_edge(u, v)) throw std::invalid_argument("clone_step: u and v are adjacent");
    CloneReport rep;
    int u_shifted = u > v ? u - 1 : u;
    rep.result = g.without_vertex(v).with_twin_of(u_shifted);
    CountResult before = count_colorings(g, p, r, opts);
    CountResult after = count_colorings(rep.result, p, r, opts);
    if (before.status != RunStatus::complete || after.status != RunStatus::complete) {
        rep.status = before.status != RunStatus::complete ? before.status : after.status;
        return rep;
    }
    rep.count_before = before.count;
    rep.count_after = after.count;
    return rep;
}

EdgeDeletionReport edge_deletion_step(const SimpleGraph& g, int u, int v, int w, const Pattern& p,
                                      int r, const CountOptions& opts) {
    if (u == v || u == w || v == w) throw std::invalid_argument("edge_deletion_step: vertices not distinct");
    if (g.has_edge(u, v) || g.has_edge(u, w) || !g.has_edge(v, w))
        throw std::invalid_argument("edge_deletion_step: configuration not present");
    EdgeDeletionReport rep;
    rep.result = g.without_edge(v, w);
    CountResult before = count_colorings(g, p, r, opts);
    CountResult after = count_colorings(rep.result, p, r, opts);
    if (before.status != RunStatus::complete || after.status != RunStatus::complete) {
        rep.status = before.status != RunStatus::complete ? before.status : after.status;
        return rep;
    }
    rep.count_before = before.count;
    rep.count_after = after.count;
    return rep;
}

std::optional<std::array<int, 3>> find_edge_deletion_config(const SimpleGraph& g) {
    for (int u = 0; u < g.n(); ++u)
        for (auto [v, w] : g.edges())
            if (u != v && u != w && !g.has_edge(u, v) && !g.has_edge(u, w))
                return std::array<int, 3>{u, v, w};
    return std::nullopt;
}

SymmetrizationTrace symmetrize(const SimpleGraph& g, const Pattern& p, int r,
                               const CountOptions& opts) {
    SymmetrizationTrace trace;
    SimpleGraph cur = g;
    BudgetMeter meter(opts.budget);

    // every non-adjacent non-twin pair gets merged into twins of whichever
    // member has the larger pairwise norm; ties keep the center, and extremal
    // inputs always tie. Each merge is count-non-decreasing and flips strictly
    // increase the count, which bounds the walk.
    int guard = 10000;
    while (guard-- > 0) {
        int center = -1;
        for (int v = 0; v < cur.n(); ++v) {
            bool has_work = false;
            for (int x = 0; x < cur.n() && !has_work; ++x)
                if (x != v && !cur.has_edge(v, x) && !are_twins(cur, v, x)) has_work = true;
            if (!has_work) continue;
            if (center < 0 || cur.degree(v) > cur.degree(center)) center = v;
        }
        if (center < 0) break;  // complete multipartite

        bool flipped = false;
        for (int x = 0; x < cur.n() && !flipped; ++x) {
            if (x == center || cur.has_edge(center, x) || are_twins(cur, center, x)) continue;
            PairProfile prof = pair_profile(cur, center, x, p, r, meter);
            if (!prof.complete) {
                trace.status = meter.status();
                trace.final_graph = cur;
                return trace;
            }
            bool keep_center = prof.norm_a >= prof.norm_b;
            SymStep step;
            step.center = center;
            step.removed = x;
            step.kept_center = keep_center;
            step.count_before = prof.cross;
            step.count_after = keep_center ? prof.norm_a : prof.norm_b;
            int winner = keep_center ? center : x;
            int loser = keep_center ? x : center;
            int winner_shifted = winner > loser ? winner - 1 : winner;
            cur = cur.without_vertex(loser).with_twin_of(winner_shifted);
            trace.steps.push_back(std::move(step));
            if (!keep_center) {
                flipped = true;  // center gone; reselect from scratch
            } else if (x < center) {
                --center;  // labels above the removed vertex shifted down
            }
            x = -1;  // restart scan against the rewritten graph
            if (flipped) break;
        }
    }
    if (guard <= 0) {
        trace.status = RunStatus::node_budget_exceeded;
        trace.final_graph = cur;
        return trace;
    }

    trace.final_graph = cur;
    PartSizes parts;
    if (!cur.is_complete_multipartite(&parts))
        throw std::logic_error("symmetrize: terminal graph is not complete multipartite");
    trace.final_parts = parts;
    if (trace.steps.empty()) {
        CountResult c = count_colorings(g, p, r, opts);
        if (c.status != RunStatus::complete) {
            trace.status = c.status;
            return trace;
        }
        trace.initial_count = c.count;
        trace.final_count = c.count;
    } else {
        trace.initial_count = trace.steps.front().count_before;
        trace.final_count = trace.steps.back().count_after;
    }
    return trace;
}

std::string trace_to_json(const SymmetrizationTrace& t) {
    nlohmann::json j;
    j["status"] = to_string(t.status);
    j["initial_count"] = to_decimal(t.initial_count);
    j["final_count"] = to_decimal(t.final_count);
    j["final_graph6"] = t.final_graph.n() > 0 ? to_graph6(t.final_graph) : "";
    if (t.status == RunStatus::complete) j["final_parts"] = t.final_parts.to_string();
    j["steps"] = nlohmann::json::array();
    for (const auto& s : t.steps) {
        nlohmann::json js;
        js["op"] = "clone";
        js["center"] = s.center;
        js["removed"] = s.removed;
        js["kept_center"] = s.kept_center;
        js["count_before"] = to_decimal(s.count_before);
        js["count_after"] = to_decimal(s.count_after);
        j["steps"].push_back(js);
    }
    return j.dump();
}

HolderReport holder_check(const std::vector<std::vector<BigCount>>& vectors) {
    if (vectors.empty()) throw std::invalid_argument("holder_check: no vectors");
    std::size_t len = vectors[0].size();
    unsigned s = static_cast<unsigned>(vectors.size());
    for (const auto& v : vectors) {
        if (v.size() != len) throw std::invalid_argument("holder_check: length mismatch");
        for (const auto& x : v)
            if (x < 0) throw std::invalid_argument("holder_check: negative entry");
    }
    HolderReport rep;
    BigCount dot = 0;
    std::vector<BigCount> norms(s, BigCount(0));
    std::vector<std::vector<BigCount>> pows(s, std::vector<BigCount>(len));
    for (std::size_t t = 0; t < len; ++t) {
        BigCount prod = 1;
        for (unsigned i = 0; i < s; ++i) {
            prod *= vectors[i][t];
            pows[i][t] = big_pow(vectors[i][t], s);
            norms[i] += pows[i][t];
        }
        dot += prod;
    }
    rep.lhs = big_pow(dot, s);
    rep.rhs = 1;
    for (const auto& n : norms) rep.rhs *= n;
    rep.inequality_holds = rep.lhs <= rep.rhs;
    rep.equality_condition = true;
    for (unsigned i = 0; i < s && rep.equality_condition; ++i)
        for (unsigned j = i + 1; j < s && rep.equality_condition; ++j)
            for (std::size_t t = 0; t < len; ++t)
                if (pows[i][t] * norms[j] != pows[j][t] * norms[i]) {
                    rep.equality_condition = false;
                    break;
                }
    return rep;
}

}  // namespace erco
