// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one pass/fail line per criterion. Exit code is the number of
// failures. Counts are cross-checked against the independent full-enumeration
// oracle in oracle.hpp wherever a criterion calls for one.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <vector>

#include "erco/rainbow.hpp"
#include "erco/search.hpp"
#include "erco/symmetrize.hpp"
#include "erco/weight.hpp"
#include "oracle.hpp"

using namespace erco;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << (detail.str().empty() ? "" : "; ") << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.str().empty() ? "" : "; ") << what;
    }
};

SimpleGraph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) es.emplace_back(i, j);
    return SimpleGraph(n, es);
}

std::vector<int> random_independent_set(std::mt19937_64& rng, const SimpleGraph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::size_t want = 1 + rng() % g.n();
    std::vector<int> s;
    for (int v : order) {
        bool ok = true;
        for (int u : s)
            if (g.has_edge(u, v)) ok = false;
        if (ok) s.push_back(v);
        if (s.size() >= want) break;
    }
    std::sort(s.begin(), s.end());
    return s;
}

// shared between criteria 5, 6 and 12
struct SweepEntry {
    int n, r;
    std::string pname;
    TheoremVerdict verdict;
};
std::vector<SweepEntry> g_sweeps;

void criterion1(Outcome& o) {
    struct Case {
        SimpleGraph g;
        Pattern p;
        int r;
        BigCount expected;
    };
    std::vector<Case> cases = {
        {complete_graph(3), rainbow_pattern(3), 3, BigCount(21)},
        {complete_graph(3), *pattern_from_name("T0"), 2, BigCount(2)},
        {complete_graph(4), mono_pattern(3), 2, BigCount(18)},
    };
    for (int n = 2; n <= 8; ++n)
        cases.push_back({turan_graph(n, 3), mono_pattern(3), 2, pow2(n * n / 4)});
    for (const auto& c : cases) {
        CountResult res = count_colorings(c.g, c.p, c.r);
        o.require(res.status == RunStatus::complete, "count did not complete");
        o.require(res.count == c.expected, "count " + to_decimal(res.count) + " != expected " +
                                               to_decimal(c.expected));
        BigCount oracle = erco_test::oracle_count(c.g, c.p, c.r);
        o.require(oracle == c.expected, "oracle " + to_decimal(oracle) + " != expected");
    }
}

void criterion2(Outcome& o) {
    for (std::uint8_t base : {0, 1, 2}) {
        ExtensionResult res =
            count_extensions(complete_graph(2), {base}, {0, 1}, rainbow_pattern(3), 3);
        o.require(res.status == RunStatus::complete && res.count == 7,
                  "c(v, K^2) = " + to_decimal(res.count) + " for base color " +
                      std::to_string(base));
    }
}

void criterion3(Outcome& o) {
    for (int t : {2, 3, 4}) {
        MaxExtensionReport rep = max_extension_count(t);
        o.require(rep.status == RunStatus::complete, "t=" + std::to_string(t) + " incomplete");
        o.require(rep.bound_holds, "t=" + std::to_string(t) + ": " + to_decimal(rep.max_extension) +
                                       " > " + to_decimal(rep.bound));
    }
}

void criterion4(Outcome& o) {
    for (int n : {3, 4, 5}) {
        CountOptions opts;
        if (n == 5) opts.threads = 4;
        RainbowKnReport rep = rainbow_count_kn(n, opts);
        o.require(rep.status == RunStatus::complete, "n=" + std::to_string(n) + " incomplete");
        o.require(rep.sandwich_ok, "n=" + std::to_string(n) + ": " + to_decimal(rep.lower_bound) +
                                       " <= " + to_decimal(rep.exact_count) + " <= " +
                                       to_decimal(rep.product_bound) + " violated");
    }
}

void criterion5(Outcome& o) {
    g_sweeps.clear();
    for (int n : {4, 5})
        for (const char* pname : {"R0", "T0", "MONO3"})
            for (int r : {2, 3}) {
                SearchOptions opts;
                opts.threads = 4;
                TheoremVerdict v = verify_multipartite_theorems(n, *pattern_from_name(pname), r, opts);
                std::string tag = "n=" + std::to_string(n) + " " + pname + " r=" + std::to_string(r);
                o.require(v.all_graphs.status == RunStatus::complete &&
                              v.multipartite.status == RunStatus::complete,
                          tag + " incomplete");
                o.require(v.counts_agree, tag + ": sweep maxima differ");
                o.require(v.some_maximizer_multipartite, tag + ": no multipartite maximizer");
                g_sweeps.push_back({n, r, pname, v});
            }
}

void criterion6(Outcome& o) {
    for (const auto& e : g_sweeps) {
        if (!e.verdict.all_multipartite_expected) continue;
        std::string tag = "n=" + std::to_string(e.n) + " " + e.pname + " r=" + std::to_string(e.r);
        if (!e.verdict.all_maximizers_multipartite) {
            std::string codes;
            for (const auto& c : e.verdict.non_multipartite_maximizers) codes += c + " ";
            o.require(false, tag + ": reproducible non-multipartite maximizer(s) " + codes);
        }
    }
    if (o.pass) o.note("no discrepancies at n = 4, 5");
}

void criterion7(Outcome& o) {
    std::mt19937_64 rng(2024);
    int bad = 0, run = 0;
    while (run < 200) {
        int n = 2 + static_cast<int>(rng() % 5);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> s = random_independent_set(rng, g);
        Pattern p = rng() % 2 ? rainbow_pattern(3) : mono_pattern(3);
        int r = 2 + static_cast<int>(rng() % 2);
        ProfileTable t = profile_vector(g, s, p, r);
        if (t.status != RunStatus::complete) continue;
        BigCount sum = 0;
        for (const auto& row : t.ext_counts) {
            BigCount prod = 1;
            for (const auto& c : row) prod *= c;
            sum += prod;
        }
        CountResult direct = count_colorings(g, p, r);
        if (direct.status != RunStatus::complete || sum != direct.count) ++bad;
        ++run;
    }
    o.require(bad == 0, std::to_string(bad) + "/200 identity failures");
}

void criterion8(Outcome& o) {
    std::mt19937_64 rng(2025);
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 3 + static_cast<int>(rng() % 4);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> s = random_independent_set(rng, g);
        Pattern p = rng() % 2 ? rainbow_pattern(3) : *pattern_from_name("T0");
        int r = 2 + static_cast<int>(rng() % 2);
        ReplaceReport rep = replace_independent_set(g, s, p, r);
        if (rep.status != RunStatus::complete || rep.count_after < rep.count_before) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + "/200 monotonicity failures");
}

void criterion9(Outcome& o) {
    std::mt19937_64 rng(2026);
    int bad = 0;
    for (int it = 0; it < 1000; ++it) {
        std::size_t s = 1 + rng() % 4, len = 1 + rng() % 6;
        std::vector<std::vector<BigCount>> vecs(s, std::vector<BigCount>(len));
        for (auto& v : vecs)
            for (auto& x : v) x = BigCount(rng() % 21);
        if (!holder_check(vecs).inequality_holds) ++bad;
    }
    o.require(bad == 0, std::to_string(bad) + "/1000 inequality failures");

    int eq_bad = 0;
    for (int it = 0; it < 100; ++it) {
        std::size_t s = 2 + rng() % 3, len = 1 + rng() % 5;
        std::vector<BigCount> base(len);
        for (auto& x : base) x = BigCount(1 + rng() % 9);
        std::vector<std::vector<BigCount>> vecs;
        for (std::size_t i = 0; i < s; ++i) {
            BigCount a = BigCount(1 + rng() % 5);
            std::vector<BigCount> v(len);
            for (std::size_t t = 0; t < len; ++t) v[t] = a * base[t];
            vecs.push_back(std::move(v));
        }
        HolderReport rep = holder_check(vecs);
        if (!rep.equality_condition || rep.lhs != rep.rhs) ++eq_bad;
    }
    o.require(eq_bad == 0, std::to_string(eq_bad) +
                               "/100 proportional families not detected as equality");
}

void criterion10(Outcome& o) {
    for (int t : {5, 6}) {
        MaxWReport rep = max_w(t);
        o.require(rep.max_value == rep.complete_value && rep.complete_attains,
                  "t=" + std::to_string(t) + ": max " + to_decimal(rep.max_value) +
                      " (complete graph attains: " + (rep.complete_attains ? "yes" : "no") + ")");
    }
    MaxWReport t3 = max_w(3), t4 = max_w(4);
    o.require(t3.max_value == 9, "t=3 recorded max " + to_decimal(t3.max_value) + " != 9");
    o.require(t4.max_value == 81, "t=4 recorded max " + to_decimal(t4.max_value) + " != 81");
    o.note("t=3 max 9 (> 2^3), t=4 max 81 (> 2^6): recorded");

    std::mt19937_64 rng(2027);
    int bad = 0;
    for (int it = 0; it < 500; ++it)
        if (!vertex_weight_identity_check(random_graph(rng, 1 + static_cast<int>(rng() % 8)))) ++bad;
    o.require(bad == 0, std::to_string(bad) + "/500 vertex-weight identity failures");
}

void criterion11(Outcome& o) {
    o.require(!ramsey_le(complete_graph(3), 5), "ramsey_le(K3, 5) should be false");
    o.require(ramsey_le(complete_graph(3), 6), "ramsey_le(K3, 6) should be true");
    o.require(ramsey_le(complete_graph(2), 2), "ramsey_le(K2, 2) should be true");
}

void criterion12(Outcome& o) {
    // criteria 1-5 counts, re-run under the alternate edge order and several
    // thread counts, must be bit-identical
    struct Case {
        SimpleGraph g;
        Pattern p;
        int r;
    };
    std::vector<Case> cases = {
        {complete_graph(3), rainbow_pattern(3), 3},
        {complete_graph(3), *pattern_from_name("T0"), 2},
        {complete_graph(4), mono_pattern(3), 2},
        {turan_graph(8, 3), mono_pattern(3), 2},
        {complete_graph(4), rainbow_pattern(3), 3},
        {complete_graph(5), rainbow_pattern(3), 3},
    };
    for (const auto& c : cases) {
        CountResult base = count_colorings(c.g, c.p, c.r);
        for (EdgeOrder order : {EdgeOrder::clique_first_maxlex, EdgeOrder::clique_first_minlex})
            for (int threads : {1, 4}) {
                CountOptions opts;
                opts.order = order;
                opts.threads = threads;
                CountResult rerun = count_colorings(c.g, c.p, c.r, opts);
                o.require(rerun.status == RunStatus::complete && rerun.count == base.count,
                          "count mismatch on " + base.graph_code);
            }
    }
    // the criterion-5 sweeps, re-run with different worker counts
    for (const auto& e : g_sweeps) {
        SearchOptions opts;
        opts.threads = 2;
        SearchReport rep = search_all_graphs(e.n, *pattern_from_name(e.pname), e.r, opts);
        o.require(rep.status == RunStatus::complete &&
                      rep.best_count == e.verdict.all_graphs.best_count &&
                      rep.argmax_graph6 == e.verdict.all_graphs.argmax_graph6,
                  "sweep mismatch at n=" + std::to_string(e.n) + " " + e.pname + " r=" +
                      std::to_string(e.r));
    }
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* label;
        double limit_seconds;
        std::function<void(Outcome&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "exact counts vs full-enumeration oracle", 10.0, criterion1},
        {2, "extension base case c(v, K^2) = 7", 1.0, criterion2},
        {3, "extension bound max c(v, K^t) <= t*2^t, t = 2..4", 60.0, criterion3},
        {4, "rainbow sandwich 3*2^C(n,2)-3 <= c <= product bound, n = 3..5", 600.0, criterion4},
        {5, "multipartite maximum matches all-graphs maximum, n = 4, 5", 1800.0, criterion5},
        {6, "every eligible maximizer is complete multipartite", 60.0, criterion6},
        {7, "independent-set product identity, 200 random instances", 300.0, criterion7},
        {8, "replace-independent-set monotonicity, 200 random instances", 600.0, criterion8},
        {9, "Holder inequality and equality detection", 60.0, criterion9},
        {10, "weight maxima t = 3..6 and vertex-weight identity", 300.0, criterion10},
        {11, "Ramsey checker values", 60.0, criterion11},
        {12, "determinism across edge orders and thread counts", 600.0, criterion12},
    };

    int failures = 0;
    for (auto& c : criteria) {
        Outcome o;
        auto t0 = std::chrono::steady_clock::now();
        c.run(o);
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > c.limit_seconds) o.require(false, "over time limit");
        if (!o.pass) ++failures;
        std::printf("[%2d] %s  %s (%.2f s)%s%s\n", c.id, o.pass ? "PASS" : "FAIL", c.label, secs,
                    o.detail.str().empty() ? "" : " -- ", o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
