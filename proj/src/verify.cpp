#include "erco/verify.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "erco/graph6.hpp"
#include "erco/rainbow.hpp"
#include "erco/search.hpp"
#include "erco/symmetrize.hpp"
#include "erco/weight.hpp"

namespace erco {

namespace {

struct Checker {
    std::ostream& out;
    std::string suite;
    int passed = 0;
    int failed = 0;

    void check(bool ok, const std::string& name, const std::string& detail = "") {
        (ok ? passed : failed)++;
        out << (ok ? "ok " : "FAIL ") << suite << "." << name;
        if (!detail.empty()) out << ": " << detail;
        out << "\n";
    }

    bool summary() {
        out << "{\"suite\":\"" << suite << "\",\"pass\":" << (failed == 0 ? "true" : "false")
            << ",\"passed\":" << passed << ",\"failed\":" << failed << "}\n";
        return failed == 0;
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

Pattern sample_pattern(std::mt19937_64& rng) {
    static const char* names[] = {"T0", "R0", "MONO3"};
    return *pattern_from_name(names[rng() % 3]);
}

bool suite_holder(Checker& ck) {
    std::mt19937_64 rng(1001);
    int bad = 0;
    for (int it = 0; it < 1000; ++it) {
        std::size_t s = 1 + rng() % 4, len = 1 + rng() % 6;
        std::vector<std::vector<BigCount>> vecs(s, std::vector<BigCount>(len));
        for (auto& v : vecs)
            for (auto& x : v) x = BigCount(rng() % 21);
        if (!holder_check(vecs).inequality_holds) ++bad;
    }
    ck.check(bad == 0, "random-inequality", "1000 random families");

    int eq_bad = 0;
    for (int it = 0; it < 100; ++it) {
        // proportional family: x_i = a_i * base, which forces equality
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
    ck.check(eq_bad == 0, "proportional-equality", "100 constructed families");

    HolderReport rep = holder_check({{BigCount(1), BigCount(2)}, {BigCount(2), BigCount(1)}});
    ck.check(rep.lhs == 16 && rep.rhs == 25 && rep.inequality_holds && !rep.equality_condition,
             "example-16-25");
    return true;
}

bool suite_product_identity(Checker& ck) {
    std::mt19937_64 rng(1002);
    int bad = 0, run = 0;
    while (run < 200) {
        int n = 2 + static_cast<int>(rng() % 5);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> s = random_independent_set(rng, g);
        Pattern p = sample_pattern(rng);
        int r = 2 + static_cast<int>(rng() % 2);
        ProfileTable table = profile_vector(g, s, p, r);
        if (table.status != RunStatus::complete) continue;
        BigCount sum = 0;
        for (const auto& row : table.ext_counts) {
            BigCount prod = 1;
            for (const auto& c : row) prod *= c;
            sum += prod;
        }
        CountResult direct = count_colorings(g, p, r);
        if (direct.status != RunStatus::complete || sum != direct.count) ++bad;
        ++run;
    }
    ck.check(bad == 0, "independent-set-product", "200 random (G, S) instances");
    return true;
}

bool suite_symmetrization(Checker& ck, const VerifyOptions& opts) {
    std::mt19937_64 rng(1003);
    int bad = 0;
    for (int it = 0; it < 200; ++it) {
        int n = 3 + static_cast<int>(rng() % 4);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> s = random_independent_set(rng, g);
        Pattern p = sample_pattern(rng);
        int r = 2 + static_cast<int>(rng() % 2);
        ReplaceReport rep = replace_independent_set(g, s, p, r);
        if (rep.status != RunStatus::complete || rep.count_after < rep.count_before) ++bad;
    }
    ck.check(bad == 0, "replace-monotone", "200 random instances");

    int trace_bad = 0;
    for (int it = 0; it < 25; ++it) {
        int n = 4 + static_cast<int>(rng() % 3);
        SimpleGraph g = random_graph(rng, n);
        Pattern p = sample_pattern(rng);
        int r = 2 + static_cast<int>(rng() % 2);
        SymmetrizationTrace t = symmetrize(g, p, r);
        if (t.status != RunStatus::complete) {
            ++trace_bad;
            continue;
        }
        bool mono = t.final_count >= t.initial_count;
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
            if (t.steps[i].count_after < t.steps[i].count_before) mono = false;
            if (i > 0 && t.steps[i].count_before != t.steps[i - 1].count_after) mono = false;
        }
        if (!t.final_graph.is_complete_multipartite()) mono = false;
        // terminal count must agree with the twin-power route
        CountResult mp = count_multipartite(t.final_parts, p, r);
        if (mp.status != RunStatus::complete || mp.count != t.final_count) mono = false;
        if (!mono) ++trace_bad;
    }
    ck.check(trace_bad == 0, "trace-monotone-multipartite", "25 random traces");
    (void)opts;
    return true;
}

bool suite_multipartite_theorems(Checker& ck, const VerifyOptions& opts) {
    SearchOptions sopts;
    sopts.threads = opts.threads;
    sopts.cache = opts.cache;
    for (int n : {4, 5}) {
        for (const char* pname : {"R0", "T0", "MONO3"}) {
            Pattern p = *pattern_from_name(pname);
            for (int r : {2, 3}) {
                TheoremVerdict v = verify_multipartite_theorems(n, p, r, sopts);
                std::ostringstream tag;
                tag << "n" << n << "-" << pname << "-r" << r;
                ck.check(v.counts_agree, tag.str() + "-sweeps-agree",
                         "best " + to_decimal(v.all_graphs.best_count));
                ck.check(v.some_maximizer_multipartite, tag.str() + "-some-multipartite");
                if (v.all_multipartite_expected) {
                    std::string detail;
                    for (const auto& c : v.non_multipartite_maximizers) detail += c + " ";
                    ck.check(v.all_maximizers_multipartite, tag.str() + "-all-multipartite", detail);
                }
            }
        }
    }
    return true;
}

bool suite_weight(Checker& ck) {
    for (int t : {5, 6}) {
        MaxWReport rep = max_w(t);
        ck.check(rep.bound_holds && rep.complete_attains && rep.max_value == rep.complete_value,
                 "max-w-" + std::to_string(t), "max " + to_decimal(rep.max_value));
    }
    // t = 3, 4 maxima exceed 2^binom(t,2); recorded, not asserted
    MaxWReport t3 = max_w(3), t4 = max_w(4);
    ck.check(t3.max_value == 9, "max-w-3-recorded", "max " + to_decimal(t3.max_value) + " (> 8)");
    ck.check(t4.max_value == 81, "max-w-4-recorded", "max " + to_decimal(t4.max_value) + " (> 64)");

    std::mt19937_64 rng(1004);
    int bad = 0;
    for (int it = 0; it < 500; ++it) {
        int n = 1 + static_cast<int>(rng() % 8);
        if (!vertex_weight_identity_check(random_graph(rng, n))) ++bad;
    }
    ck.check(bad == 0, "vertex-identity", "500 random graphs");

    int tf_bad = 0;
    for (int n = 2; n <= 7; ++n) {
        SimpleGraph g = turan_graph(n, 3);
        WeightReport w = weigh(g);
        if (w.e2 != 0 || w.w_value != int_pow(3, static_cast<unsigned>(g.edge_count()))) ++tf_bad;
        if (w.w_value > int_pow(3, static_cast<unsigned>(turan_number(n, 3)))) ++tf_bad;
    }
    ck.check(tf_bad == 0, "triangle-free-weight");
    return true;
}

bool suite_rainbow(Checker& ck, const VerifyOptions& opts) {
    CountOptions copts;
    copts.threads = opts.threads;
    MaxExtensionReport base = max_extension_count(2, copts);
    ck.check(base.status == RunStatus::complete && base.max_extension == 7, "extension-base-7",
             "max " + to_decimal(base.max_extension));
    for (int t : {2, 3, 4}) {
        MaxExtensionReport rep = max_extension_count(t, copts);
        ck.check(rep.status == RunStatus::complete && rep.bound_holds,
                 "extension-bound-" + std::to_string(t),
                 to_decimal(rep.max_extension) + " <= " + to_decimal(rep.bound));
    }
    for (int n : {3, 4, 5}) {
        RainbowKnReport rep = rainbow_count_kn(n, copts);
        ck.check(rep.status == RunStatus::complete && rep.sandwich_ok,
                 "sandwich-" + std::to_string(n),
                 to_decimal(rep.lower_bound) + " <= " + to_decimal(rep.exact_count) + " <= " +
                     to_decimal(rep.product_bound));
    }
    RainbowKnReport r3 = rainbow_count_kn(3, copts);
    ck.check(r3.exact_count == 21 && r3.lower_bound == 21, "equality-at-3");
    return true;
}

bool suite_ramsey(Checker& ck) {
    SimpleGraph k2 = complete_graph(2), k3 = complete_graph(3);
    ck.check(ramsey_le(k2, 2), "edge-2");
    ck.check(!ramsey_le(k3, 5), "triangle-5-false");
    ck.check(ramsey_le(k3, 6), "triangle-6-true");
    bool mono = true;
    for (int k = 2; k <= 5; ++k)
        if (ramsey_le(k3, k) && !ramsey_le(k3, k + 1)) mono = false;
    ck.check(mono, "monotone-in-k");
    return true;
}

bool suite_bounds(Checker& ck, const VerifyOptions& opts) {
    CountOptions copts;
    copts.threads = opts.threads;
    Pattern r0 = *pattern_from_name("R0");
    Pattern t0 = *pattern_from_name("T0");
    Pattern mono3 = *pattern_from_name("MONO3");

    CountResult a = count_colorings(complete_graph(3), r0, 3, copts);
    ck.check(a.status == RunStatus::complete && a.count == 21, "c3-r0-k3", to_decimal(a.count));
    CountResult b = count_colorings(complete_graph(3), t0, 2, copts);
    ck.check(b.status == RunStatus::complete && b.count == 2, "c2-t0-k3", to_decimal(b.count));
    CountResult c = count_colorings(complete_graph(4), mono3, 2, copts);
    ck.check(c.status == RunStatus::complete && c.count == 18, "c2-mono3-k4", to_decimal(c.count));

    int bad = 0;
    for (int n = 2; n <= 8; ++n) {
        CountResult t = count_colorings(turan_graph(n, 3), mono3, 2, copts);
        if (t.status != RunStatus::complete || t.count != pow2(static_cast<unsigned>(n * n / 4))) ++bad;
    }
    ck.check(bad == 0, "turan-2-power", "2^(n^2/4) for n <= 8");

    // any pattern of K_k is impossible on a K_k-free host
    int eq1_bad = 0;
    for (int n = 3; n <= 7; ++n)
        for (int k = 3; k <= 4; ++k)
            for (int r = 2; r <= 3; ++r) {
                CountResult t = count_colorings(turan_graph(n, k), mono_pattern(k), r, copts);
                BigCount expect = int_pow(r, static_cast<unsigned>(turan_number(n, k)));
                if (t.status != RunStatus::complete || t.count != expect) ++eq1_bad;
            }
    ck.check(eq1_bad == 0, "turan-lower-bound");

    int lb_bad = 0;
    for (int n = 3; n <= 5; ++n) {
        CountResult t = count_colorings(complete_graph(n), r0, 3, copts);
        if (t.status != RunStatus::complete || t.count < two_color_lower_bound(n)) ++lb_bad;
    }
    ck.check(lb_bad == 0, "rainbow-lower-bound");
    return true;
}

}  // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "holder",       "product-identity", "symmetrization", "multipartite-theorems",
        "weight",       "rainbow",          "ramsey",         "bounds"};
    return names;
}

bool run_verify_suite(const std::string& name, const VerifyOptions& opts, std::ostream& out) {
    Checker ck{out, name};
    if (name == "holder")
        suite_holder(ck);
    else if (name == "product-identity")
        suite_product_identity(ck);
    else if (name == "symmetrization")
        suite_symmetrization(ck, opts);
    else if (name == "multipartite-theorems")
        suite_multipartite_theorems(ck, opts);
    else if (name == "weight")
        suite_weight(ck);
    else if (name == "rainbow")
        suite_rainbow(ck, opts);
    else if (name == "ramsey")
        suite_ramsey(ck);
    else if (name == "bounds")
        suite_bounds(ck, opts);
    else
        throw std::invalid_argument("unknown verify suite: " + name);
    return ck.summary();
}

}  // namespace erco
