#include <doctest.h>

#include <stdexcept>

#include <numeric>
#include <random>

#include "erco/counting.hpp"
#include "erco/search.hpp"
#include "oracle.hpp"

using namespace erco;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) es.emplace_back(i, j);
    return SimpleGraph(n, es);
}

BigCount count_of(const SimpleGraph& g, const Pattern& p, int r, const CountOptions& opts = {}) {
    CountResult res = count_colorings(g, p, r, opts);
    REQUIRE(res.status == RunStatus::complete);
    return res.count;
}

}  // namespace

TEST_CASE("known exact counts") {
    CHECK(count_of(complete_graph(3), rainbow_pattern(3), 3) == 21);
    CHECK(count_of(complete_graph(3), *pattern_from_name("T0"), 2) == 2);
    CHECK(count_of(complete_graph(4), mono_pattern(3), 2) == 18);
    for (int n = 2; n <= 8; ++n)
        CHECK(count_of(turan_graph(n, 3), mono_pattern(3), 2) == pow2(n * n / 4));
}

TEST_CASE("counts agree with the full-enumeration oracle") {
    std::mt19937_64 rng(31);
    std::vector<Pattern> pats = {*pattern_from_name("T0"), rainbow_pattern(3), mono_pattern(3)};
    for (int it = 0; it < 40; ++it) {
        int n = 2 + static_cast<int>(rng() % 4);
        SimpleGraph g = random_graph(rng, n);
        const Pattern& p = pats[rng() % pats.size()];
        int r = 2 + static_cast<int>(rng() % 2);
        CHECK(count_of(g, p, r) == erco_test::oracle_count(g, p, r));
    }
    // one K4-pattern host as well
    SimpleGraph k5e = complete_graph(5).without_edge(0, 1);
    CHECK(count_of(k5e, *pattern_from_name("P2"), 2) ==
          erco_test::oracle_count(k5e, *pattern_from_name("P2"), 2));
}

TEST_CASE("unrealizable pattern counts r to the edges") {
    CHECK(count_of(complete_graph(4), rainbow_pattern(3), 2) == pow2(6));
    CHECK(count_of(complete_graph(5), *pattern_from_name("P3"), 2) == pow2(10));
}

TEST_CASE("isomorphism invariance") {
    std::mt19937_64 rng(37);
    for (int it = 0; it < 20; ++it) {
        int n = 3 + static_cast<int>(rng() % 3);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Pattern p = rng() & 1 ? rainbow_pattern(3) : mono_pattern(3);
        CHECK(count_of(g, p, 3) == count_of(g.relabeled(perm), p, 3));
    }
}

TEST_CASE("edge removal bound") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 20; ++it) {
        SimpleGraph g = random_graph(rng, 5);
        if (g.edge_count() == 0) continue;
        auto [u, v] = g.edges()[rng() % g.edge_count()];
        Pattern p = mono_pattern(3);
        BigCount full = count_of(g, p, 2);
        BigCount removed = count_of(g.without_edge(u, v), p, 2);
        // each good coloring of G restricts to one of G - e, at most r-to-1
        CHECK(full <= removed * 2);
    }
}

TEST_CASE("edge orders and thread counts give identical counts") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 12; ++it) {
        int n = 4 + static_cast<int>(rng() % 2);
        SimpleGraph g = random_graph(rng, n);
        Pattern p = it % 2 ? rainbow_pattern(3) : *pattern_from_name("T0");
        CountOptions a, b, c;
        b.order = EdgeOrder::clique_first_minlex;
        c.threads = 3;
        BigCount ca = count_of(g, p, 3, a);
        CHECK(ca == count_of(g, p, 3, b));
        CHECK(ca == count_of(g, p, 3, c));
    }
}

TEST_CASE("node budget trips cleanly") {
    CountOptions opts;
    opts.budget.max_nodes = 10;
    CountResult res = count_colorings(complete_graph(5), rainbow_pattern(3), 3, opts);
    CHECK(res.status == RunStatus::node_budget_exceeded);
    CHECK(res.count == 0);
    CountOptions par = opts;
    par.threads = 4;
    CHECK(count_colorings(complete_graph(5), rainbow_pattern(3), 3, par).status ==
          RunStatus::node_budget_exceeded);
}

TEST_CASE("extension counts") {
    // one colored edge, new vertex joined to both ends, rainbow forbidden
    SimpleGraph k2 = complete_graph(2);
    for (std::uint8_t base : {0, 1, 2}) {
        ExtensionResult res = count_extensions(k2, {base}, {0, 1}, rainbow_pattern(3), 3);
        CHECK(res.status == RunStatus::complete);
        CHECK(res.count == 7);
    }
    // no clique can close through a single vertex
    ExtensionResult single = count_extensions(SimpleGraph(1), {}, {0}, rainbow_pattern(3), 3);
    CHECK(single.count == 3);
    // avoiding monochromatic triangles over a red-red-blue K3, two colors:
    // the 8 extensions leave exactly {100, 101, 110} good
    ExtensionResult mono = count_extensions(complete_graph(3), {0, 0, 1}, {0, 1, 2}, mono_pattern(3), 2);
    CHECK(mono.count == 3);
    CHECK(mono.count ==
          erco_test::oracle_extension_count(complete_graph(3), {0, 0, 1}, {0, 1, 2}, mono_pattern(3), 2));
    // base colorings containing the pattern are rejected
    CHECK_THROWS_AS(count_extensions(complete_graph(3), {0, 1, 2}, {0, 1}, rainbow_pattern(3), 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(count_extensions(complete_graph(3), {0, 0, 0}, {0, 1, 2}, mono_pattern(3), 2),
                    std::invalid_argument);
}

TEST_CASE("extension counts agree with the oracle") {
    std::mt19937_64 rng(47);
    std::vector<Pattern> pats = {*pattern_from_name("T0"), rainbow_pattern(3), mono_pattern(3)};
    int done = 0;
    while (done < 30) {
        int n = 2 + static_cast<int>(rng() % 3);
        SimpleGraph h = random_graph(rng, n);
        const Pattern& p = pats[rng() % pats.size()];
        int r = 2 + static_cast<int>(rng() % 2);
        EdgeColoring colors(h.edge_count());
        for (auto& c : colors) c = static_cast<std::uint8_t>(rng() % r);
        std::vector<int> targets;
        for (int v = 0; v < n; ++v)
            if (rng() & 1) targets.push_back(v);
        try {
            ExtensionResult res = count_extensions(h, colors, targets, p, r);
            CHECK(res.count == erco_test::oracle_extension_count(h, colors, targets, p, r));
            ++done;
        } catch (const std::invalid_argument&) {
            // base coloring happened to contain the pattern; try again
        }
    }
}

TEST_CASE("multipartite twin-power counting matches direct counting") {
    std::vector<Pattern> pats = {rainbow_pattern(3), *pattern_from_name("T0"), mono_pattern(3)};
    for (int n = 1; n <= 5; ++n)
        for (const auto& parts : all_partitions(n))
            for (const auto& p : pats)
                for (int r : {2, 3}) {
                    CountResult twin = count_multipartite(parts, p, r);
                    REQUIRE(twin.status == RunStatus::complete);
                    CHECK(twin.count == count_of(complete_multipartite(parts), p, r));
                }
    // n = 6 with the heavier combinations kept within budget
    struct Combo {
        Pattern p;
        int r;
    };
    std::vector<Combo> combos = {{rainbow_pattern(3), 3}, {*pattern_from_name("T0"), 3},
                                 {mono_pattern(3), 2}};
    for (const auto& parts : all_partitions(6))
        for (const auto& c : combos) {
            CountResult twin = count_multipartite(parts, c.p, c.r);
            REQUIRE(twin.status == RunStatus::complete);
            CHECK(twin.count == count_of(complete_multipartite(parts), c.p, c.r));
        }
    CHECK(count_multipartite(PartSizes({2, 2}), rainbow_pattern(3), 3).count == 81);
    // K_{2,1} is the 2-edge path: triangle-free, so 2^2 colorings are all good
    CHECK(count_multipartite(PartSizes({2, 1}), mono_pattern(3), 2).count == 4);
    CHECK(count_multipartite(PartSizes({4}), mono_pattern(3), 2).count == 1);
}

TEST_CASE("multipartite counting in parallel") {
    CountOptions par;
    par.threads = 4;
    CountResult a = count_multipartite(PartSizes({1, 1, 1, 1, 1}), rainbow_pattern(3), 3, par);
    CountResult b = count_multipartite(PartSizes({1, 1, 1, 1, 1}), rainbow_pattern(3), 3);
    REQUIRE(a.status == RunStatus::complete);
    CHECK(a.count == b.count);
    CHECK(a.count == count_of(complete_graph(5), rainbow_pattern(3), 3));
}

TEST_CASE("profile vectors") {
    // two pendant vertices off one center: every extension is free
    SimpleGraph p21 = complete_multipartite(PartSizes({2, 1}));
    ProfileTable t = profile_vector(p21, {0, 1}, rainbow_pattern(3), 3);
    REQUIRE(t.status == RunStatus::complete);
    CHECK(t.colorings.size() == 1);  // H has no edges
    CHECK(t.ext_counts[0] == std::vector<BigCount>{3, 3});

    // K4 minus one edge, S = the missing pair: 3 base colorings, each side 7
    SimpleGraph k4e = complete_graph(4).without_edge(0, 1);
    ProfileTable t2 = profile_vector(k4e, {0, 1}, rainbow_pattern(3), 3);
    REQUIRE(t2.status == RunStatus::complete);
    CHECK(t2.colorings.size() == 3);
    BigCount sum = 0;
    for (const auto& row : t2.ext_counts) {
        CHECK(row == std::vector<BigCount>{7, 7});
        CHECK(row[0] <= int_pow(3, 2));  // never above r^deg
        sum += row[0] * row[1];
    }
    CHECK(sum == count_of(k4e, rainbow_pattern(3), 3));

    CHECK_THROWS_AS(profile_vector(complete_graph(3), {0, 1}, rainbow_pattern(3), 3),
                    std::invalid_argument);
}

TEST_CASE("independent-set product identity on random instances") {
    std::mt19937_64 rng(53);
    int done = 0;
    while (done < 40) {
        int n = 2 + static_cast<int>(rng() % 5);
        SimpleGraph g = random_graph(rng, n);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> s;
        for (int v : order) {
            bool ok = true;
            for (int u : s)
                if (g.has_edge(u, v)) ok = false;
            if (ok) s.push_back(v);
            if (s.size() == 1 + rng() % 3) break;
        }
        Pattern p = rng() & 1 ? rainbow_pattern(3) : mono_pattern(3);
        int r = 2 + static_cast<int>(rng() % 2);
        ProfileTable t = profile_vector(g, s, p, r);
        REQUIRE(t.status == RunStatus::complete);
        BigCount sum = 0;
        for (const auto& row : t.ext_counts) {
            BigCount prod = 1;
            for (const auto& c : row) prod *= c;
            sum += prod;
        }
        CHECK(sum == count_of(g, p, r));
        ++done;
    }
}
