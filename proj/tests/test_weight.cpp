#include <doctest.h>

#include <stdexcept>

#include <random>

#include "erco/weight.hpp"

using namespace erco;

namespace {

SimpleGraph random_graph(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng() & 1) es.emplace_back(i, j);
    return SimpleGraph(n, es);
}

}  // namespace

TEST_CASE("edge weights by triangle membership") {
    WeightReport k3 = weigh(complete_graph(3));
    CHECK(k3.e2 == 3);
    CHECK(k3.e3 == 0);
    CHECK(k3.w_value == 8);

    WeightReport p3 = weigh(path_graph(3));
    CHECK(p3.e2 == 0);
    CHECK(p3.e3 == 2);
    CHECK(p3.w_value == 9);

    WeightReport c4 = weigh(complete_multipartite(PartSizes({2, 2})));
    CHECK(c4.e2 == 0);
    CHECK(c4.e3 == 4);
    CHECK(c4.w_value == 81);

    // mixed: a triangle with a pendant edge
    WeightReport paw = weigh(SimpleGraph(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}));
    CHECK(paw.e2 == 3);
    CHECK(paw.e3 == 1);
    CHECK(paw.e2 + paw.e3 == 4);
    CHECK(paw.w_value == 24);
}

TEST_CASE("exhaustive weight maxima") {
    // the complete graph takes over from t = 5; below that triangle-free
    // graphs win and the bound fails (recorded, not asserted)
    MaxWReport t3 = max_w(3);
    CHECK(t3.max_value == 9);
    CHECK(!t3.bound_holds);
    CHECK(!t3.complete_attains);

    MaxWReport t4 = max_w(4);
    CHECK(t4.max_value == 81);
    CHECK(!t4.bound_holds);

    MaxWReport t5 = max_w(5);
    CHECK(t5.max_value == 1024);
    CHECK(t5.bound_holds);
    CHECK(t5.complete_attains);

    MaxWReport t6 = max_w(6);
    CHECK(t6.max_value == t6.complete_value);
    CHECK(t6.complete_attains);

    CHECK_THROWS_AS(max_w(8), std::out_of_range);
}

TEST_CASE("stability components in exact arithmetic") {
    StabilityReport kt = stability_components(complete_graph(6));
    CHECK(kt.ebar == 0);
    CHECK(kt.e3 == 0);
    CHECK(kt.e3_bound_holds);
    CHECK(kt.w_bound_holds);

    StabilityReport k5e = stability_components(complete_graph(5).without_edge(0, 1));
    CHECK(k5e.ebar == 1);
    CHECK(k5e.e3 == 0);
    CHECK(k5e.e3_bound_holds);
    CHECK(k5e.w_bound_holds);

    StabilityReport c5 = stability_components(cycle_graph(5));
    CHECK(c5.ebar == 5);
    CHECK(c5.e3 == 5);
    CHECK(c5.e3_bound_holds);  // 50000 <= 71215
    CHECK(c5.ebar_within_quarter);
}

TEST_CASE("vertex weight identity") {
    CHECK(vertex_weight_identity_check(complete_graph(3)));    // 8^2 = 4*4*4
    CHECK(vertex_weight_identity_check(path_graph(3)));        // 81 = 3*9*3
    std::mt19937_64 rng(71);
    for (int it = 0; it < 500; ++it)
        CHECK(vertex_weight_identity_check(random_graph(rng, 1 + static_cast<int>(rng() % 8))));
}

TEST_CASE("triangle-free weight equals 3 to the edges") {
    for (int n = 2; n <= 7; ++n) {
        SimpleGraph t = turan_graph(n, 3);
        WeightReport w = weigh(t);
        CHECK(w.e2 == 0);
        CHECK(w.w_value == int_pow(3, t.edge_count()));
        CHECK(w.w_value <= int_pow(3, turan_number(n, 3)));
    }
}

TEST_CASE("complete graph carries the maximum weight at t = 7") {
    MaxWReport t7 = max_w(7);
    CHECK(t7.max_value == t7.complete_value);
    CHECK(t7.bound_holds);
    CHECK(t7.complete_attains);
}
