#include "erco/weight.hpp"

#include <algorithm>
#include <stdexcept>

namespace erco {

namespace {

// edge weight is 2 inside a triangle, 3 otherwise
bool in_triangle(const SimpleGraph& g, int u, int v) {
    return (g.neighbor_mask(u) & g.neighbor_mask(v)) != 0;
}

}  // namespace

WeightReport weigh(const SimpleGraph& g) {
    WeightReport rep;
    rep.graph_code = g.n() > 0 ? graph_code(g) : "";
    for (auto [u, v] : g.edges()) (in_triangle(g, u, v) ? rep.e2 : rep.e3)++;
    rep.ebar = 1LL * g.n() * (g.n() - 1) / 2 - g.edge_count();
    rep.w_value = pow2(static_cast<unsigned>(rep.e2)) * int_pow(3, static_cast<unsigned>(rep.e3));
    return rep;
}

MaxWReport max_w(int t) {
    if (t < 1) throw std::invalid_argument("max_w: t >= 1 required");
    if (t > 7) throw std::out_of_range("max_w: t > 7 exceeds the enumeration budget");
    MaxWReport rep;
    rep.t = t;
    rep.complete_value = pow2(static_cast<unsigned>(t * (t - 1) / 2));
    rep.max_value = 0;
    std::string kt_code = graph_code(complete_graph(t));
    for (const auto& g : enumerate_graphs(t)) {
        BigCount w = weigh(g).w_value;
        if (w > rep.max_value) {
            rep.max_value = w;
            rep.argmax_codes.clear();
        }
        if (w == rep.max_value) rep.argmax_codes.push_back(graph_code(g));
    }
    std::sort(rep.argmax_codes.begin(), rep.argmax_codes.end());
    rep.bound_holds = rep.max_value <= rep.complete_value;
    rep.complete_attains =
        std::find(rep.argmax_codes.begin(), rep.argmax_codes.end(), kt_code) != rep.argmax_codes.end();
    return rep;
}

StabilityReport stability_components(const SimpleGraph& g) {
    WeightReport w = weigh(g);
    StabilityReport rep;
    rep.e2 = w.e2;
    rep.e3 = w.e3;
    rep.ebar = w.ebar;
    rep.w_value = w.w_value;
    long long t = g.n();
    rep.ebar_within_quarter = 4 * rep.ebar <= t * t;
    // sqrt(2)+0.01 replaced by the rational over-approximation 14243/10000
    rep.e3_bound_holds = 10000 * rep.e3 <= 14243 * rep.ebar;
    // 0.16 = 4/25: w <= 2^(binom(t,2) - 0.16 ebar) iff w^25 <= 2^(25 binom(t,2) - 4 ebar)
    long long exponent = 25 * (t * (t - 1) / 2) - 4 * rep.ebar;
    rep.w_bound_holds = big_pow(rep.w_value, 25) <= pow2(static_cast<unsigned>(exponent));
    return rep;
}

bool vertex_weight_identity_check(const SimpleGraph& g) {
    BigCount product = 1;
    for (int v = 0; v < g.n(); ++v) {
        BigCount wv = 1;
        for (int u = 0; u < g.n(); ++u)
            if (g.has_edge(v, u)) wv *= in_triangle(g, v, u) ? 2 : 3;
        product *= wv;
    }
    BigCount w = weigh(g).w_value;
    return w * w == product;
}

}  // namespace erco
