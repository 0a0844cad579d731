#pragma once

#include <string>
#include <vector>

#include "erco/bigcount.hpp"
#include "erco/graph.hpp"

namespace erco {

// Edge weights: 2 if the edge lies in some triangle, 3 otherwise;
// w(G) = 2^e2 * 3^e3.
struct WeightReport {
    std::string graph_code;
    long long e2 = 0;
    long long e3 = 0;
    long long ebar = 0;  // non-edges
    BigCount w_value;
};
WeightReport weigh(const SimpleGraph& g);

// Exhaustive maximum of w over all isomorphism classes on t vertices (t <= 7),
// compared against 2^binom(t,2). The complete graph attains the bound from
// t = 5 on; t = 3, 4 have larger triangle-free maxima (recorded, not asserted).
struct MaxWReport {
    int t = 0;
    BigCount max_value;
    std::vector<std::string> argmax_codes;  // canonical graph6, sorted
    BigCount complete_value;                // 2^binom(t,2)
    bool bound_holds = false;               // max_value <= complete_value
    bool complete_attains = false;          // K_t in the argmax set
};
MaxWReport max_w(int t);

// Components of the weight stability inequality, reported with exact
// arithmetic only. sqrt(2) + 0.01 is replaced by the documented rational
// over-approximation 14243/10000 (> 1.41421356 + 0.01), and 0.16 by 4/25,
// so both checks are pure integer comparisons.
struct StabilityReport {
    long long e2 = 0, e3 = 0, ebar = 0;
    BigCount w_value;
    bool ebar_within_quarter = false;  // ebar <= t^2/4 (hypothesis, reported)
    bool e3_bound_holds = false;       // 10000*e3 <= 14243*ebar
    bool w_bound_holds = false;        // w^25 <= 2^(25*binom(t,2) - 4*ebar)
};
StabilityReport stability_components(const SimpleGraph& g);

// w(G)^2 == prod over vertices of the product of incident edge weights.
bool vertex_weight_identity_check(const SimpleGraph& g);

}  // namespace erco
