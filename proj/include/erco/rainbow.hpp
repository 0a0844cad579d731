#pragma once

#include <optional>

#include "erco/counting.hpp"

namespace erco {

// Colorings of K_n using at most two of three colors: 3 * 2^binom(n,2) - 3.
BigCount two_color_lower_bound(int n);  // n >= 2

// Stepwise extension bound: 3 * prod_{t=2}^{n-1} t * 2^t (empty product at n=2).
BigCount rainbow_product_bound(int n);  // n >= 2

// Folded form 3 * (n-1)! * 2^(binom(n-1,2) - 1); integral from n = 3 on.
// Reported for reference only; at small n it drops below the exact count,
// so every assertion uses the product bound instead.
std::optional<BigCount> rainbow_closed_form(int n);

// Largest extension count c(v, K^_t) over all rainbow-triangle-free
// 3-colorings of K_t, with the bound t * 2^t (valid for t >= 2).
struct MaxExtensionReport {
    int t = 0;
    RunStatus status = RunStatus::complete;
    BigCount max_extension;
    BigCount bound;  // t * 2^t
    bool bound_holds = false;
};
MaxExtensionReport max_extension_count(int t, const CountOptions& opts = {});  // t <= 5

// Exact rainbow-free count on K_n with both bounds checked.
struct RainbowKnReport {
    int n = 0;
    RunStatus status = RunStatus::complete;
    BigCount exact_count;
    BigCount lower_bound;
    BigCount product_bound;
    std::optional<BigCount> closed_form;
    std::optional<MaxExtensionReport> extension;  // over K_{n-1}, for n >= 3
    bool sandwich_ok = false;  // lower <= exact <= product
};
RainbowKnReport rainbow_count_kn(int n, const CountOptions& opts = {});  // n <= 6

}  // namespace erco
