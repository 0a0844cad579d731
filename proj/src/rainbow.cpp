#include "erco/rainbow.hpp"

#include <numeric>
#include <stdexcept>

namespace erco {

BigCount two_color_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("two_color_lower_bound: n >= 2 required");
    return 3 * pow2(static_cast<unsigned>(n * (n - 1) / 2)) - 3;
}

BigCount rainbow_product_bound(int n) {
    if (n < 2) throw std::invalid_argument("rainbow_product_bound: n >= 2 required");
    BigCount b = 3;
    for (int t = 2; t <= n - 1; ++t) b *= BigCount(t) * pow2(static_cast<unsigned>(t));
    return b;
}

std::optional<BigCount> rainbow_closed_form(int n) {
    if (n < 3) return std::nullopt;
    BigCount fact = 1;
    for (int t = 2; t <= n - 1; ++t) fact *= t;
    return 3 * fact * pow2(static_cast<unsigned>((n - 1) * (n - 2) / 2 - 1));
}

MaxExtensionReport max_extension_count(int t, const CountOptions& opts) {
    if (t < 1) throw std::invalid_argument("max_extension_count: t >= 1 required");
    if (t > 5) throw std::out_of_range("max_extension_count: t > 5 exceeds the sweep budget");
    MaxExtensionReport rep;
    rep.t = t;
    rep.bound = BigCount(t) * pow2(static_cast<unsigned>(t));
    Pattern r0 = rainbow_pattern(3);
    SimpleGraph kt = complete_graph(t);
    std::vector<int> targets(t);
    std::iota(targets.begin(), targets.end(), 0);
    ExtensionCounter counter(kt, targets, r0, 3);
    CliqueMatcher matcher(r0);
    BudgetMeter meter(opts.budget);
    BigCount best = 0;
    bool ok = enumerate_good_colorings(kt, r0, 3, meter, [&](const EdgeColoring& colors) {
        auto v = counter.count(colors, matcher, meter);
        if (!v) return false;
        if (*v > best) best = std::move(*v);
        return true;
    });
    if (!ok) {
        rep.status = meter.status();
        return rep;
    }
    rep.max_extension = best;
    rep.bound_holds = rep.max_extension <= rep.bound;
    return rep;
}

RainbowKnReport rainbow_count_kn(int n, const CountOptions& opts) {
    if (n < 2) throw std::invalid_argument("rainbow_count_kn: n >= 2 required");
    if (n > 6) throw std::out_of_range("rainbow_count_kn: n > 6 exceeds the counting budget");
    RainbowKnReport rep;
    rep.n = n;
    rep.lower_bound = two_color_lower_bound(n);
    rep.product_bound = rainbow_product_bound(n);
    rep.closed_form = rainbow_closed_form(n);
    CountResult exact = count_colorings(complete_graph(n), rainbow_pattern(3), 3, opts);
    if (exact.status != RunStatus::complete) {
        rep.status = exact.status;
        return rep;
    }
    rep.exact_count = exact.count;
    if (n >= 3) {
        rep.extension = max_extension_count(n - 1, opts);
        if (rep.extension->status != RunStatus::complete) {
            rep.status = rep.extension->status;
            return rep;
        }
    }
    rep.sandwich_ok = rep.lower_bound <= rep.exact_count && rep.exact_count <= rep.product_bound;
    return rep;
}

}  // namespace erco
