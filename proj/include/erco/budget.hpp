#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>

namespace erco {

// Caps on a single counting/search run. Zero max_seconds means no time cap.
struct Budget {
    std::uint64_t max_nodes = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = 0.0;
};

enum class RunStatus { complete, node_budget_exceeded, time_budget_exceeded };

inline const char* to_string(RunStatus s) {
    switch (s) {
        case RunStatus::complete: return "complete";
        case RunStatus::node_budget_exceeded: return "node_budget_exceeded";
        case RunStatus::time_budget_exceeded: return "time_budget_exceeded";
    }
    return "unknown";
}

// Shared between the workers of one run. A tripped meter never emits a count;
// partial results are reported as such, never as wrong exact values.
class BudgetMeter {
public:
    explicit BudgetMeter(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Adds n search nodes; returns false once any cap is exceeded.
    bool charge(std::uint64_t n) {
        if (trip_.load(std::memory_order_relaxed) != 0) return false;
        std::uint64_t total = nodes_.fetch_add(n, std::memory_order_relaxed) + n;
        if (total > budget_.max_nodes) {
            int expected = 0;
            trip_.compare_exchange_strong(expected, 1);
            return false;
        }
        if (budget_.max_seconds > 0.0 && elapsed_seconds() > budget_.max_seconds) {
            int expected = 0;
            trip_.compare_exchange_strong(expected, 2);
            return false;
        }
        return true;
    }

    bool tripped() const { return trip_.load(std::memory_order_relaxed) != 0; }

    RunStatus status() const {
        switch (trip_.load(std::memory_order_relaxed)) {
            case 1: return RunStatus::node_budget_exceeded;
            case 2: return RunStatus::time_budget_exceeded;
            default: return RunStatus::complete;
        }
    }

    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<int> trip_{0};  // 0 ok, 1 nodes, 2 time
};

// Per-worker batching front for a BudgetMeter; flushes every kBatch ticks so
// the hot loop touches no atomics.
class NodeTicker {
public:
    explicit NodeTicker(BudgetMeter& m) : meter_(&m) {}
    NodeTicker(const NodeTicker&) = delete;
    ~NodeTicker() { flush(); }

    bool tick() {
        if (++local_ >= kBatch) return flush();
        return ok_;
    }

    bool flush() {
        if (local_ > 0) {
            ok_ = meter_->charge(local_) && ok_;
            local_ = 0;
        }
        if (meter_->tripped()) ok_ = false;
        return ok_;
    }

private:
    static constexpr std::uint64_t kBatch = 4096;
    BudgetMeter* meter_;
    std::uint64_t local_ = 0;
    bool ok_ = true;
};

}  // namespace erco
