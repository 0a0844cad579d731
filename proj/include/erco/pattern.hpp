#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "erco/graph.hpp"

namespace erco {

// Index of pair {i, j}, i < j, in lexicographic order over k vertices.
inline int pair_index(int i, int j, int k) {
    return i * (2 * k - i - 1) / 2 + (j - i - 1);
}
inline int num_pairs(int k) { return k * (k - 1) / 2; }

// An edge-set partition of K_k, identified by its canonical code: the
// lexicographic minimum, over all k! vertex permutations, of the class table
// flattened in pair order with classes renamed by first appearance.
class Pattern {
public:
    // class_table[pair_index(i,j,k)] holds an arbitrary class id per edge.
    static Pattern canonicalize(const std::vector<int>& class_table, int k);

    int k() const { return k_; }
    int num_classes() const { return num_classes_; }
    bool is_monochromatic() const { return num_classes_ == 1; }
    const std::vector<std::uint8_t>& table() const { return table_; }

    // code = [k, num_classes, table...]; code_hex is its printable form.
    std::vector<std::uint8_t> code() const;
    std::string code_hex() const;

    bool operator==(const Pattern&) const = default;

private:
    Pattern(int k, int num_classes, std::vector<std::uint8_t> table)
        : k_(k), num_classes_(num_classes), table_(std::move(table)) {}

    int k_ = 0;
    int num_classes_ = 0;
    std::vector<std::uint8_t> table_;  // canonical representative
};

// True iff the colored clique's partition into equal-color classes is a
// vertex-permuted, class-relabeled copy of the pattern. Colors are given in
// pair order over the clique's k vertices.
bool matches(std::span<const std::uint8_t> clique_colors, const Pattern& p);

// Memoizing matcher for hot loops; one instance per worker thread.
class CliqueMatcher {
public:
    explicit CliqueMatcher(const Pattern& p) : pattern_(p) {}

    bool matches(std::span<const std::uint8_t> clique_colors);

private:
    Pattern pattern_;
    std::unordered_map<std::string, bool> memo_;  // keyed by relabeled table
};

struct AlmostMonoResult {
    bool almost = false;
    int special_vertex = -1;
};
// A non-monochromatic pattern where, for some vertex x, all edges avoiding x
// share one class and some edge at x lies in that class too.
AlmostMonoResult is_almost_monochromatic(const Pattern& p);

// Named patterns: T0, R0, P1, P2, P3, MONO(k), RAINBOW(k).
struct PatternCatalogEntry {
    std::string name;
    Pattern pattern;
};
const std::vector<PatternCatalogEntry>& pattern_catalog();
Pattern mono_pattern(int k);
Pattern rainbow_pattern(int k);
// Accepts "T0", "MONO3", "MONO(3)", "RAINBOW4", ... (case-insensitive).
std::optional<Pattern> pattern_from_name(const std::string& name);

// JSON form: {"k": int, "classes": [[[i,j],...],...]} with 0-based vertices;
// classes must be nonempty, disjoint, and cover all pairs.
Pattern pattern_from_json(const std::string& text);
std::string pattern_to_json(const Pattern& p);

// True iff every 2-coloring of E(K_k) contains a monochromatic copy of J,
// i.e. R(J, J) <= k. Exhaustive over 2^binom(k,2) colorings; k <= 6.
bool ramsey_le(const SimpleGraph& j, int k);

}  // namespace erco
