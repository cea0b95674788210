#pragma once

#include <cstdint>
#include <optional>

#include "cprefix/exact.hpp"
#include "cprefix/instance.hpp"

namespace cprefix {

// One of the L deletion classes: the forest left after removing this class's
// edges. Components cover every vertex and are vertex-disjoint.
struct LayerClass {
    std::vector<Component> components;
    std::vector<Edge> deleted_edges;
};

struct LayerDecomposition {
    int levels = 0;  // L
    std::vector<LayerClass> classes;
};

// Splits a rooted binary tree into L classes: class c deletes exactly the
// edges whose child endpoint has depth congruent to c mod L, so every edge
// is deleted in exactly one class and every remaining component spans at
// most L consecutive depth levels.
//
// Throws ValidationError when some vertex has more than two children under
// the given root, or when L < 2.
LayerDecomposition decompose(const CPInstance& instance, int root, int levels);

struct ApproxResult {
    int best_class = 0;
    long long layer_value = 0;     // sum of exact optima over the best class
    long long realized_value = 0;  // evaluate() of the stitched assignment
    int levels = 0;                // L
    Assignment stitched;
    std::optional<bool> guarantee_holds;  // see record_exact

    // Records whether layer_value * L >= (L - 1) * exact_value, the averaging
    // guarantee, once the exact optimum is known. Integer arithmetic only.
    void record_exact(long long exact_value) {
        guarantee_holds = layer_value * levels >= (levels - 1) * exact_value;
    }
};

// Solves every class's components exactly, picks the best class (smallest
// index on ties), and stitches that class's per-component optimal
// permutations into one assignment for the whole tree. Edges deleted in the
// best class may still earn incidental benefit, so
// realized_value >= layer_value.
ApproxResult solve_approx(const CPInstance& instance, int root, int levels,
                          const ExactGuard& guard = {});

// Class count for a target quality: with epsilon, L = max(2, ceil(1/epsilon));
// without, L = max(2, floor(log2 log2 n)). The epsilon-free form requires
// n >= 2. Integer arithmetic throughout the epsilon-free path.
int choose_block_height(std::uint64_t n, std::optional<double> epsilon = std::nullopt);

}  // namespace cprefix
