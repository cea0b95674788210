#pragma once

#include <cstdint>
#include <random>

#include "cprefix/instance.hpp"
#include "cprefix/nn.hpp"

namespace cprefix {

// Seeded generators with pinned-down randomness: all draws come from
// std::mt19937_64 (whose sequence the standard fixes) through the helpers
// below, so identical seeds give identical instances on every platform.

// Uniform value in [0, k). Plain modulo draw.
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t k);

// True with probability p, via a 53-bit uniform in [0, 1).
bool rng_chance(std::mt19937_64& rng, double p);

struct LabelParams {
    int universe = 4;    // distinct tokens available
    int labels_min = 1;  // per-vertex set size range, clamped to universe
    int labels_max = 3;
};

// Binary tree grown by attaching each new vertex to a uniformly random
// vertex that still has fewer than two children; rooted at vertex 0.
CPInstance gen_binary_tree(int n, const LabelParams& labels, std::uint64_t seed);

// Star with center 0 and n-1 leaves; every vertex samples its label set the
// same way the tree generator does.
CPInstance gen_star(int n, const LabelParams& labels, std::uint64_t seed);

// Each (u, v) pair gets an edge independently with probability p.
NNInstance gen_bipartite(int nu, int nv, double p, std::uint64_t seed);

}  // namespace cprefix
