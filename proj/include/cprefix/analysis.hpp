#pragma once

#include <optional>
#include <vector>

#include "cprefix/instance.hpp"
#include "cprefix/nn.hpp"
#include "cprefix/numeric.hpp"

namespace cprefix {

struct SubtreeCountReport {
    int height = 0;                 // deepest level below the root
    std::vector<BigInt> rooted;     // f(v): connected subtrees of v's rooted
                                    // subtree that contain v
    BigInt total;                   // sum of f(v); every connected subtree
                                    // counted once at its vertex nearest the root
    BigInt bound_exponent;          // 2^(h+1)
    std::optional<BigInt> bound;    // 2^(2^(h+1)), materialized while printable
    bool within_bound = false;      // total <= 2^(2^(h+1))
};

// Counts connected subtrees of a rooted binary tree via
// f(v) = product over children of (1 + f(child)). Exact arithmetic; the
// doubly-exponential bound is compared by bit length, so tall trees work
// even when the bound itself is too large to write down.
SubtreeCountReport count_subtrees(const CPInstance& instance, int root);

// Exact n-th harmonic number; harmonic(0) = 0.
Rational harmonic(int n);

struct RatioReport {
    long long ebcs = 0;
    long long nn = 0;
    Rational ratio;    // nn / ebcs; 1/1 for the edgeless instance
    Rational h_bound;  // H_{|U|}
    bool sandwich_ok = false;
};

// Runs both exact solvers and checks ebcs <= nn <= H_{|U|} * ebcs with exact
// rational arithmetic.
RatioReport ratio_experiment(const NNInstance& g);

}  // namespace cprefix
