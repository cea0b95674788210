#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cprefix/instance.hpp"

namespace cprefix {

using VertexBits = boost::dynamic_bitset<std::uint64_t>;

// Bipartite graph with sides U and V, stored as one neighborhood bitset per
// U vertex. `vnames` optionally carries label tokens for the V side (set by
// the star reduction); empty means unnamed.
struct NNInstance {
    int nu = 0;
    int nv = 0;
    std::vector<VertexBits> adjacency;  // adjacency[u] over V, size nv
    std::vector<std::string> vnames;

    // Validates ranges, duplicate edges, and (when given) the name table.
    static NNInstance make(int nu, int nv, std::span<const std::pair<int, int>> edges,
                           std::vector<std::string> vnames = {});

    bool has_edge(int u, int v) const { return adjacency[u].test(v); }
    long long edge_count() const;
    bool operator==(const NNInstance& other) const {
        return nu == other.nu && nv == other.nv && adjacency == other.adjacency;
    }
};

// An ordered chain u_1..u_k with restriction set V', feasible when the
// restricted neighborhoods are nested:
//   adj(u_1) & V'  >=  adj(u_2) & V'  >=  ...  >=  adj(u_k) & V'.
// step_sizes[i] = |adj(u_i) & V'|, cost = their sum. Construction verifies
// nesting; non-nested chains are rejected with FeasibilityError.
struct NNSolution {
    std::vector<int> chain;
    VertexBits vprime;
    std::vector<int> step_sizes;  // non-increasing
    long long cost = 0;

    static NNSolution make(const NNInstance& g, std::vector<int> chain, VertexBits vprime);
};

// Complete bipartite subgraph. Construction verifies completeness against
// the instance.
struct Biclique {
    std::vector<int> uside;  // sorted
    std::vector<int> vside;  // sorted

    long long edge_count() const {
        return static_cast<long long>(uside.size()) * static_cast<long long>(vside.size());
    }

    static Biclique make(const NNInstance& g, std::vector<int> uside, std::vector<int> vside);
};

// --- reductions -----------------------------------------------------------
//
// nn_to_star lays the star out as: vertex 0 = center carrying one label per
// V vertex, vertex i+1 = leaf for u_i carrying the labels of its
// neighborhood. Unnamed V vertices get zero-padded tokens ("v00", "v01", ...)
// so that token order equals V index order.
//
// star_to_nn inverts this for any star: U = the leaves in increasing vertex
// id, V = the center's labels in token order (kept as the name table), and
// leaf labels outside the center's set are dropped.

CPInstance nn_to_star(const NNInstance& g);
NNInstance star_to_nn(const CPInstance& star, int center);  // ValidationError: not a star

// Builds star permutations from a chain: the center lists the innermost
// restricted neighborhood first, then each enclosing difference block, then
// its leftover labels; chain leaves start with their restricted
// neighborhood in center order. The resulting total benefit is >= cost.
// Expects the nn_to_star layout (center 0, leaf i+1 for u_i).
Assignment translate_nn_to_cp(const NNSolution& solution, const CPInstance& star);

// Reads a chain off an assignment: leaves with positive benefit ordered by
// decreasing benefit (vertex id on ties), V' = the labels of the longest
// benefited center prefix. When feasible the cost is >= the assignment's
// total benefit; interleaved prefixes can make the read-off infeasible, in
// which case FeasibilityError propagates from NNSolution::make.
NNSolution translate_cp_to_nn(const Assignment& assignment, const CPInstance& star,
                              int center);

// --- exact solvers ---------------------------------------------------------

// Optimal chain over every V' subset (ascending mask order; within one V',
// distinct restricted neighborhoods are chained by strict containment with
// all equal-neighborhood vertices included). Guard: nv <= 24.
NNSolution solve_nn_exact(const NNInstance& g);

// Maximum edge biclique by enumerating subsets of the smaller side and
// intersecting neighborhoods; ties prefer the smaller subset mask.
// Guard: min(nu, nv) <= 24.
Biclique solve_ebcs_exact(const NNInstance& g);

// --- constructions ---------------------------------------------------------

// A biclique is a chain with all restricted neighborhoods equal; cost equals
// the biclique's edge count.
NNSolution biclique_to_nn(const NNInstance& g, const Biclique& b);

// Best prefix biclique ({u_1..u_i}, adj(u_i) & V') over i, maximizing
// i * step_sizes[i-1], smallest i on ties. Guarantees
// edge_count * H_k >= cost for a chain of length k.
Biclique extract_prefix_biclique(const NNInstance& g, const NNSolution& solution);

// The harmonic-ratio family: nu = nv = n, u_i adjacent to the first
// floor(n/i) V vertices (1-based i).
NNInstance tight_family(int n);

// --- text format ------------------------------------------------------------
//
//   nn <nU> <nV>
//   edge <u> <v>     0-based, u in U, v in V
//
NNInstance parse_nn(std::string_view text);
std::string serialize_nn(const NNInstance& g);  // edges sorted by (u, v)

}  // namespace cprefix
